"""Named verification suites: relations, Hopf axioms, F/V laws, extension structure."""

from __future__ import annotations

import random
from math import comb

from .barss import EXTENSION_SPACES, Check, StructureViolation, verify_extensions
from .circle import (
    Shift,
    ShiftedElement,
    SuspendedForm,
    circle0,
    normalize,
    relation9_holds,
    relations_homogeneous,
    shift_by,
    verify_rewrite_chain_rel5,
)
from .elements import (
    HopfElement,
    Monomial,
    antipode,
    basis,
    chi_z,
    coproduct,
    coproduct_left,
    coproduct_right,
    counit,
    frobenius,
    random_element,
    star,
    tensor_star,
    toggle,
    verschiebung,
)
from .f2series import binom_mod2

DEFAULT_SEED = 20240601
SUITES = ("relations", "hopf-axioms", "extensions")


def _el(space: str, monos) -> HopfElement:
    return HopfElement(space, frozenset(monos))


def antipode_axiom(a: HopfElement) -> bool:
    """sum a' * chi(a'') = eps(a)[0]."""
    acc: set = set()
    for left, right in coproduct(a):
        for m in star(_el(a.space, [left]), antipode(_el(a.space, [right]))).terms:
            toggle(acc, m)
    want = {Monomial(0, ())} if counit(a) else set()
    return acc == want


def relation_checks(max_i: int = 12) -> list[Check]:
    o = HopfElement.olz
    out = [
        Check(f"rel9[i=0..{max_i}]", all(relation9_holds(i) for i in range(max_i + 1)),
              "olz_1∘olz_{2i+1} = olz_1^2∘olz_{2i}"),
        Check("rel5-chain", verify_rewrite_chain_rel5() == 1, "olz_1∘olz_1∘olz_2∘olz_4 = olz_1^{*8} ≠ 0"),
        Check("lucas-vs-factorial", all(binom_mod2(j, k) == comb(j + k, j) % 2
                                        for j in range(65) for k in range(65)), "j, k ≤ 64"),
        Check("homogeneous", relations_homogeneous(), "both sides of every rule share a bidegree"),
    ]
    # rel2-rel4 and the Dyer-Lashof square, through the normalizer
    e = SuspendedForm("KO", 1, 0)
    out.append(Check("rel2", normalize(e.with_exponent(2)) == normalize(SuspendedForm("KO", 1, 1)),
                     "e^2 = e∘z_1"))
    e2 = SuspendedForm("KO", 2, 0)
    out.append(Check("rel3", normalize(e2.with_exponent(2)) == normalize(SuspendedForm("KO", 2, 2)),
                     "(e^2)^2 = e^2∘z_2"))
    out.append(Check("rel4", not normalize(SuspendedForm("KO", 3, 0, star_exponent=2)), "(e^3)^2 = 0"))
    # rel5-rel7 through the shift rules
    r5 = shift_by(Shift(lam=1), SuspendedForm("KO", 4, 0))
    out.append(Check("rel5", r5.base == o(4) and r5.shift == Shift(beta=1), "e^4∘[λ] = [β]∘olz_4"))
    r6 = shift_by(Shift(eta=1), e)
    out.append(Check("rel6", r6.base == o(1) and r6.shift.is_identity(), "e∘[η] = olz_1"))
    r7 = shift_by(Shift(beta=1), e2)
    out.append(Check("rel7", r7.base == o(2) and r7.shift == Shift(eta=2), "e^2∘[β] = olz_2∘[η^2]"))
    out.append(Check("rel8", ShiftedElement(o(1), Shift(beta=1)).is_zero()
                     and ShiftedElement(o(2), Shift(beta=1)).is_zero(), "olz_1∘[β] = olz_2∘[β] = 0"))
    # antipode
    z1 = HopfElement.z(1)
    out.append(Check("chi(z_1)", chi_z(1) == z1 * HopfElement.grouplike(-2), "χz_1 = z_1*[-2]"))
    ok = all(antipode_axiom(_el(space, [m]))
             for space in ("KO0", "KU0") for d in range(13) for m in basis(d, (-1, 0, 2), space))
    out.append(Check("antipode-axiom[deg≤12]", ok, "Σ a'*χa'' = ε(a)[0] on basis monomials"))
    return out


def hopf_axiom_checks(seed: int = DEFAULT_SEED, count: int = 200, maxdeg: int = 12) -> list[Check]:
    rng = random.Random(seed)
    coassoc = bialg = invol = anti = True
    witness = ""
    for _ in range(count):
        space = rng.choice(("KO0", "KU0"))
        a = random_element(rng, maxdeg, space)
        b = random_element(rng, maxdeg, space)
        psi = coproduct(a)
        if coproduct_left(psi, space) != coproduct_right(psi, space):
            coassoc, witness = False, witness or f"coassociativity fails on {a}"
        if coproduct(a * b) != tensor_star(coproduct(a), coproduct(b)):
            bialg, witness = False, witness or f"ψ(a*b) fails on a={a}, b={b}"
        if antipode(antipode(a)) != a:
            invol, witness = False, witness or f"χχ ≠ id on {a}"
        if not antipode_axiom(a):
            anti, witness = False, witness or f"antipode axiom fails on {a}"
    return [
        Check("coassociativity", coassoc, witness),
        Check("bialgebra", bialg, witness),
        Check("antipode-involutive", invol, witness),
        Check("antipode-axiom", anti, witness),
    ]


def fv_law_checks(seed: int = DEFAULT_SEED, count: int = 200, maxdeg: int = 10) -> list[Check]:
    rng = random.Random(seed)
    results = {"VF=FV": True, "V(a∘b)=V(a)∘V(b)": True, "F(a∘Vb)=F(a)∘b": True}
    witness = {k: "" for k in results}
    for _ in range(count):
        a = random_element(rng, maxdeg)
        b = random_element(rng, maxdeg)
        if verschiebung(frobenius(a)) != frobenius(verschiebung(a)):
            results["VF=FV"] = False
            witness["VF=FV"] = witness["VF=FV"] or f"a={a}"
        if verschiebung(circle0(a, b)) != circle0(verschiebung(a), verschiebung(b)):
            results["V(a∘b)=V(a)∘V(b)"] = False
            witness["V(a∘b)=V(a)∘V(b)"] = witness["V(a∘b)=V(a)∘V(b)"] or f"a={a}, b={b}"
        if frobenius(circle0(a, verschiebung(b))) != circle0(frobenius(a), b):
            results["F(a∘Vb)=F(a)∘b"] = False
            witness["F(a∘Vb)=F(a)∘b"] = witness["F(a∘Vb)=F(a)∘b"] or f"a={a}, b={b}"
    return [Check(k, v, witness[k]) for k, v in results.items()]


def extension_checks(bound: int = 32, spectra=("KO", "KU")) -> list[Check]:
    """One summary check per space; the first failing sub-check is the detail."""
    out = []
    for s in spectra:
        for n in EXTENSION_SPACES[s]:
            try:
                rep = verify_extensions(s, n, bound)
                parts = sorted({c.name.split(":")[0] for c in rep.checks})
                out.append(Check(f"{s}{n}", True, f"{len(rep.checks)} checks {' '.join(parts)}"))
            except StructureViolation as exc:
                out.append(Check(f"{s}{n}", False, str(exc)))
    return out


def run_suite(name: str, seed: int = DEFAULT_SEED, bound: int = 32, spectra=("KO", "KU")) -> list[Check]:
    if name == "relations":
        return relation_checks()
    if name == "hopf-axioms":
        return hopf_axiom_checks(seed) + fv_law_checks(seed)
    if name == "extensions":
        return extension_checks(bound, spectra)
    if name == "all":
        return [c for s in SUITES for c in run_suite(s, seed, bound, spectra)]
    raise ValueError(f"unknown suite {name!r}")
