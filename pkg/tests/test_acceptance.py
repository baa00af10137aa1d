"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from math import comb

import pytest

from hopfring.barss import EXTENSION_SPACES, CollapseKind, StructureViolation, deloop, run_cycle, verify_extensions
from hopfring.checks import antipode_axiom
from hopfring.circle import circle0, circle_chain, relation9_holds
from hopfring.elements import (
    HopfElement,
    antipode,
    basis,
    chi_z,
    coproduct,
    coproduct_left,
    coproduct_right,
    frobenius,
    random_element,
    star_pow,
    tensor_star,
    verschiebung,
)
from hopfring.f2series import binom_mod2, dim_by_enumeration
from hopfring.presentations import registry_items, registry_lookup

SEED = 1729
STEPS = [("KO", n) for n in range(8)] + [("KU", n) for n in range(2)]


def c1_dimension_identities():
    t = time.perf_counter()
    bad = [f"{s}{n}" for s, n in STEPS if not deloop(s, n, 40).dimension_match]
    dt = time.perf_counter() - t
    return not bad and dt < 5, f"10 steps to degree 40 in {dt:.2f}s; mismatches: {bad or 'none'}"


def c2_closure():
    t = time.perf_counter()
    ko = run_cycle("KO", 40)
    ku = run_cycle("KU", 40)
    ok = (ko.steps[-1].target == ko.steps[0].input and ku.steps[-1].target == ku.steps[0].input
          and ko.closure and ku.closure)
    dt = time.perf_counter() - t
    return ok and dt < 1, f"KO_8 = KO_0 and KU_2 = KU_0 presentations ({dt:.2f}s)"


def c3_relation9():
    bad = [i for i in range(13) if not relation9_holds(i)]
    o = HopfElement.olz
    # spot check one instance written out directly
    direct = circle0(o(1), o(5)) == circle0(star_pow(o(1), 2), o(4))
    return not bad and direct, f"i = 0..12; failures: {bad or 'none'}"


def c4_rewrite_chain():
    o = HopfElement.olz
    lhs = circle_chain(o(1), o(1), o(2), o(4))
    rhs = star_pow(o(1), 8)
    return lhs == rhs and not lhs.is_zero(), f"olz1∘olz1∘olz2∘olz4 = {lhs}"


def c5_antipode():
    z1 = HopfElement.z(1)
    first = chi_z(1) == z1 * HopfElement.grouplike(-2) and antipode(z1) == z1 * HopfElement.grouplike(-2)
    count = 0
    ok = True
    for space in ("KO0", "KU0"):
        for d in range(13):
            for m in basis(d, (-2, -1, 0, 1, 3), space):
                count += 1
                ok = ok and antipode_axiom(HopfElement(space, frozenset([m])))
    return first and ok, f"χz1 = z1*[-2]; Σ a'*χa'' = ε(a)[0] on {count} basis monomials"


def c6_lucas():
    bad = [(j, k) for j in range(65) for k in range(65) if binom_mod2(j, k) != comb(j + k, j) % 2]
    return not bad, f"65×65 pairs; disagreements: {bad[:3] or 'none'}"


def c7_enumeration():
    from hopfring.presentations import poincare
    bad = []
    for s, n, pres in registry_items():
        series = poincare(pres, 24).coefficients
        if any(series[d] != dim_by_enumeration(pres, d) for d in range(25)):
            bad.append(f"{s}{n}")
    return not bad, f"12 registry presentations to degree 24; mismatches: {bad or 'none'}"


def c8_fv_laws():
    rng = random.Random(SEED)
    t = time.perf_counter()
    bad = 0
    pairs = 250
    for _ in range(pairs):
        a = random_element(rng, 10)
        b = random_element(rng, 10)
        bad += verschiebung(frobenius(a)) != frobenius(verschiebung(a))
        bad += verschiebung(circle0(a, b)) != circle0(verschiebung(a), verschiebung(b))
        bad += frobenius(circle0(a, verschiebung(b))) != circle0(frobenius(a), b)
    dt = time.perf_counter() - t
    return bad == 0 and dt < 10, f"{pairs} seeded pairs, degree ≤ 10, {bad} failures, {dt:.2f}s"


def c9_hopf_axioms():
    rng = random.Random(SEED + 1)
    bad = 0
    count = 250
    for _ in range(count):
        space = rng.choice(("KO0", "KU0"))
        a = random_element(rng, 12, space)
        b = random_element(rng, 12, space)
        psi = coproduct(a)
        bad += coproduct_left(psi, space) != coproduct_right(psi, space)
        bad += coproduct(a * b) != tensor_star(coproduct(a), coproduct(b))
        bad += antipode(antipode(a)) != a
    return bad == 0, f"{count} seeded elements, degree ≤ 12, {bad} failures"


def c10_extensions():
    bad = []
    n_checks = 0
    for s, ns in EXTENSION_SPACES.items():
        for n in ns:
            try:
                n_checks += len(verify_extensions(s, n, 32).checks)
            except StructureViolation as exc:
                bad.append(f"{s}{n}: {exc}")
    return not bad, f"10 spaces, {n_checks} structural checks at bound 32; failures: {bad or 'none'}"


EXPECTED_COLLAPSE = {
    ("KO", 0): CollapseKind.FILTRATION1, ("KO", 1): CollapseKind.FILTRATION1,
    ("KO", 2): CollapseKind.FILTRATION1, ("KO", 4): CollapseKind.FILTRATION1,
    ("KU", 0): CollapseKind.FILTRATION1,
    ("KO", 3): CollapseKind.EVEN_TOTAL_DEGREE, ("KO", 5): CollapseKind.EVEN_TOTAL_DEGREE,
    ("KU", 1): CollapseKind.EVEN_TOTAL_DEGREE,
    ("KO", 6): CollapseKind.ASSUMED, ("KO", 7): CollapseKind.ASSUMED,
}


def c11_collapse():
    got = {step: deloop(*step, 40).collapse_mode for step in STEPS}
    bad = [f"{s}{n}" for (s, n), c in got.items() if c.kind is not EXPECTED_COLLAPSE[(s, n)]]
    cited = all(got[("KO", n)].citation for n in (6, 7))
    return not bad and cited, f"mismatched steps: {bad or 'none'}"


CRITERIA = [
    (1, "delooping dimension identities", c1_dimension_identities),
    (2, "cycle closure", c2_closure),
    (3, "relation 9 for i = 0..12", c3_relation9),
    (4, "olz1∘olz1∘olz2∘olz4 rewrite chain", c4_rewrite_chain),
    (5, "antipode", c5_antipode),
    (6, "Lucas vs factorial", c6_lucas),
    (7, "product formula vs enumeration", c7_enumeration),
    (8, "Frobenius/Verschiebung laws", c8_fv_laws),
    (9, "Hopf axioms", c9_hopf_axioms),
    (10, "extension structure", c10_extensions),
    (11, "collapse classification", c11_collapse),
]


def _line(num, title, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {num:>2}: {title} ({detail})"


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(num, title, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + _line(num, title, ok, detail))
    assert ok, detail


def main() -> int:
    failures = 0
    for num, title, fn in CRITERIA:
        ok, detail = fn()
        failures += not ok
        print(_line(num, title, ok, detail))
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
