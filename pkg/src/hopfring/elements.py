"""Exact F2 arithmetic in H_*(Z×BO) and H_*(Z×BU).

Basis monomials are [n]*olz_1^{a_1}*olz_2^{a_2}*..., where [n] is the
grouplike class of the component n and olz_i = z_i*[-1].  The algebra unit
is [0]; z_0 = [1] is a grouplike that is not the unit.  An element is a set
of monomials (coefficients in F2), so addition is symmetric difference.

The KU flavour uses the same machinery with odd-index generators dropped on
construction, since z_{2i+1} maps to zero in H_*(Z×BU).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

SPACES = ("KO0", "KU0")


class SpaceMismatch(ValueError):
    pass


class Monomial(NamedTuple):
    """[component] * prod olz_i^{exponents[i-1]}, trailing zeros stripped."""

    component: int
    exponents: tuple[int, ...] = ()

    @property
    def degree(self) -> int:
        return sum((i + 1) * e for i, e in enumerate(self.exponents))

    @property
    def star_length(self) -> int:
        return sum(self.exponents)

    def generators(self) -> dict[int, int]:
        return {i + 1: e for i, e in enumerate(self.exponents) if e}

    def render(self) -> str:
        parts = []
        for i, e in enumerate(self.exponents):
            if e:
                parts.append(f"olz{i + 1}" + (f"^{e}" if e > 1 else ""))
        if self.component != 0 or not parts:
            parts.insert(0, f"[{self.component}]")
        return "*".join(parts)


def make_monomial(component: int = 0, gens: dict[int, int] | None = None) -> Monomial:
    if not gens:
        return Monomial(component, ())
    top = max(i for i, e in gens.items() if e) if any(gens.values()) else 0
    exps = [0] * top
    for i, e in gens.items():
        if i < 1:
            raise ValueError("generator indices start at 1")
        if e < 0:
            raise ValueError("negative exponent")
        if e:
            exps[i - 1] = e
    return Monomial(component, tuple(exps))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    ea, eb = a.exponents, b.exponents
    if len(ea) < len(eb):
        ea, eb = eb, ea
    if not eb:
        return Monomial(a.component + b.component, ea)
    out = list(ea)
    for i, e in enumerate(eb):
        out[i] += e
    return Monomial(a.component + b.component, tuple(out))


ONE = Monomial(0, ())


def _gen(i: int) -> Monomial:
    exps = [0] * i
    exps[i - 1] = 1
    return Monomial(0, tuple(exps))


# --- raw term-set arithmetic (frozensets of monomials) ---------------------

def toggle(acc: set, item) -> None:
    if item in acc:
        acc.remove(item)
    else:
        acc.add(item)


def raw_star(a: Iterable[Monomial], b: Iterable[Monomial]) -> frozenset:
    b = list(b)
    acc: set = set()
    for x in a:
        for y in b:
            toggle(acc, mono_mul(x, y))
    return frozenset(acc)


def raw_square(a: Iterable[Monomial]) -> frozenset:
    # cross terms x*y + y*x cancel in characteristic 2
    return frozenset(Monomial(2 * m.component, tuple(2 * e for e in m.exponents)) for m in a)


def raw_pow(a: frozenset, n: int) -> frozenset:
    if n < 0:
        raise ValueError("negative star power of a non-grouplike")
    result: frozenset = frozenset([ONE])
    base = a
    while n:
        if n & 1:
            result = raw_star(result, base)
        n >>= 1
        if n:
            base = raw_square(base)
    return result


def raw_add(*parts: Iterable[Monomial]) -> frozenset:
    acc: set = set()
    for p in parts:
        for m in p:
            toggle(acc, m)
    return frozenset(acc)


def project(space: str, terms: Iterable[Monomial]) -> frozenset:
    """Drop monomials that vanish in the given space (odd generators in KU)."""
    if space == "KU0":
        return frozenset(m for m in terms if not any(e for e in m.exponents[0::2]))
    return frozenset(terms)


def _check_space(space: str) -> str:
    if space not in SPACES:
        raise ValueError(f"unknown space {space!r}; expected one of {SPACES}")
    return space


@dataclass(frozen=True)
class HopfElement:
    space: str
    terms: frozenset

    def __post_init__(self):
        _check_space(self.space)
        object.__setattr__(self, "terms", project(self.space, self.terms))

    # constructors
    @classmethod
    def zero(cls, space: str = "KO0") -> HopfElement:
        return cls(space, frozenset())

    @classmethod
    def one(cls, space: str = "KO0") -> HopfElement:
        return cls(space, frozenset([ONE]))

    @classmethod
    def grouplike(cls, n: int, space: str = "KO0") -> HopfElement:
        return cls(space, frozenset([Monomial(n, ())]))

    @classmethod
    def olz(cls, i: int, space: str = "KO0") -> HopfElement:
        """olz_i, with olz_0 = 1."""
        if i < 0:
            raise ValueError("generator index must be nonnegative")
        return cls(space, frozenset([ONE if i == 0 else _gen(i)]))

    @classmethod
    def z(cls, i: int, space: str = "KO0") -> HopfElement:
        """z_i = [1]*olz_i; z_0 = [1]."""
        m = ONE if i == 0 else _gen(i)
        return cls(space, frozenset([Monomial(1, m.exponents)]))

    @classmethod
    def from_monomials(cls, monos: Iterable[Monomial], space: str = "KO0") -> HopfElement:
        return cls(space, raw_add(monos))

    # queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {m.degree for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def sorted_terms(self) -> list[Monomial]:
        return sorted(self.terms, key=lambda m: (m.component, m.exponents))

    def render(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(m.render() for m in self.sorted_terms())

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"HopfElement({self.space}, {self.render()})"

    # arithmetic
    def _same(self, other: HopfElement) -> None:
        if not isinstance(other, HopfElement):
            raise TypeError(f"expected HopfElement, got {type(other).__name__}")
        if other.space != self.space:
            raise SpaceMismatch(f"{self.space} vs {other.space}")

    def __add__(self, other: HopfElement) -> HopfElement:
        self._same(other)
        return HopfElement(self.space, self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: HopfElement) -> HopfElement:
        return star(self, other)

    def __pow__(self, n: int) -> HopfElement:
        return star_pow(self, n)


def star(a: HopfElement, b: HopfElement) -> HopfElement:
    """The *-product: components add, exponents add, extended bilinearly."""
    a._same(b)
    return HopfElement(a.space, raw_star(a.terms, b.terms))


def star_pow(a: HopfElement, n: int) -> HopfElement:
    if n < 0:
        if len(a.terms) == 1:
            (m,) = a.terms
            if not m.exponents:
                return HopfElement.grouplike(m.component * n, a.space)
        raise ValueError("only grouplikes have negative star powers")
    return HopfElement(a.space, raw_pow(a.terms, n))


# --- coproduct -------------------------------------------------------------

def _tensor_mul(a: frozenset, b: frozenset) -> frozenset:
    acc: set = set()
    for (x1, x2) in a:
        for (y1, y2) in b:
            toggle(acc, (mono_mul(x1, y1), mono_mul(x2, y2)))
    return frozenset(acc)


@lru_cache(maxsize=None)
def _psi_gen(space: str, i: int) -> frozenset:
    """psi(olz_i) = sum_{j+k=i} olz_j ⊗ olz_k."""
    pairs = []
    for j in range(i + 1):
        a = ONE if j == 0 else _gen(j)
        b = ONE if j == i else _gen(i - j)
        pairs.append((a, b))
    if space == "KU0":
        pairs = [(a, b) for a, b in pairs if not any(a.exponents[0::2]) and not any(b.exponents[0::2])]
    return frozenset(pairs)


@lru_cache(maxsize=None)
def _psi_gen_pow(space: str, i: int, e: int) -> frozenset:
    if e == 1:
        return _psi_gen(space, i)
    if e % 2 == 0:
        half = _psi_gen_pow(space, i, e // 2)
        # Frobenius on a tensor square: cross terms cancel
        return frozenset((Monomial(0, tuple(2 * v for v in x.exponents)),
                          Monomial(0, tuple(2 * v for v in y.exponents))) for x, y in half)
    return _tensor_mul(_psi_gen_pow(space, i, e - 1), _psi_gen(space, i))


@lru_cache(maxsize=None)
def coproduct_mono(space: str, m: Monomial) -> frozenset:
    g = Monomial(m.component, ())
    acc = frozenset([(g, g)])
    for idx, e in enumerate(m.exponents):
        if e:
            acc = _tensor_mul(acc, _psi_gen_pow(space, idx + 1, e))
    return acc


def coproduct(a: HopfElement) -> frozenset:
    """psi(a) as a set of (left, right) monomial pairs, coefficients in F2."""
    acc: set = set()
    for m in a.terms:
        for pair in coproduct_mono(a.space, m):
            toggle(acc, pair)
    return frozenset(acc)


def counit(a: HopfElement) -> int:
    """1 iff an odd number of terms are bare grouplikes [n]."""
    return sum(1 for m in a.terms if not m.exponents) % 2


# --- antipode --------------------------------------------------------------

@lru_cache(maxsize=None)
def chi_olz(space: str, n: int) -> frozenset:
    """chi(olz_n) from sum_k olz_k * chi(olz_{n-k}) = 0 for n > 0."""
    if n == 0:
        return frozenset([ONE])
    acc: set = set()
    step = 2 if space == "KU0" else 1
    if n % step:
        return frozenset()
    for k in range(step, n + 1, step):
        g = _gen(k)
        for m in chi_olz(space, n - k):
            toggle(acc, mono_mul(g, m))
    return frozenset(acc)


@lru_cache(maxsize=None)
def _antipode_mono(space: str, m: Monomial) -> frozenset:
    acc = frozenset([Monomial(-m.component, ())])
    for idx, e in enumerate(m.exponents):
        if e:
            acc = raw_star(acc, raw_pow(chi_olz(space, idx + 1), e))
    return acc


def antipode(a: HopfElement) -> HopfElement:
    """chi: [n] -> [-n], extended to olz_i by the recursion above, multiplicatively."""
    acc: set = set()
    for m in a.terms:
        for t in _antipode_mono(a.space, m):
            toggle(acc, t)
    return HopfElement(a.space, frozenset(acc))


def chi_z(n: int, space: str = "KO0") -> HopfElement:
    """chi(z_n) = [-1]*chi(olz_n)."""
    return HopfElement(space, frozenset(Monomial(m.component - 1, m.exponents) for m in chi_olz(space, n)))


# --- Frobenius and Verschiebung -------------------------------------------

def frobenius(a: HopfElement) -> HopfElement:
    """F(a) = a*a."""
    return star(a, a)


def _v_mono(m: Monomial) -> Monomial | None:
    ex = m.exponents
    if any(ex[0::2]):
        return None
    return Monomial(m.component, tuple(ex[1::2]))


def verschiebung(a: HopfElement) -> HopfElement:
    """V(olz_{2i}) = olz_i, V(olz_{2i+1}) = 0, V[n] = [n], multiplicatively."""
    acc: set = set()
    for m in a.terms:
        v = _v_mono(m)
        if v is not None:
            toggle(acc, v)
    return HopfElement(a.space, frozenset(acc))


# --- tensor helpers --------------------------------------------------------

def tensor_star(a: frozenset, b: frozenset) -> frozenset:
    """Componentwise star product of two sums of pure tensors."""
    return _tensor_mul(a, b)


def coproduct_left(pairs: frozenset, space: str) -> frozenset:
    """(psi ⊗ id) applied to a sum of pairs, giving triples."""
    acc: set = set()
    for x, y in pairs:
        for (x1, x2) in coproduct_mono(space, x):
            toggle(acc, (x1, x2, y))
    return frozenset(acc)


def coproduct_right(pairs: frozenset, space: str) -> frozenset:
    acc: set = set()
    for x, y in pairs:
        for (y1, y2) in coproduct_mono(space, y):
            toggle(acc, (x, y1, y2))
    return frozenset(acc)


def basis(degree: int, components: Iterable[int] = (0,), space: str = "KO0") -> Iterator[Monomial]:
    """All basis monomials of the given degree with the given components."""
    step = 2 if space == "KU0" else 1
    for part in _partitions(degree, degree, step):
        gens: dict[int, int] = {}
        for p in part:
            gens[p] = gens.get(p, 0) + 1
        for c in components:
            yield make_monomial(c, gens)


def _partitions(n: int, largest: int, step: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for p in range(min(largest, n), 0, -1):
        if p % step:
            continue
        for rest in _partitions(n - p, p, step):
            yield (p,) + rest


def is_indecomposable_generator(m: Monomial) -> bool:
    return m.component == 0 and m.star_length == 1


def indecomposable_part(a: HopfElement) -> HopfElement:
    """Terms that are a single generator olz_i (component 0)."""
    return HopfElement(a.space, frozenset(m for m in a.terms if is_indecomposable_generator(m)))


def random_element(rng, maxdeg: int, space: str = "KO0", components: tuple[int, ...] = (-1, 0, 1, 2),
                   max_terms: int = 4) -> HopfElement:
    """A homogeneous sum of up to ``max_terms`` distinct basis monomials, drawn from ``rng``."""
    d = rng.randint(0, maxdeg)
    monos = list(basis(d, components, space))
    if not monos:
        return HopfElement.zero(space)
    k = rng.randint(1, min(max_terms, len(monos)))
    return HopfElement.from_monomials(rng.sample(monos, k), space)
