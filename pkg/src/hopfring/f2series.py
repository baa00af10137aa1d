"""Mod-2 binomials and truncated power series for dimension bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence

if TYPE_CHECKING:
    from .presentations import AlgebraPresentation

DEFAULT_MAXDEG = 40
ENUMERATION_BOUND = 40
_INT_LIMIT = 2**63


class NonUnitConstantTerm(ValueError):
    pass


class BoundExceeded(ValueError):
    pass


def binom_mod2(j: int, k: int) -> int:
    """C(j+k, j) mod 2, which by Lucas is 1 iff j and k share no binary digit."""
    if j < 0 or k < 0:
        raise ValueError("binom_mod2 needs nonnegative arguments")
    return int(j & k == 0)


def _checked(c: int) -> int:
    if not -_INT_LIMIT < c < _INT_LIMIT:
        raise OverflowError(f"series coefficient {c} leaves the 64-bit range")
    return c


@dataclass(frozen=True)
class PoincareSeries:
    """Coefficients of t^0..t^maxdeg.

    Dimension series are nonnegative; ``signed=True`` marks the intermediate
    values produced by :func:`series_inv` and friends.
    """

    coefficients: tuple[int, ...]
    maxdeg: int
    signed: bool = False

    def __post_init__(self):
        if self.maxdeg < 0:
            raise ValueError("maxdeg must be nonnegative")
        if len(self.coefficients) != self.maxdeg + 1:
            raise ValueError("need exactly maxdeg + 1 coefficients")
        for c in self.coefficients:
            _checked(c)
            if c < 0 and not self.signed:
                raise ValueError(f"negative dimension {c} in an unsigned series")

    @classmethod
    def from_list(cls, coeffs: Iterable[int], maxdeg: int, signed: bool = False) -> PoincareSeries:
        cs = list(coeffs)[: maxdeg + 1]
        cs += [0] * (maxdeg + 1 - len(cs))
        return cls(tuple(cs), maxdeg, signed)

    @classmethod
    def one(cls, maxdeg: int) -> PoincareSeries:
        return cls.from_list([1], maxdeg)

    @classmethod
    def geometric(cls, d: int, maxdeg: int) -> PoincareSeries:
        """1/(1 - t^d)."""
        if d <= 0:
            raise ValueError("geometric factor needs positive degree")
        return cls.from_list([1 if n % d == 0 else 0 for n in range(maxdeg + 1)], maxdeg)

    @classmethod
    def binomial(cls, d: int, maxdeg: int, sign: int = 1) -> PoincareSeries:
        """1 + sign * t^d."""
        if d <= 0:
            raise ValueError("binomial factor needs positive degree")
        cs = [0] * (maxdeg + 1)
        cs[0] = 1
        if d <= maxdeg:
            cs[d] = sign
        return cls(tuple(cs), maxdeg, signed=sign < 0)

    def coefficient(self, n: int) -> int:
        if n < 0 or n > self.maxdeg:
            raise IndexError(f"degree {n} outside 0..{self.maxdeg}")
        return self.coefficients[n]

    def truncate(self, maxdeg: int) -> PoincareSeries:
        if maxdeg > self.maxdeg:
            raise ValueError("cannot extend a truncated series")
        return PoincareSeries(self.coefficients[: maxdeg + 1], maxdeg, self.signed)

    def __mul__(self, other: PoincareSeries) -> PoincareSeries:
        return series_mul(self, other)

    def __str__(self):
        terms = []
        for n, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if n == 0:
                terms.append(str(c))
            else:
                coef = "" if c == 1 else ("-" if c == -1 else str(c))
                terms.append(f"{coef}t^{n}" if n > 1 else f"{coef}t")
        body = " + ".join(terms).replace("+ -", "- ") or "0"
        return f"{body} + O(t^{self.maxdeg + 1})"


def series_mul(a: PoincareSeries, b: PoincareSeries) -> PoincareSeries:
    """Cauchy product, truncated at the smaller of the two degrees."""
    m = min(a.maxdeg, b.maxdeg)
    ac, bc = a.coefficients, b.coefficients
    out = [0] * (m + 1)
    for i in range(m + 1):
        x = ac[i]
        if x == 0:
            continue
        for j in range(m + 1 - i):
            if bc[j]:
                out[i + j] += x * bc[j]
    signed = a.signed or b.signed
    return PoincareSeries(tuple(_checked(c) for c in out), m, signed)


def series_inv(a: PoincareSeries) -> PoincareSeries:
    """Multiplicative inverse; the result lives in the signed variant."""
    if a.coefficients[0] != 1:
        raise NonUnitConstantTerm(f"constant term is {a.coefficients[0]}, not 1")
    ac = a.coefficients
    out = [0] * (a.maxdeg + 1)
    out[0] = 1
    for n in range(1, a.maxdeg + 1):
        out[n] = _checked(-sum(ac[k] * out[n - k] for k in range(1, n + 1)))
    return PoincareSeries(tuple(out), a.maxdeg, signed=True)


def series_product(factors: Iterable[PoincareSeries], maxdeg: int) -> PoincareSeries:
    acc = PoincareSeries.one(maxdeg)
    for f in factors:
        acc = series_mul(acc, f)
    return acc


def as_dimensions(a: PoincareSeries) -> PoincareSeries:
    """Validate a signed intermediate back into a dimension series."""
    return PoincareSeries(a.coefficients, a.maxdeg, signed=False)


def exterior_series(degrees: Iterable[int], maxdeg: int) -> PoincareSeries:
    """prod (1 + t^d) over the given degrees."""
    return series_product((PoincareSeries.binomial(d, maxdeg) for d in degrees if d <= maxdeg), maxdeg)


def polynomial_series(degrees: Iterable[int], maxdeg: int) -> PoincareSeries:
    """prod 1/(1 - t^d) over the given degrees."""
    return series_product((PoincareSeries.geometric(d, maxdeg) for d in degrees if d <= maxdeg), maxdeg)


def _count_multisets(degs: Sequence[int], start: int, remaining: int) -> int:
    if remaining == 0:
        return 1
    total = 0
    for idx in range(start, len(degs)):
        d = degs[idx]
        if d > remaining:
            break
        total += _count_multisets(degs, idx, remaining - d)
    return total


def _count_subsets(degs: Sequence[int], start: int, remaining: int) -> int:
    if remaining == 0:
        return 1
    total = 0
    for idx in range(start, len(degs)):
        d = degs[idx]
        if d > remaining:
            break
        total += _count_subsets(degs, idx + 1, remaining - d)
    return total


def dim_by_enumeration(pres: AlgebraPresentation, d: int, bound: int = ENUMERATION_BOUND) -> int:
    """Count degree-d monomials by walking multisets and subsets of generators.

    Independent of the product formula in :func:`presentations.poincare`.
    The group part only contributes the unit in degree 0.
    """
    if d > bound:
        raise BoundExceeded(f"degree {d} exceeds enumeration bound {bound}")
    if d < 0:
        return 0
    poly = sorted(g for fam in pres.families if fam.kind == "polynomial" for g in fam.degrees(d))
    ext = sorted(g for fam in pres.families if fam.kind == "exterior" for g in fam.degrees(d))
    total = 0
    # split d between the polynomial and exterior halves
    for e in range(d + 1):
        n_ext = _count_subsets(ext, 0, e)
        if n_ext:
            total += n_ext * _count_multisets(poly, 0, d - e)
    return total
