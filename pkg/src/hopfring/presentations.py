"""Free graded-commutative algebra presentations and the KO/KU registry."""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from typing import Iterator

from .f2series import PoincareSeries, exterior_series, polynomial_series, series_mul

GROUP_PARTS = ("Z", "Z2", "trivial")
KINDS = ("polynomial", "exterior")
_INDEX = re.compile(r"\{(\d*)i(?:\+(\d+))?\}")


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, expected: str):
        self.text = text
        self.pos = pos
        self.expected = expected
        found = repr(text[pos:pos + 8]) if pos < len(text) else "end of input"
        super().__init__(f"at position {pos}: expected {expected}, found {found}")


@dataclass(frozen=True)
class GeneratorFamily:
    """Generators in degrees stride*i + offset for i >= start."""

    kind: str
    stride: int
    offset: int
    start: int = 0
    display_name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.stride < 1:
            raise ValueError("degree rule needs stride >= 1")
        if self.offset < 0 or self.start < 0:
            raise ValueError("degree rule needs offset >= 0 and start >= 0")
        if self.first_degree <= 0:
            raise ValueError("generator families must live in positive degree")
        if not self.display_name:
            object.__setattr__(self, "display_name", f"g_{{{self.rule_text()}}}")

    @property
    def first_degree(self) -> int:
        return self.stride * self.start + self.offset

    def rule_text(self) -> str:
        if self.stride == 1:
            s = "i"
        else:
            s = f"{self.stride}i"
        return s if self.offset == 0 else f"{s}+{self.offset}"

    def degrees(self, maxdeg: int) -> Iterator[int]:
        i = self.start
        while True:
            d = self.stride * i + self.offset
            if d > maxdeg:
                return
            yield d
            i += 1

    def indexed(self, maxdeg: int) -> Iterator[tuple[int, int]]:
        """(i, degree) pairs up to maxdeg."""
        for n, d in enumerate(self.degrees(maxdeg)):
            yield self.start + n, d

    def name(self, i: int) -> str:
        """Display name with the index substituted, e.g. e∘z_{2i} -> e∘z_{6}."""
        def sub(m):
            a = int(m.group(1) or 1)
            b = int(m.group(2) or 0)
            return "{%d}" % (a * i + b)
        return _INDEX.sub(sub, self.display_name)

    def canonical(self) -> str:
        letter = "P" if self.kind == "polynomial" else "E"
        return f"{letter}(deg={self.stride}*i+{self.offset}, i>={self.start})"


@dataclass(frozen=True)
class AlgebraPresentation:
    families: tuple[GeneratorFamily, ...]
    group_part: str = "trivial"
    label: str = field(default="", compare=False)
    relabel: str = field(default="", compare=False)

    def __post_init__(self):
        if self.group_part not in GROUP_PARTS:
            raise ValueError(f"unknown group part {self.group_part!r}")
        object.__setattr__(self, "families", tuple(self.families))
        names = [f.display_name for f in self.families]
        if len(set(names)) != len(names):
            raise ValueError("generator families need distinct display names")

    def canonical(self) -> str:
        group = "1" if self.group_part == "trivial" else self.group_part
        return "; ".join([group] + [f.canonical() for f in self.families])

    def describe(self) -> str:
        """Human-facing form, e.g. P(olz_{i}, [-1])."""
        parts = []
        for kind in KINDS:
            fams = [f.display_name for f in self.families if f.kind == kind]
            if fams:
                parts.append(("P" if kind == "polynomial" else "E") + "(" + ", ".join(fams) + ")")
        if self.group_part == "Z":
            parts.append("F2[Z]")
        elif self.group_part == "Z2":
            parts.append("F2[Z/2]")
        return " ⊗ ".join(parts) or "F2"

    def __str__(self):
        return self.canonical()


def poincare(pres: AlgebraPresentation, maxdeg: int) -> PoincareSeries:
    """Poincare series of the basepoint component (the group part counts as 1)."""
    if maxdeg < 0:
        raise ValueError("maxdeg must be nonnegative")
    acc = PoincareSeries.one(maxdeg)
    for fam in pres.families:
        degs = list(fam.degrees(maxdeg))
        if fam.kind == "polynomial":
            acc = series_mul(acc, polynomial_series(degs, maxdeg))
        else:
            acc = series_mul(acc, exterior_series(degs, maxdeg))
    return acc


# --- grammar -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(Z2|Z|P|E|deg|i|>=|\d+|[;(),=*+])")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        m = _TOKEN.match(self.text, self.pos)
        return m.group(1) if m else None

    def take(self, *expected: str) -> str:
        self._skip()
        m = _TOKEN.match(self.text, self.pos)
        tok = m.group(1) if m else None
        if tok is None or tok not in expected:
            raise ParseError(self.text, self.pos, " or ".join(repr(e) for e in expected))
        self.pos = m.end()
        return tok

    def integer(self) -> int:
        self._skip()
        m = _TOKEN.match(self.text, self.pos)
        if m is None or not m.group(1).isdigit():
            raise ParseError(self.text, self.pos, "an integer")
        self.pos = m.end()
        return int(m.group(1))

    def at_end(self) -> bool:
        self._skip()
        return self.pos >= len(self.text)


def parse_presentation(text: str) -> AlgebraPresentation:
    """Parse ``group; P|E(deg=A*i+B, i>=I0); ...``."""
    sc = _Scanner(text)
    group = sc.take("Z2", "Z", "1")
    families = []
    while not sc.at_end():
        sc.take(";")
        start_pos = sc.pos
        letter = sc.take("P", "E")
        sc.take("(")
        sc.take("deg")
        sc.take("=")
        stride = sc.integer()
        sc.take("*")
        sc.take("i")
        sc.take("+")
        offset = sc.integer()
        sc.take(",")
        sc.take("i")
        sc.take(">=")
        start = sc.integer()
        sc.take(")")
        if stride < 1:
            raise ParseError(text, start_pos, "a degree rule with stride >= 1")
        if stride * start + offset <= 0:
            raise ParseError(text, start_pos, "a family of positive degree")
        kind = "polynomial" if letter == "P" else "exterior"
        families.append(GeneratorFamily(kind, stride, offset, start,
                                        display_name=f"g{len(families)}_{{{stride}i+{offset}}}"))
    return AlgebraPresentation(tuple(families), "trivial" if group == "1" else group)


# --- registry ------------------------------------------------------------

def _P(stride, offset, start, name):
    return GeneratorFamily("polynomial", stride, offset, start, name)


def _E(stride, offset, start, name):
    return GeneratorFamily("exterior", stride, offset, start, name)


_KO = {
    0: AlgebraPresentation((_P(1, 0, 1, "olz_{i}"),), "Z", "KO_0 = Z×BO"),
    1: AlgebraPresentation((_P(2, 1, 0, "e∘z_{2i}"),), "trivial", "KO_1 = U/O"),
    2: AlgebraPresentation((_P(4, 2, 0, "e^2∘z_{4i}"),), "trivial", "KO_2 = Sp/U"),
    3: AlgebraPresentation((_E(4, 3, 0, "e^3∘z_{4i}"),), "trivial", "KO_3 = Sp"),
    4: AlgebraPresentation((_P(4, 0, 1, "olz_{4i}∘[βλ^-1]"),), "Z", "KO_4 = Z×BSp"),
    5: AlgebraPresentation((_E(4, 1, 0, "e∘z_{4i}∘[βλ^-1]"),), "trivial", "KO_5 = U/Sp"),
    6: AlgebraPresentation((_E(2, 2, 0, "olz_{2i+2}∘[η^2λ^-1]"),), "Z2", "KO_6 = O/U"),
    7: AlgebraPresentation((_E(1, 0, 1, "olz_{i}∘[ηλ^-1]"),), "Z2", "KO_7 = O"),
    8: AlgebraPresentation((_P(1, 0, 1, "olz_{i}∘[λ^-1]"),), "Z", "KO_8 = Z×BO"),
}

_KU = {
    0: AlgebraPresentation((_P(2, 0, 1, "olz_{2i}"),), "Z", "KU_0 = Z×BU"),
    # exterior: the odd-degree classes square to zero once z_1 = 0 in KU
    1: AlgebraPresentation((_E(2, 1, 0, "e∘z_{2i}"),), "trivial", "KU_1 = U"),
    2: AlgebraPresentation((_P(2, 0, 1, "olz_{2i}∘[ν^-1]"),), "Z", "KU_2 = Z×BU"),
}

PERIOD = {"KO": 8, "KU": 2}
_PERIOD_CLASS = {"KO": "λ", "KU": "ν"}


def normalize_spectrum(spectrum: str) -> str:
    s = spectrum.upper()
    if s not in PERIOD:
        raise ValueError(f"unknown spectrum {spectrum!r}; expected KO or KU")
    return s


def registry_lookup(spectrum: str, n: int) -> AlgebraPresentation:
    """Presentation of H_*(X_n) for X = KO or KU, any integer n via periodicity."""
    s = normalize_spectrum(spectrum)
    table = _KO if s == "KO" else _KU
    period = PERIOD[s]
    if n in table:
        return table[n]
    r = n % period
    k = (n - r) // period
    base = table[r]
    # x -> x∘[λ^-k] carries H_*KO_r to H_*KO_{r+8k}
    exp = -k
    tag = f"[{_PERIOD_CLASS[s]}]" if exp == 1 else f"[{_PERIOD_CLASS[s]}^{exp}]"
    fams = tuple(replace(f, display_name=f"{f.display_name}∘{tag}") for f in base.families)
    label = f"{s}_{n} ≅ {s}_{r}"
    note = f"{s}_{n} reduced to {s}_{r}; generators relabelled by ∘{tag}"
    return AlgebraPresentation(fams, base.group_part, label, note)


def registry_items():
    """All twelve stored (spectrum, n, presentation) entries."""
    for n, p in _KO.items():
        yield "KO", n, p
    for n, p in _KU.items():
        yield "KU", n, p
