import pytest
from hypothesis import given, strategies as st

from hopfring.f2series import dim_by_enumeration
from hopfring.presentations import (
    AlgebraPresentation,
    GeneratorFamily,
    ParseError,
    parse_presentation,
    poincare,
    registry_items,
    registry_lookup,
)


def shape(p):
    return p.group_part, tuple((f.kind, f.stride, f.offset, f.start) for f in p.families)


def test_registry_ko3():
    p = registry_lookup("KO", 3)
    assert shape(p) == ("trivial", (("exterior", 4, 3, 0),))


def test_registry_ko8_matches_ko0():
    assert registry_lookup("KO", 8) == registry_lookup("KO", 0)
    assert registry_lookup("KU", 2) == registry_lookup("KU", 0)


def test_registry_ku1_is_exterior_on_odd_degrees():
    # stored exterior: the polynomial reading fails the KU_1 -> KU_2 dimension identity
    p = registry_lookup("ku", 1)
    assert shape(p) == ("trivial", (("exterior", 2, 1, 0),))


def test_registry_periodicity_relabels():
    p = registry_lookup("KO", 9)
    assert p == registry_lookup("KO", 1)
    assert p.label == "KO_9 ≅ KO_1"
    assert "[λ^-1]" in p.families[0].display_name
    assert registry_lookup("KO", -7) == registry_lookup("KO", 1)
    assert "[λ]" in registry_lookup("KO", -7).families[0].display_name


def test_registry_has_twelve_entries():
    assert len(list(registry_items())) == 12


def test_unknown_spectrum():
    with pytest.raises(ValueError):
        registry_lookup("HZ", 0)


def test_poincare_examples():
    assert poincare(registry_lookup("KO", 0), 4).coefficients == (1, 1, 2, 3, 5)
    assert poincare(registry_lookup("KO", 3), 3).coefficients == (1, 0, 0, 1)
    assert poincare(AlgebraPresentation(()), 5).coefficients == (1, 0, 0, 0, 0, 0)


@pytest.mark.parametrize("pres", [p for _, _, p in registry_items()],
                         ids=[f"{s}{n}" for s, n, _ in registry_items()])
def test_product_formula_matches_enumeration(pres):
    series = poincare(pres, 24)
    assert [dim_by_enumeration(pres, d) for d in range(25)] == list(series.coefficients)


def test_parse_examples():
    assert shape(parse_presentation("Z; P(deg=1*i+0, i>=1)")) == shape(registry_lookup("KO", 0))
    assert shape(parse_presentation("1; E(deg=4*i+3, i>=0)")) == shape(registry_lookup("KO", 3))
    assert parse_presentation("Z2") == AlgebraPresentation((), "Z2")


@pytest.mark.parametrize("text", [
    "Z; P(deg=0*i+0, i>=0)",
    "Z; P(deg=1*i+0, i>=0)",
    "Q; P(deg=1*i+0, i>=1)",
    "Z P(deg=1*i+0, i>=1)",
    "Z; P(deg=1*i+0, i>=1",
    "1; X(deg=1*i+1, i>=0)",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_presentation(text)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as info:
        parse_presentation("Z; P(deg=1*j+0, i>=1)")
    assert info.value.pos == 11


def test_parse_handles_multidigit_numbers():
    p = parse_presentation("1; P(deg=10*i+12, i>=11)")
    assert p.families[0].stride == 10 and p.families[0].start == 11


families = st.builds(
    lambda kind, stride, offset, start: (kind, stride, offset, max(start, 0 if offset else 1)),
    st.sampled_from(["P", "E"]), st.integers(1, 12), st.integers(0, 12), st.integers(0, 5))


@given(st.sampled_from(["Z", "Z2", "1"]), st.lists(families, max_size=4))
def test_canonical_roundtrip(group, fams):
    text = "; ".join([group] + [f"{k}(deg={a}*i+{b}, i>={c})" for k, a, b, c in fams])
    p = parse_presentation(text)
    assert p.canonical() == text
    assert parse_presentation(p.canonical()) == p


def test_family_validation_and_names():
    with pytest.raises(ValueError):
        GeneratorFamily("polynomial", 0, 1)
    with pytest.raises(ValueError):
        GeneratorFamily("exterior", 2, 0, 0)
    f = registry_lookup("KO", 6).families[0]
    assert f.name(3) == "olz_{8}∘[η^2λ^-1]"
    assert list(f.degrees(9)) == [2, 4, 6, 8]
