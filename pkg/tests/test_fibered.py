import pytest
from hypothesis import given
from hypothesis import strategies as st

from pretzelkit.core import PretzelCode, component_count, is_normalized, mirror
from pretzelkit.fibered import (
    NotMinimallyPresented,
    PretzelType,
    Type1Input,
    auxiliary_link,
    is_fibered,
    pretzel_type,
    type1_rule,
)
from pretzelkit.invariants import seifert_genus
from pretzelkit.statesum import alexander

knots = (
    st.lists(st.integers(-6, 6).filter(bool), min_size=3, max_size=5)
    .map(lambda t: PretzelCode(tuple(t)))
    .filter(lambda c: component_count(c) == 1 and is_normalized(c))
)


def verdict(code):
    try:
        return is_fibered(code)
    except NotMinimallyPresented:
        return None


def test_auxiliary_link_examples():
    assert auxiliary_link((3, -3, 1, 3, 2)).tangles == (-2, 2, -2, 2)
    assert auxiliary_link((5, -7, 5, -4)).tangles == (-2, 2, -2, 2)
    # the leading one of (1, m_1, ..., m_{2p-1}, -4) drops out
    assert auxiliary_link((1, -3, 5, -3, -4)).tangles == (2, -2, 2, -4)
    with pytest.raises(Type1Input):
        auxiliary_link((1, 1, -3))


def test_type_examples():
    assert pretzel_type((3, -3, 1, 3, 2)) is PretzelType.TYPE2A
    assert pretzel_type((5, -7, 5, -4)) is PretzelType.TYPE3_MIN
    assert pretzel_type((1, 1, -3)) is PretzelType.TYPE1


@pytest.mark.parametrize("q", range(1, 16, 2))
def test_minus_two_three_q(q):
    v = is_fibered((-2, 3, q))
    assert v.fibered and v.type is PretzelType.TYPE2A


def test_verdict_examples():
    v = is_fibered((1, 1, -3))
    assert v.fibered and v.type is PretzelType.TYPE1 and "rule (1)" in v.trace[0]
    for code in [(3, -5, 3, -2), (5, -7, 5, -4)]:
        v = is_fibered(code)
        assert v.fibered and v.type is PretzelType.TYPE3_MIN
        assert not v.fiber_is_seifert_surface


def test_type_1_rules():
    assert type1_rule((1, 1, -3)) == "1"
    assert type1_rule((-1, 3, 3)) == "1"
    assert type1_rule((2, -2, 7)) == "2"
    assert type1_rule((-2, 2, -2, 2, 5)) == "2"
    assert type1_rule((2, -2, 2, -4)) == "3"
    assert type1_rule((-4, 2, -2, 2)) == "3"
    assert type1_rule((3, 3, 3)) is None
    assert type1_rule((2, 2, 2, -4)) is None


def test_type_3_min_needs_unique_minimum():
    v = is_fibered((3, -3, 5, -2))  # |m_i| minima 2 only once
    assert v.type is PretzelType.TYPE3_MIN and v.fibered
    v = is_fibered((3, -5, 3, -4))
    assert v.type is PretzelType.TYPE3_MIN and not v.fibered


def test_type_2b_recursion_trace():
    v = is_fibered((3, 3, -5, -2))
    assert v.type is PretzelType.TYPE3_2B
    assert any(step.startswith("  Type 1") for step in v.trace)


def test_json_shape():
    js = is_fibered((-2, 3, 7)).to_json()
    assert set(js) == {"type", "fibered", "fiber_genus", "trace"}
    assert js["type"] == "Type2A" and js["fiber_genus"] == 5


@given(knots)
def test_mirror_invariant(code):
    a, b = verdict(code), verdict(mirror(code))
    assert (a is None) == (b is None)
    if a is not None:
        assert (a.type, a.fibered) == (b.type, b.fibered)


@given(knots, st.randoms())
def test_2a_stable_under_permutation(code, rnd):
    v = verdict(code)
    if v is None or v.type not in (PretzelType.TYPE2A, PretzelType.TYPE3_2A):
        return
    t = list(code.tangles)
    rnd.shuffle(t)
    w = is_fibered(PretzelCode(tuple(t)))
    assert (w.type, w.fibered) == (v.type, v.fibered)


@given(knots)
def test_fibered_knots_are_monic(code):
    v = verdict(code)
    if v is None or not v.fibered:
        return
    d = alexander(code)
    assert abs(d.leading_coefficient()) == 1
    assert v.fiber_genus == d.degree()
    if v.fiber_is_seifert_surface:
        assert d.degree() == seifert_genus(code)


@given(knots)
def test_seifert_surface_flag(code):
    v = verdict(code)
    if v is not None and v.fiber_is_seifert_surface:
        assert v.type in (PretzelType.TYPE1, PretzelType.TYPE2A, PretzelType.TYPE3_2A)


@given(knots)
def test_fibered_type_2b_structure(code):
    v = verdict(code)
    if v is None or v.type is not PretzelType.TYPE2B or not v.fibered:
        return
    ones = [n for n in code if abs(n) == 1]
    assert len(ones) <= 1
    if not ones:
        assert type1_rule(auxiliary_link(code).tangles) == "2"
