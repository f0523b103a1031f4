import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pretzelkit.core import NotAKnotError, PretzelCode, component_count
from pretzelkit.laurent import LaurentPolynomial as L
from pretzelkit.oracle import alexander_oracle, wirtinger
from pretzelkit.statesum import alexander

knots = (
    st.lists(st.integers(-7, 7).filter(bool), min_size=1, max_size=5)
    .map(lambda t: PretzelCode(tuple(t)))
    .filter(lambda c: component_count(c) == 1)
)


def test_trefoil():
    assert alexander_oracle((1, 1, 1)) == L.parse("t^-1 - 1 + t")


def test_reference_polynomial():
    expected = "t^-6 - t^-5 + t^-3 - 2t^-2 + 3t^-1 - 3 + 3t - 2t^2 + t^3 - t^5 + t^6"
    assert alexander_oracle((-2, 5, 7)) == L.parse(expected)


def test_cancelled_pair_is_invisible():
    assert alexander_oracle((1, -1, 3)) == alexander_oracle((3,)) == L.one()


def test_presentation_shape():
    data = wirtinger((3, -5, 3, -2))
    assert data.arcs == len(data.relations) == 13
    assert {r.sign for r in data.relations} <= {1, -1}


def test_links_rejected():
    with pytest.raises(NotAKnotError):
        alexander_oracle((2, 2))


@settings(max_examples=80, deadline=None)
@given(knots)
def test_agrees_with_state_sum(code):
    fox = alexander_oracle(code)
    assert fox.is_symmetric() and fox.evaluate(1) == 1
    assert fox.equal_up_to_unit(alexander(code))
