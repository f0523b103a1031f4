import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pretzelkit.core import (
    DOWN,
    NotAKnotError,
    PretzelCode,
    PretzelSyntaxError,
    Role,
    TorusKnot,
    Unknot,
    ZeroTangleError,
    canonical,
    component_count,
    dihedral_orbit,
    enumerate_codes,
    is_normalized,
    mirror,
    normalize,
    orient,
    parse_pretzel,
    reduce_small,
)

tangle = st.integers(-7, 7).filter(bool)
codes = st.lists(tangle, min_size=1, max_size=6).map(lambda t: PretzelCode(tuple(t)))


def brute_components(t):
    """Count cycles of the closure permutation on the 2r top/bottom endpoints."""
    r = len(t)
    # endpoints: ("T"/"B", i, side); pair them by tangle routing and by closure arcs
    adj = {}

    def link(a, b):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    for i, n in enumerate(t):
        if n % 2:
            link(("T", i, "L"), ("B", i, "R"))
            link(("T", i, "R"), ("B", i, "L"))
        else:
            link(("T", i, "L"), ("B", i, "L"))
            link(("T", i, "R"), ("B", i, "R"))
        for tb in "TB":
            link((tb, i, "R"), (tb, (i + 1) % r, "L"))
    seen, comps = set(), 0
    for v in adj:
        if v in seen:
            continue
        comps += 1
        stack = [v]
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            stack.extend(adj[u])
    return comps


def test_parse_examples():
    assert parse_pretzel("(-2,3,7)").tangles == (-2, 3, 7)
    assert parse_pretzel("( 3, -5 , 3, -2 )").tangles == (3, -5, 3, -2)
    assert str(parse_pretzel("( 3, -5 , 3, -2 )")) == "(3,-5,3,-2)"


def test_parse_zero_tangle_reports_index():
    with pytest.raises(ZeroTangleError) as exc:
        parse_pretzel("(2,0,3)")
    assert exc.value.index == 1


@pytest.mark.parametrize("text", ["", "()", "(1,,2)", "1,2", "(a)", "(1 2)"])
def test_parse_rejects_garbage(text):
    with pytest.raises(PretzelSyntaxError):
        parse_pretzel(text)


def test_normalize_examples():
    assert normalize(PretzelCode((1, -1, 3))) == PretzelCode((3,))
    assert normalize(PretzelCode((-2, 3, 7))) == PretzelCode((-2, 3, 7))
    assert normalize(PretzelCode((1, -1, 1, -1))) == Unknot()
    assert normalize(PretzelCode((-2, 3, 1))) == PretzelCode((2, 3))


def test_reduce_small_examples():
    assert reduce_small(PretzelCode((3, 4))) == TorusKnot(2, 7)
    assert reduce_small(PretzelCode((5,))) == Unknot()
    assert reduce_small(PretzelCode((-2, 3, 7))) == PretzelCode((-2, 3, 7))


def test_component_count_examples():
    assert component_count((-2, 3, 7)) == 1
    assert component_count((1, 1, -3)) == 1
    assert component_count((2, 2, 2)) == 3


def test_mirror_examples():
    assert mirror((-2, 3, 7)) == PretzelCode((2, -3, -7))
    assert mirror((1, -1)) == PretzelCode((-1, 1))


def test_orient_examples():
    d = orient((3, -3, 1, 3, 2))
    assert "".join(ro.kind.value for ro in d.roles) == "PPPPA"
    assert d.parallel_count() == 4
    assert all(not ro.parallel for ro in orient((1, 1, -3)).roles)
    assert all(ro.parallel for ro in orient((5, -7, 5, -4)).roles)


def test_orient_rejects_links():
    with pytest.raises(NotAKnotError):
        orient((2, 2, 2))


@given(codes)
def test_component_count_matches_brute_force(code):
    assert component_count(code) == brute_components(code.tangles)


@given(codes)
def test_component_count_dihedral_invariant(code):
    n = component_count(code)
    assert all(component_count(t) == n for t in dihedral_orbit(code.tangles))


@given(codes)
def test_knot_parity_rule(code):
    t = code.tangles
    evens = sum(1 for n in t if n % 2 == 0)
    is_knot = (evens == 0 and len(t) % 2 == 1) or evens == 1
    assert (component_count(code) == 1) == is_knot


@given(codes)
def test_roles_follow_parity(code):
    if component_count(code) != 1:
        return
    d = orient(code)
    assert d.parallel_count() % 2 == 0
    evens = [i for i, n in enumerate(code) if n % 2 == 0]
    if not evens:
        assert d.parallel_count() == 0
    else:
        (e,) = evens
        anti = [i for i, ro in enumerate(d.roles) if not ro.parallel]
        assert anti == [e] or anti == []


@given(codes)
def test_orientation_convention(code):
    if component_count(code) != 1:
        return
    d = orient(code)
    par = [i for i, ro in enumerate(d.roles) if ro.parallel]
    if par:
        assert d.strand_dirs[par[0]] == (DOWN, DOWN)
    else:
        assert d.strand_dirs[0][0] == DOWN
    for (a, b), ro in zip(d.strand_dirs, d.roles):
        assert (a == b) == (ro.kind is Role.PARALLEL)


@given(codes)
def test_normalize_idempotent(code):
    n = normalize(code)
    if isinstance(n, PretzelCode):
        assert normalize(n) == n
        assert is_normalized(n)


@given(codes, st.randoms())
def test_normalize_confluent(code, rnd):
    t = list(code.tangles)
    rnd.shuffle(t)
    a, b = normalize(code), normalize(PretzelCode(tuple(t)))
    if isinstance(a, Unknot):
        assert isinstance(b, Unknot)
    else:
        assert sorted(a.tangles) == sorted(b.tangles)


@given(codes)
def test_normalize_keeps_knot_type_parity(code):
    # cancellation removes odd tangles in pairs, merging swaps 1 and -2 for 2: components survive
    n = normalize(code)
    if isinstance(n, PretzelCode):
        assert component_count(n) == component_count(code)


@given(codes)
def test_mirror_involution(code):
    assert mirror(mirror(code)) == code


def test_enumeration_is_one_per_class():
    seen = set()
    for c in enumerate_codes(4, 3):
        key = canonical(c.tangles)
        assert key not in seen
        seen.add(key)
    brute = {
        canonical(t)
        for r in range(1, 5)
        for t in itertools.product([n for n in range(-3, 4) if n], repeat=r)
        if component_count(t) == 1
    }
    assert seen == brute
