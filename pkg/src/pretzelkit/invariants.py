"""Determinant, Seifert-algorithm genus and the determinant obstruction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import NotAKnotError, OrientedDiagram, as_code, component_count, orient


class GenusUncertified(Exception):
    pass


@dataclass(frozen=True)
class GenusReport:
    seifert_genus: int
    fiber_genus: Optional[int] = None

    def __post_init__(self):
        if self.fiber_genus is not None and self.fiber_genus > self.seifert_genus:
            raise ValueError("fiber genus exceeds Seifert-algorithm genus")


@dataclass(frozen=True)
class DetVerdict:
    violated: bool
    det: int
    genus_bound: int  # 2g + 1


def _require_knot(code):
    n = component_count(code)
    if n != 1:
        raise NotAKnotError(code, n)


def determinant_formula(code) -> int:
    """|H_1| of the branched double cover: |prod(n_i) * (d_+ - d_- + sum_{|n_i|>1} 1/n_i)|.

    The ones enter through the integer term; written over all tangles this is
    |prod n_i * sum 1/n_i|.
    """
    code = as_code(code)
    _require_knot(code)
    big = [n for n in code if abs(n) > 1]
    d = sum(n for n in code if abs(n) == 1)
    prod = 1
    for n in big:
        prod *= n
    value = abs(prod * (d + sum((Fraction(1, n) for n in big), Fraction(0))))
    assert value.denominator == 1
    assert value != 0, f"{code}: zero determinant for a knot"
    return int(value)


def seifert_circles(diagram: OrientedDiagram) -> int:
    """Seifert circles of the oriented standard projection.

    Parallel twists smooth vertically into two through-arcs; antiparallel twists
    smooth horizontally into a cap, a cup and |n|-1 small circles between them.
    """
    code = diagram.code
    r = code.r
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    small = 0
    for i, role in enumerate(diagram.roles):
        if role.parallel:
            union((i, "T", "L"), (i, "B", "L"))
            union((i, "T", "R"), (i, "B", "R"))
        else:
            union((i, "T", "L"), (i, "T", "R"))
            union((i, "B", "L"), (i, "B", "R"))
            small += abs(code[i]) - 1
        nxt = (i + 1) % r
        union((i, "T", "R"), (nxt, "T", "L"))
        union((i, "B", "R"), (nxt, "B", "L"))
    roots = {find((i, tb, lr)) for i in range(r) for tb in "TB" for lr in "LR"}
    return small + len(roots)


def seifert_genus(diagram) -> int:
    if not isinstance(diagram, OrientedDiagram):
        diagram = orient(as_code(diagram))
    s = seifert_circles(diagram)
    twice = diagram.code.crossings() - s + 1
    assert twice % 2 == 0
    return twice // 2


def det_obstruction(code, genus: Optional[int] = None) -> DetVerdict:
    """det > 2g+1 forces a coefficient |a_s| > 1.

    ``genus`` must be certified.  Without it the genus is taken as deg(Delta)
    when the knot is fibered; otherwise ``GenusUncertified`` is raised.
    """
    code = as_code(code)
    det = determinant_formula(code)
    if genus is None:
        from .fibered import is_fibered
        from .statesum import alexander

        if not is_fibered(code).fibered:
            raise GenusUncertified(f"{code} is not fibered; genus not certified")
        genus = alexander(code).degree()
    bound = 2 * genus + 1
    return DetVerdict(det > bound, det, bound)
