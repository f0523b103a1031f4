"""Kauffman states of the pretzel projection and the Alexander state sum.

A state is a black spanning tree.  On a pretzel black graph every spanning tree
contains one full path ``T(n_k)`` (the trunk) and misses exactly one edge of
every other path, so a state is ``(trunk, omitted edge per non-trunk tangle)``.
The dual white tree takes the white edge at each omitted crossing.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from .core import DOWN, UP, NotAKnotError, as_code, component_count, orient
from .graphs import ROOT, CheckerboardGraphs, Crossing, build_graphs
from .laurent import LaurentPolynomial


class StateSumError(Exception):
    """Internal consistency failure (a half-integral A grading, say)."""


class NoUniqueMinimumError(Exception):
    pass


@dataclass(frozen=True)
class Bigrading:
    A: int
    M: int


@dataclass(frozen=True)
class KauffmanState:
    trunk: int
    omitted: Tuple[Optional[int], ...]  # None at the trunk

    def black_tree(self, graphs: CheckerboardGraphs) -> List[Crossing]:
        return [c for c in graphs.crossings() if self.omitted[c[0]] != c[1]]

    def white_tree(self) -> List[Crossing]:
        return [(i, j) for i, j in enumerate(self.omitted) if j is not None]


def enumerate_states(graphs: CheckerboardGraphs) -> Iterator[KauffmanState]:
    """Every black spanning tree once: trunk index, then omitted edges lexicographically."""
    r = graphs.r
    for t in range(r):
        ranges = [range(graphs.length(i)) for i in range(r) if i != t]
        for combo in itertools.product(*ranges):
            omitted = list(combo)
            omitted.insert(t, None)
            yield KauffmanState(t, tuple(omitted))


def _orient_tree(edges, root):
    """Map each tree edge key to ``(parent, child)`` flowing away from ``root``."""
    adj: Dict = {}
    for key, u, v in edges:
        adj.setdefault(u, []).append((key, v))
        adj.setdefault(v, []).append((key, u))
    out = {}
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for key, v in adj.get(u, ()):
            if v not in seen:
                seen.add(v)
                out[key] = (u, v)
                queue.append(v)
    return out, seen


def is_spanning_pair(state: KauffmanState, graphs: CheckerboardGraphs) -> bool:
    """True iff the black tree spans ``G_B`` and its dual spans ``G_W``."""
    black = [(c, *graphs.black_edge(c)) for c in state.black_tree(graphs)]
    white = [(c, *graphs.white_edge(c)) for c in state.white_tree()]
    nb = len(graphs.black_vertices())
    nw = len(graphs.white_vertices())
    if len(black) != nb - 1 or len(white) != nw - 1:
        return False
    _, reach_b = _orient_tree(black, ROOT)
    _, reach_w = _orient_tree(white, graphs.white_root)
    if len(reach_b) != nb or len(reach_w) != nw:
        return False
    return set(state.black_tree(graphs)).isdisjoint(state.white_tree())


def sigma_labels(state: KauffmanState, graphs: CheckerboardGraphs) -> Dict[Tuple[str, Crossing], int]:
    """sigma for every tree edge, keyed by ``(color, crossing)``."""
    black = [(c, *graphs.black_edge(c)) for c in state.black_tree(graphs)]
    white = [(c, *graphs.white_edge(c)) for c in state.white_tree()]
    bdir, _ = _orient_tree(black, ROOT)
    wdir, _ = _orient_tree(white, graphs.white_root)
    sigma = {}
    for c, (parent, _child) in bdir.items():
        k_or = graphs.knot_orientation(c, "B")
        if k_or == 0:
            sigma[("B", c)] = 0
            continue
        upper, _lower = graphs.black_edge(c)
        tree_dir = DOWN if parent == upper else UP
        sigma[("B", c)] = 1 if tree_dir == k_or else -1
    for c, (parent, _child) in wdir.items():
        k_or = graphs.knot_orientation(c, "W")
        if k_or == 0:
            sigma[("W", c)] = 0
            continue
        left, right = graphs.white_edge(c)
        # a one-tangle code has a loop here; treat it as left-to-right
        tree_dir = 1 if parent == left else -1
        sigma[("W", c)] = 1 if tree_dir == k_or else -1
    return sigma


def bigrading(state: KauffmanState, graphs: CheckerboardGraphs) -> Bigrading:
    """(A, M) with A = 1/2 sum sigma*eta and M = sum of eta over sigma = +1 edges."""
    sig = sigma_labels(state, graphs)
    twice_a = 0
    m = 0
    for (color, c), s in sig.items():
        e = graphs.eta(c, color)
        twice_a += s * e
        if s == 1:
            m += e
    if twice_a % 2:
        raise StateSumError(f"half-integral A grading for state {state} of {graphs.code}")
    return Bigrading(twice_a // 2, m)


def trunk_of(state: KauffmanState) -> int:
    return state.trunk


# --- factorized state sum -----------------------------------------------------
#
# With the trunk fixed, sigma on the edges of tangle i depends only on which
# edge of T(n_i) is omitted and on which side of the trunk tangle i lies, so the
# state sum factors over tangles.


def _trunk_term(graphs: CheckerboardGraphs, i: int) -> Tuple[int, int]:
    """(2A, M) contributed by tangle ``i`` when it is the trunk."""
    eta = graphs.eta_black[i]
    k_or = graphs.knot_orientation((i, 0), "B")
    if k_or == 0 or eta == 0:
        return 0, 0
    s = 1 if k_or == UP else -1  # trunk edges flow upward from the root
    n = graphs.length(i)
    return n * s * eta, (n * eta if s == 1 else 0)


def _branch_terms(graphs: CheckerboardGraphs, i: int, left_of_trunk: bool) -> List[Tuple[int, int]]:
    """(2A, M) contributed by non-trunk tangle ``i`` for each omitted edge ``j``."""
    n = graphs.length(i)
    out = []
    if graphs.diagram.roles[i].parallel:
        eta = graphs.eta_black[i]
        k_or = graphs.knot_orientation((i, 0), "B")
        s_down = 1 if k_or == DOWN else -1
        for j in range(n):
            n_down, n_up = j, n - 1 - j
            twice_a = eta * (s_down * n_down - s_down * n_up)
            m = eta * (n_down if s_down == 1 else n_up)
            out.append((twice_a, m))
    else:
        eta = graphs.eta_white[i]
        tree_dir = 1 if left_of_trunk else -1
        for j in range(n):
            s = 1 if graphs.knot_orientation((i, j), "W") == tree_dir else -1
            out.append((s * eta, eta if s == 1 else 0))
    return out


def trunk_factors(graphs: CheckerboardGraphs, t: int):
    """Per-tangle term lists for states with trunk ``t`` (trunk entry is a 1-list)."""
    factors = []
    for i in range(graphs.r):
        if i == t:
            factors.append([_trunk_term(graphs, i)])
        else:
            factors.append(_branch_terms(graphs, i, i < t))
    return factors


def _poly_of_terms(terms) -> LaurentPolynomial:
    c: Dict[int, int] = {}
    for twice_a, m in terms:
        c[twice_a] = c.get(twice_a, 0) + (-1 if m % 2 else 1)
    return LaurentPolynomial(c)


def _graphs_for(code) -> CheckerboardGraphs:
    code = as_code(code)
    n = component_count(code)
    if n != 1:
        raise NotAKnotError(code, n)
    return build_graphs(orient(code))


def alexander_from_graphs(graphs: CheckerboardGraphs) -> LaurentPolynomial:
    total = LaurentPolynomial()
    for t in range(graphs.r):
        prod = LaurentPolynomial.one()
        for terms in trunk_factors(graphs, t):
            prod = prod * _poly_of_terms(terms)
        total = total + prod
    try:
        return total.halve_exponents()
    except ValueError as exc:
        raise StateSumError(f"half-integral A grading in {graphs.code}") from exc


def alexander(code) -> LaurentPolynomial:
    """Symmetrized Alexander polynomial: sum over states of (-1)^M t^A."""
    return alexander_from_graphs(_graphs_for(code))


def alexander_bruteforce(graphs: CheckerboardGraphs) -> LaurentPolynomial:
    """Same sum, state by state with the generic tree orientation (slow path)."""
    c: Dict[int, int] = {}
    for st in enumerate_states(graphs):
        g = bigrading(st, graphs)
        c[g.A] = c.get(g.A, 0) + (-1 if g.M % 2 else 1)
    return LaurentPolynomial(c)


def bigrading_fast(state: KauffmanState, graphs: CheckerboardGraphs) -> Bigrading:
    twice_a, m = _trunk_term(graphs, state.trunk)
    for i, j in enumerate(state.omitted):
        if j is None:
            continue
        a2, mm = _branch_terms(graphs, i, i < state.trunk)[j]
        twice_a += a2
        m += mm
    if twice_a % 2:
        raise StateSumError(f"half-integral A grading for {state}")
    return Bigrading(twice_a // 2, m)


def minimal_states(code_or_graphs) -> Tuple[int, List[KauffmanState]]:
    """All states attaining the minimal A grading."""
    graphs = code_or_graphs if isinstance(code_or_graphs, CheckerboardGraphs) else _graphs_for(code_or_graphs)
    best: Optional[int] = None
    winners: List[KauffmanState] = []
    for t in range(graphs.r):
        factors = trunk_factors(graphs, t)
        lo = sum(min(a for a, _ in f) for f in factors)
        if best is not None and lo > best:
            continue
        choices = []
        for i, f in enumerate(factors):
            m = min(a for a, _ in f)
            choices.append([None] if i == t else [j for j, (a, _) in enumerate(f) if a == m])
        states = [KauffmanState(t, tuple(combo)) for combo in itertools.product(*choices)]
        if best is None or lo < best:
            best, winners = lo, states
        else:
            winners.extend(states)
    if best % 2:
        raise StateSumError(f"half-integral minimal A in {graphs.code}")
    return best // 2, winners


def trades_of(code_or_graphs) -> List[KauffmanState]:
    """Trades of the unique minimal state: in each non-trunk tangle of length > 1,
    swap the terminal tree edge for the missing one."""
    graphs = code_or_graphs if isinstance(code_or_graphs, CheckerboardGraphs) else _graphs_for(code_or_graphs)
    _, mins = minimal_states(graphs)
    if len(mins) != 1:
        raise NoUniqueMinimumError(f"{graphs.code} has {len(mins)} minimal states")
    x = mins[0]
    trades = []
    for i, j in enumerate(x.omitted):
        n = graphs.length(i)
        if j is None or n == 1:
            continue
        if j == 0:
            new = 1
        elif j == n - 1:
            new = n - 2
        else:
            raise StateSumError(
                f"tangle {i} of {graphs.code}: minimal tree meets T(n_i) in two pieces"
            )
        om = list(x.omitted)
        om[i] = new
        trades.append(KauffmanState(x.trunk, tuple(om)))
    return trades
