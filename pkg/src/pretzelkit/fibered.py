"""Fiberedness of oriented pretzel knots by Gabai's algorithm.

Tangles whose strands run the same way (parallel) play the role of the
``m_i``; the others (antiparallel) are the ``m_ij``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .core import (
    NotAKnotError,
    OrientedDiagram,
    Role,
    TangleRole,
    as_code,
    component_count,
    dihedral_orbit,
    orient,
    reduce_small,
)


class PretzelType(enum.Enum):
    TYPE1 = "Type1"
    TYPE2A = "Type2A"
    TYPE2B = "Type2B"
    TYPE3_2A = "Type3_2A"
    TYPE3_2B = "Type3_2B"
    TYPE3_MIN = "Type3_min"
    # Type 2/3 whose positive and negative parallel counts differ by more than two
    TYPE2_UNBALANCED = "Type2_unbalanced"
    TYPE3_UNBALANCED = "Type3_unbalanced"
    # one or two tangles: the unknot or T(2, n)
    SMALL = "Small"


class Type1Input(Exception):
    pass


class NotMinimallyPresented(Exception):
    pass


@dataclass(frozen=True)
class AuxiliaryLink:
    tangles: Tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ",".join(str(n) for n in self.tangles) + ")"


@dataclass(frozen=True)
class FiberednessVerdict:
    type: PretzelType
    fibered: bool
    fiber_is_seifert_surface: bool
    trace: Tuple[str, ...] = field(default_factory=tuple)
    fiber_genus: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "type": self.type.value,
            "fibered": self.fibered,
            "fiber_genus": self.fiber_genus,
            "trace": list(self.trace),
        }


def _aux_from_roles(tangles: Sequence[int], roles: Sequence[TangleRole]) -> Tuple[int, ...]:
    out = []
    for n, role in zip(tangles, roles):
        if role.parallel:
            if abs(n) > 1:
                out.append(-2 if n > 0 else 2)
        else:
            out.append(n)
    return tuple(out)


def auxiliary_link(diagram) -> AuxiliaryLink:
    """L': each parallel tangle of length > 1 becomes -2*sign, length-one parallels
    are dropped, antiparallel tangles are kept as they are."""
    if not isinstance(diagram, OrientedDiagram):
        diagram = orient(as_code(diagram))
    if not any(ro.parallel for ro in diagram.roles):
        raise Type1Input(f"{diagram.code} has no parallel tangles; L' is undefined")
    return AuxiliaryLink(_aux_from_roles(diagram.code.tangles, diagram.roles))


def _is_alternating_twos(t: Sequence[int]) -> bool:
    """t == +-(2,-2,...,2,-2) up to rotation (an alternating even cycle of 2s)."""
    if not t or len(t) % 2 or any(abs(n) != 2 for n in t):
        return False
    return all(t[i] == -t[(i + 1) % len(t)] for i in range(len(t)))


def _matches_signed(t: Tuple[int, ...], pattern: Tuple[int, ...], free_last: bool) -> bool:
    for s in (1, -1):
        target = tuple(s * p for p in pattern)
        for rot in dihedral_orbit(t):
            body = rot[:-1] if free_last else rot
            tb = target[:-1] if free_last else target
            if body == tb:
                return True
    return False


def type1_rule(t: Sequence[int]) -> Optional[str]:
    """Which Type 1 fibering rule (if any) the tangle list satisfies."""
    t = tuple(t)
    r = len(t)
    for s in (1, -1):
        if s in t and all(n in (s, -3 * s) for n in t):
            return "1"
    if r % 2 == 1:
        pattern = tuple(2 if k % 2 == 0 else -2 for k in range(r - 1)) + (0,)
        if _matches_signed(t, pattern, free_last=True):
            return "2"
    else:
        pattern = tuple(2 if k % 2 == 0 else -2 for k in range(r - 1)) + (-4,)
        if _matches_signed(t, pattern, free_last=False):
            return "3"
    return None


def _parallel_counts(code, roles) -> Tuple[int, int]:
    pos = sum(1 for n, ro in zip(code, roles) if ro.parallel and n > 0)
    neg = sum(1 for n, ro in zip(code, roles) if ro.parallel and n < 0)
    return pos, neg


def pretzel_type(diagram) -> PretzelType:
    if not isinstance(diagram, OrientedDiagram):
        diagram = orient(as_code(diagram))
    return _decide(diagram.code.tangles, diagram.roles, 0)[0]


def _decide(tangles: Tuple[int, ...], roles: Sequence[TangleRole], depth: int):
    """Return (type, fibered, fiber_is_seifert_surface, trace)."""
    assert depth <= 1, "auxiliary-link recursion deeper than one level"
    trace: List[str] = []
    n_par = sum(1 for ro in roles if ro.parallel)
    n_anti = len(roles) - n_par

    if n_par == 0:
        rule = type1_rule(tangles)
        trace.append(f"Type 1 {tangles}: " + (f"rule ({rule}) holds" if rule else "no rule applies"))
        return PretzelType.TYPE1, rule is not None, True, trace

    pos, neg = _parallel_counts(tangles, roles)
    trace.append(f"{pos} positive / {neg} negative parallel tangles")
    aux = _aux_from_roles(tangles, roles)

    if n_anti > 0:
        if abs(pos - neg) == 2:
            ok = all(abs(n) == 2 for n, ro in zip(tangles, roles) if not ro.parallel)
            trace.append("Type 2A: fibered iff every antiparallel tangle has length 2")
            return PretzelType.TYPE2A, ok, True, trace
        if pos == neg:
            if _is_alternating_twos(aux):
                raise NotMinimallyPresented(f"{tangles}: Type 2C, not minimally presented")
            return _via_aux(PretzelType.TYPE2B, aux, depth, trace)
        trace.append("Type 2 with unbalanced parallel counts: not fibered")
        return PretzelType.TYPE2_UNBALANCED, False, False, trace

    if pos != neg:
        if abs(pos - neg) == 2:
            trace.append("Type 3 treated as 2A (no antiparallel tangles): fibered")
            return PretzelType.TYPE3_2A, True, True, trace
        trace.append("Type 3 with unbalanced parallel counts: not fibered")
        return PretzelType.TYPE3_UNBALANCED, False, False, trace
    if not _is_alternating_twos(aux):
        return _via_aux(PretzelType.TYPE3_2B, aux, depth, trace)
    lengths = sorted(abs(n) for n in tangles)
    unique_min = len(lengths) == 1 or lengths[0] < lengths[1]
    trace.append(f"Type 3-min: L'={aux}; unique minimal |m_i|: {unique_min}")
    return PretzelType.TYPE3_MIN, unique_min, False, trace


def _via_aux(kind: PretzelType, aux: Tuple[int, ...], depth: int, trace: List[str]):
    trace.append(f"{kind.value}: fibered iff L'={aux} fibers")
    if not aux:
        raise NotMinimallyPresented("empty auxiliary link")
    anti = [TangleRole(Role.ANTIPARALLEL, 1 if n > 0 else -1) for n in aux]
    _, ok, _, sub = _decide(aux, anti, depth + 1)
    trace.extend("  " + s for s in sub)
    return kind, ok, False, trace


def is_fibered(code, with_genus: bool = True) -> FiberednessVerdict:
    """Gabai's verdict for a pretzel knot code.

    Codes with one or two tangles are the unknot or T(2, n), which fiber.  When
    ``with_genus`` is set, a fibered verdict carries the fiber genus deg(Delta).
    """
    code = as_code(code)
    comps = component_count(code)
    if comps != 1:
        raise NotAKnotError(code, comps)
    if code.r <= 2:
        kind, ok, seif = PretzelType.SMALL, True, True
        trace = [f"{code}: at most two tangles, reduces to {reduce_small(code)}"]
    else:
        diagram = orient(code)
        kind, ok, seif, trace = _decide(code.tangles, diagram.roles, 0)
    genus = None
    if ok and with_genus:
        from .statesum import alexander

        genus = alexander(code).degree()
    return FiberednessVerdict(kind, ok, seif and ok, tuple(trace), genus)
