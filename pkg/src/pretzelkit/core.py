"""Pretzel notation, normalization, component tracing and tangle roles.

Diagram model
-------------
Tangle ``i`` (0-based, left to right) is a vertical twist region with four
endpoints ``(i, T|B, L|R)``.  An odd tangle joins ``TL-BR`` and ``TR-BL``; an
even tangle joins ``TL-BL`` and ``TR-BR``.  The closure joins ``TR`` of tangle
``i`` to ``TL`` of tangle ``i+1`` (cyclically, the last one over a big top arc),
and likewise along the bottom.  A strand inside a tangle is named by the side
of its *top* endpoint.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple, Union

DOWN = 1
UP = -1


class PretzelError(Exception):
    pass


class PretzelSyntaxError(PretzelError, ValueError):
    pass


class ZeroTangleError(PretzelSyntaxError):
    def __init__(self, index: int):
        super().__init__(f"tangle at index {index} is zero")
        self.index = index


class NotAKnotError(PretzelError):
    def __init__(self, code, components: int):
        super().__init__(f"{code} has {components} components, expected a knot")
        self.components = components


@dataclass(frozen=True)
class PretzelCode:
    tangles: Tuple[int, ...]

    def __post_init__(self):
        t = tuple(int(n) for n in self.tangles)
        object.__setattr__(self, "tangles", t)
        if not t:
            raise PretzelError("a pretzel code needs at least one tangle")
        for i, n in enumerate(t):
            if n == 0:
                raise ZeroTangleError(i)

    @classmethod
    def of(cls, *tangles: int) -> "PretzelCode":
        if len(tangles) == 1 and not isinstance(tangles[0], int):
            tangles = tuple(tangles[0])
        return cls(tuple(tangles))

    @property
    def r(self) -> int:
        return len(self.tangles)

    def __len__(self) -> int:
        return len(self.tangles)

    def __iter__(self) -> Iterator[int]:
        return iter(self.tangles)

    def __getitem__(self, i):
        return self.tangles[i]

    def __str__(self) -> str:
        return "(" + ",".join(str(n) for n in self.tangles) + ")"

    def crossings(self) -> int:
        return sum(abs(n) for n in self.tangles)


@dataclass(frozen=True)
class Unknot:
    def __str__(self) -> str:
        return "unknot"


@dataclass(frozen=True)
class TorusKnot:
    p: int
    q: int

    def __str__(self) -> str:
        return f"T({self.p},{self.q})"


ReducedForm = Union[Unknot, TorusKnot, PretzelCode]

_CODE_RE = re.compile(r"^\s*\(\s*([+-]?\d+(?:\s*,\s*[+-]?\d+)*)\s*\)\s*$")


def as_code(code) -> PretzelCode:
    if isinstance(code, PretzelCode):
        return code
    if isinstance(code, str):
        return parse_pretzel(code)
    return PretzelCode(tuple(code))


def parse_pretzel(text: str) -> PretzelCode:
    """Parse ``"(n1, n2, ...)"``."""
    m = _CODE_RE.match(text.replace("−", "-"))
    if not m:
        raise PretzelSyntaxError(f"cannot parse pretzel code {text!r}")
    return PretzelCode(tuple(int(x) for x in m.group(1).split(",")))


def mirror(code) -> PretzelCode:
    return PretzelCode(tuple(-n for n in as_code(code)))


def normalize(code) -> Union[PretzelCode, Unknot]:
    """Apply the syntactic minimal-presentation moves.

    Cancels +1 against -1 until no such pair remains, then absorbs a +-1 into a
    -+2 tangle (1 - 1/2 = 1/2, i.e. the pair becomes a single +-2).  Survivors keep
    their relative order.  Total cancellation gives ``Unknot()``.
    """
    t: List[int] = list(as_code(code))
    changed = True
    while changed:
        changed = False
        if 1 in t and -1 in t:
            t.remove(1)
            t.remove(-1)
            changed = True
            continue
        for s in (1, -1):
            if s in t and -2 * s in t:
                j = t.index(-2 * s)
                t[j] = 2 * s
                t.remove(s)
                changed = True
                break
    if not t:
        return Unknot()
    return PretzelCode(tuple(t))


def is_normalized(code) -> bool:
    t = as_code(code).tangles
    ones = {n for n in t if abs(n) == 1}
    if len(ones) == 2:
        return False
    return not any(-2 * s in t for s in ones)


def reduce_small(code) -> ReducedForm:
    code = as_code(code)
    if code.r == 1:
        return Unknot()
    if code.r == 2:
        k = code[0] + code[1]
        if abs(k) == 1:
            return Unknot()
        return TorusKnot(2, k)
    return code


# --- tracing -----------------------------------------------------------------

Endpoint = Tuple[int, str, str]


def _through(code: PretzelCode, e: Endpoint) -> Endpoint:
    i, tb, lr = e
    other_tb = "B" if tb == "T" else "T"
    if code[i] % 2:
        return (i, other_tb, "R" if lr == "L" else "L")
    return (i, other_tb, lr)


def _external(r: int, e: Endpoint) -> Endpoint:
    i, tb, lr = e
    if lr == "R":
        return ((i + 1) % r, tb, "L")
    return ((i - 1) % r, tb, "R")


def _trace(code: PretzelCode, start: Endpoint) -> List[Tuple[int, str, int]]:
    """Follow the closed curve entering a tangle at ``start``.

    Returns the passages ``(tangle, top_side_of_strand, direction)`` in order.
    """
    out = []
    e = start
    while True:
        x = _through(code, e)
        top_side = e[2] if e[1] == "T" else x[2]
        out.append((e[0], top_side, DOWN if e[1] == "T" else UP))
        e = _external(code.r, x)
        if e == start:
            return out


def _components(code: PretzelCode) -> List[List[Tuple[int, str, int]]]:
    seen = set()
    comps = []
    for i in range(code.r):
        for side in ("L", "R"):
            if (i, side) in seen:
                continue
            comp = _trace(code, (i, "T", side))
            seen.update((p[0], p[1]) for p in comp)
            comps.append(comp)
    return comps


def component_count(code) -> int:
    return len(_components(as_code(code)))


class Role(enum.Enum):
    PARALLEL = "P"
    ANTIPARALLEL = "A"


@dataclass(frozen=True)
class TangleRole:
    kind: Role
    sign: int

    @property
    def parallel(self) -> bool:
        return self.kind is Role.PARALLEL


@dataclass(frozen=True)
class OrientedDiagram:
    """A knot code with strand directions.

    ``strand_dirs[i]`` is ``(dir of left-top strand, dir of right-top strand)``
    with ``DOWN = 1`` and ``UP = -1``.  The decorated edge is always the big
    bottom arc.
    """

    code: PretzelCode
    strand_dirs: Tuple[Tuple[int, int], ...]
    roles: Tuple[TangleRole, ...]
    decorated_edge: str = "bottom-arc"
    component_count: int = 1

    def reversed(self) -> "OrientedDiagram":
        return OrientedDiagram(
            self.code,
            tuple((-a, -b) for a, b in self.strand_dirs),
            self.roles,
            self.decorated_edge,
            self.component_count,
        )

    def parallel_count(self) -> int:
        return sum(1 for ro in self.roles if ro.parallel)

    def down_side(self, i: int, k: int) -> str:
        """Side (L/R) at which the downward strand enters crossing ``k`` of an
        antiparallel tangle ``i`` (crossings numbered from the top)."""
        left_dir, _ = self.strand_dirs[i]
        start = "L" if left_dir == DOWN else "R"
        if k % 2 == 0:
            return start
        return "R" if start == "L" else "L"


def orient(code) -> OrientedDiagram:
    code = as_code(code)
    comps = _components(code)
    if len(comps) != 1:
        raise NotAKnotError(code, len(comps))
    dirs: Dict[Tuple[int, str], int] = {(i, s): d for i, s, d in comps[0]}
    pairs = [(dirs[(i, "L")], dirs[(i, "R")]) for i in range(code.r)]
    roles = [
        TangleRole(Role.PARALLEL if a == b else Role.ANTIPARALLEL, 1 if code[i] > 0 else -1)
        for i, (a, b) in enumerate(pairs)
    ]
    flip = False
    first_par = next((i for i, ro in enumerate(roles) if ro.parallel), None)
    if first_par is not None:
        flip = pairs[first_par][0] == UP
    else:
        flip = pairs[0][0] == UP
    if flip:
        pairs = [(-a, -b) for a, b in pairs]
    return OrientedDiagram(code, tuple(pairs), tuple(roles))


def dihedral_orbit(tangles: Sequence[int]) -> List[Tuple[int, ...]]:
    """All rotations and reversals of ``tangles`` (isotopies of the pretzel diagram)."""
    t = tuple(tangles)
    r = len(t)
    out = []
    for seq in (t, t[::-1]):
        for k in range(r):
            out.append(seq[k:] + seq[:k])
    return out


def symmetry_orbit(tangles: Sequence[int], mirrors: bool = True) -> List[Tuple[int, ...]]:
    orbit = dihedral_orbit(tangles)
    if mirrors:
        orbit += dihedral_orbit(tuple(-n for n in tangles))
    return orbit


def canonical(tangles: Sequence[int], mirrors: bool = True) -> Tuple[int, ...]:
    return min(symmetry_orbit(tangles, mirrors))


def enumerate_codes(
    max_r: int,
    max_twist: int,
    min_r: int = 1,
    up_to: str = "dihedral",
    knots_only: bool = True,
) -> Iterator[PretzelCode]:
    """Codes with ``min_r <= r <= max_r`` and ``1 <= |n_i| <= max_twist``, one per class.

    ``up_to`` is ``"dihedral"`` (rotation, reversal and mirror), ``"permutation"``
    (any reordering and mirror) or ``"none"``.  Output is sorted by tangle tuple
    within each ``r``.
    """
    values = [n for n in range(-max_twist, max_twist + 1) if n]
    for r in range(min_r, max_r + 1):
        if up_to == "permutation":
            pool = (c for c in itertools.combinations_with_replacement(values, r) if c <= tuple(sorted(-n for n in c)))
        else:
            pool = itertools.product(values, repeat=r)
        for t in pool:
            if up_to == "dihedral" and t != canonical(t):
                continue
            if knots_only and component_count(t) != 1:
                continue
            yield PretzelCode(t)
