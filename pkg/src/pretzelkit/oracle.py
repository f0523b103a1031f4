"""Reference Alexander polynomial from the Wirtinger presentation and Fox calculus.

This is deliberately independent of the state sum: it walks the standard
pretzel diagram crossing by crossing, writes one Wirtinger relation per
crossing, and takes a minor of the abelianized Jacobian.  The determinant is
evaluated at many points modulo two large primes (numpy, batched over points)
and interpolated back to integer coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from .core import DOWN, NotAKnotError, as_code, component_count
from .laurent import LaurentPolynomial

PRIMES = (2147483647, 2147483629)


@dataclass(frozen=True)
class WirtingerCrossing:
    over: int
    under_in: int
    under_out: int
    sign: int


@dataclass(frozen=True)
class WirtingerData:
    arcs: int
    relations: Tuple[WirtingerCrossing, ...]


# Direction of the two strokes of a crossing when traversed downward, (x, y)
# with y pointing up.  "\" runs top-left to bottom-right.
_STROKE_DOWN = {"\\": (1, -1), "/": (-1, -1)}


def _passages(code) -> List[Tuple[Tuple[int, int], bool, Tuple[int, int]]]:
    """Walk the knot once and list ``(crossing, is_over, direction)`` in order."""
    r = code.r
    out = []
    i, side, going = 0, "L", DOWN
    start = (i, side, going)
    while True:
        n = code[i]
        length = abs(n)
        p = side
        ks = range(length) if going == DOWN else range(length - 1, -1, -1)
        for k in ks:
            other = "R" if p == "L" else "L"
            upper = p if going == DOWN else other  # position at the level above crossing k
            stroke = "\\" if upper == "L" else "/"
            over = (stroke == "\\") == (n > 0)
            dx, dy = _STROKE_DOWN[stroke]
            if going != DOWN:
                dx, dy = -dx, -dy
            out.append(((i, k), over, (dx, dy)))
            p = other
        # leave the tangle at position p, on the bottom if going down
        if p == "R":
            i = (i + 1) % r
            side = "L"
        else:
            i = (i - 1) % r
            side = "R"
        # outside arcs stay on the same (top or bottom) level, so the
        # direction reverses on entering the neighbour
        going = -going
        if (i, side, going) == start:
            return out


def wirtinger(code) -> WirtingerData:
    code = as_code(code)
    comps = component_count(code)
    if comps != 1:
        raise NotAKnotError(code, comps)
    passages = _passages(code)
    n = len(passages)
    assert n == 2 * code.crossings()
    arc = 0
    over_arc = {}
    under = {}
    for c, is_over, d in passages:
        if is_over:
            over_arc[c] = (arc, d)
        else:
            under[c] = (arc, arc + 1, d)
            arc += 1
    arcs = arc
    rels = []
    for c, (a, b, du) in under.items():
        o, do = over_arc[c]
        cross = do[0] * du[1] - do[1] * du[0]
        rels.append(WirtingerCrossing(o % arcs, a % arcs, b % arcs, 1 if cross > 0 else -1))
    return WirtingerData(arcs, tuple(rels))


def _jacobian(data: WirtingerData) -> np.ndarray:
    """Abelianized Fox Jacobian as an array ``J[row, col, power]`` with powers 0 and 1.

    Positive crossings use x_b = x_c x_a x_c^-1, negative ones x_b = x_c^-1 x_a x_c
    (the latter multiplied through by t to stay polynomial).
    """
    m = data.arcs
    jac = np.zeros((m, m, 2), dtype=np.int64)
    for row, rel in enumerate(data.relations):
        c, a, b = rel.over, rel.under_in, rel.under_out
        if rel.sign > 0:
            jac[row, c] += (1, -1)
            jac[row, a] += (0, 1)
            jac[row, b] += (-1, 0)
        else:
            jac[row, c] += (-1, 1)
            jac[row, a] += (1, 0)
            jac[row, b] += (0, -1)
    return jac


def _batched_det_mod(mats: np.ndarray, p: int) -> np.ndarray:
    """Determinants of a stack of square matrices over GF(p)."""
    a = mats % p
    batch, n, _ = a.shape
    det = np.ones(batch, dtype=np.int64)
    alive = np.ones(batch, dtype=bool)
    idx = np.arange(batch)
    for j in range(n):
        nz = a[:, j:, j] != 0
        has = nz.any(axis=1)
        alive &= has
        piv = j + np.argmax(nz, axis=1)
        swap = piv != j
        if swap.any():
            rows_j = a[idx, j].copy()
            a[idx, j] = a[idx, piv]
            a[idx, piv] = rows_j
            det = np.where(swap, (p - det) % p, det)
        pv = a[:, j, j]
        det = det * pv % p
        inv = np.array([pow(int(v), p - 2, p) if v else 0 for v in pv], dtype=np.int64)
        if j + 1 < n:
            f = a[:, j + 1 :, j] * inv[:, None] % p
            a[:, j + 1 :, j:] = (a[:, j + 1 :, j:] - f[:, :, None] * a[:, j : j + 1, j:] % p) % p
    return np.where(alive, det, 0)


def _interpolate_mod(xs: List[int], ys: List[int], p: int) -> List[int]:
    """Coefficients (low to high) of the polynomial through the points, mod p."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) * pow(xs[i] - xs[i - j], p - 2, p) % p
    poly = [0] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (t - xs[i]) + coef[i]
        new = [0] * n
        for k in range(n - 1):
            new[k + 1] = (new[k + 1] + poly[k]) % p
        for k in range(n):
            new[k] = (new[k] - xs[i] * poly[k]) % p
        new[0] = (new[0] + coef[i]) % p
        poly = new
    return poly


def _minor_poly_mod(jac: np.ndarray, p: int) -> List[int]:
    m = jac.shape[0]
    minor = jac[: m - 1, : m - 1]
    npts = m  # degree <= m - 1
    xs = list(range(2, 2 + npts))
    x = np.array(xs, dtype=np.int64)
    mats = (minor[None, :, :, 0] + minor[None, :, :, 1] * x[:, None, None]) % p
    dets = _batched_det_mod(mats, p)
    return _interpolate_mod(xs, [int(v) for v in dets], p)


def _lift(c: int, p: int) -> int:
    return c - p if c > p // 2 else c


def alexander_oracle(code) -> LaurentPolynomial:
    """Alexander polynomial, symmetrized with positive value at t = 1."""
    code = as_code(code)
    data = wirtinger(code)
    if data.arcs == 1:
        return LaurentPolynomial.one()
    jac = _jacobian(data)
    lifted = []
    for p in PRIMES:
        lifted.append([_lift(c, p) for c in _minor_poly_mod(jac, p)])
    if lifted[0] != lifted[1]:
        raise ArithmeticError(f"{code}: coefficients exceed the modular range")
    poly = LaurentPolynomial.from_list(0, lifted[0])
    if poly.is_zero():
        raise ArithmeticError(f"{code}: vanishing Alexander minor for a knot")
    return poly.symmetrized()
