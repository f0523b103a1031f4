"""Integer Laurent polynomials in one variable ``t``."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple


class LaurentPolynomial:
    """Immutable Laurent polynomial with arbitrary-precision integer coefficients.

    Stored sparsely as ``{exponent: coefficient}`` with zero coefficients dropped.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c: Dict[int, int] = {}
        for e, a in (coeffs or {}).items():
            if a:
                c[int(e)] = int(a)
        self._c = c

    # construction ---------------------------------------------------------
    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls({exp: coeff})

    @classmethod
    def from_list(cls, min_exp: int, coeffs: Iterable[int]) -> "LaurentPolynomial":
        return cls({min_exp + i: a for i, a in enumerate(coeffs)})

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    # access ---------------------------------------------------------------
    def coefficients(self) -> Dict[int, int]:
        return dict(self._c)

    def __getitem__(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._c

    @property
    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    @property
    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def span(self) -> int:
        return self.max_exp - self.min_exp

    def degree(self) -> int:
        """Top exponent; for a symmetrized knot polynomial this is the genus bound."""
        return self.max_exp

    def leading_coefficient(self) -> int:
        return self._c[self.max_exp]

    def max_abs_coefficient(self) -> int:
        return max((abs(a) for a in self._c.values()), default=0)

    def dense(self) -> Tuple[int, list]:
        lo, hi = self.min_exp, self.max_exp
        return lo, [self._c.get(e, 0) for e in range(lo, hi + 1)]

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        c = dict(self._c)
        for e, a in other._c.items():
            c[e] = c.get(e, 0) + a
        return LaurentPolynomial(c)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -a for e, a in self._c.items()})

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial({e: a * other for e, a in self._c.items()})
        c: Dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + a1 * a2
        return LaurentPolynomial(c)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by ``t**k``."""
        return LaurentPolynomial({e + k: a for e, a in self._c.items()})

    def substitute_inverse(self) -> "LaurentPolynomial":
        """Return p(t^-1)."""
        return LaurentPolynomial({-e: a for e, a in self._c.items()})

    def halve_exponents(self) -> "LaurentPolynomial":
        """Map t^(2k) -> t^k; raises if an odd exponent is present."""
        if any(e % 2 for e in self._c):
            raise ValueError(f"odd exponent in {self}; cannot halve")
        return LaurentPolynomial({e // 2: a for e, a in self._c.items()})

    def evaluate(self, t: int):
        total = Fraction(0)
        for e, a in self._c.items():
            total += a * Fraction(t) ** e
        return total.numerator if total.denominator == 1 else total

    # normalizations -------------------------------------------------------
    def is_symmetric(self) -> bool:
        return all(self._c.get(-e, 0) == a for e, a in self._c.items())

    def symmetrized(self) -> "LaurentPolynomial":
        """Shift so the support is centred at 0 and make p(1) > 0.

        Raises ``ValueError`` when the exponent span is odd.
        """
        if self.is_zero():
            return self
        span = self.span()
        if span % 2:
            raise ValueError(f"odd span {span}; not a knot polynomial")
        p = self.shift(-(self.min_exp + span // 2))
        if p.evaluate(1) < 0:
            p = -p
        return p

    # comparison -----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def equal_up_to_unit(self, other: "LaurentPolynomial") -> bool:
        """Equality up to multiplication by +-t^k."""
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        k = other.min_exp - self.min_exp
        s = self.shift(k)
        return s == other or -s == other

    # rendering ------------------------------------------------------------
    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c):
            a = self._c[e]
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if e == 0:
                body = str(mag)
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if mag == 1 else f"{mag}{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"

    def to_json(self) -> dict:
        if self.is_zero():
            return {"min_exp": 0, "coeffs": []}
        lo, coeffs = self.dense()
        return {"min_exp": lo, "coeffs": coeffs}

    @classmethod
    def from_json(cls, obj) -> "LaurentPolynomial":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls.from_list(obj["min_exp"], obj["coeffs"])

    @classmethod
    def parse(cls, text: str) -> "LaurentPolynomial":
        """Parse the rendering produced by ``str`` (also accepts ``t^{-2}`` and unicode minus)."""
        s = text.replace("−", "-").replace("{", "").replace("}", "").replace(" ", "")
        if not s or s == "0":
            return cls()
        if s[0] not in "+-":
            s = "+" + s
        c: Dict[int, int] = {}
        for sign, mag, var, exp in re.findall(r"([+-])(\d*)(t?)(?:\^(-?\d+))?", s):
            if not mag and not var:
                continue
            a = int(mag) if mag else 1
            e = (int(exp) if exp else 1) if var else 0
            c[e] = c.get(e, 0) + (a if sign == "+" else -a)
        return cls(c)
