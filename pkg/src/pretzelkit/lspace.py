"""L-space obstructions for pretzel knots and the enumeration harness.

The pipeline for one knot: fibered?  every |a_s| <= 1?  det <= 2g + 1?  then
match against the known L-space families.  The single knot that survives every
Alexander-polynomial test without being in a family is (3,-5,3,-2), whose knot
Floer homology is embedded below.
"""

from __future__ import annotations

import json
import multiprocessing
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from .core import (
    NotAKnotError,
    PretzelCode,
    Unknot,
    as_code,
    canonical,
    component_count,
    enumerate_codes,
    is_normalized,
    normalize,
)
from .fibered import NotMinimallyPresented, is_fibered
from .invariants import determinant_formula
from .laurent import LaurentPolynomial
from .statesum import alexander

LSPACE = "LSpaceKnot"
NOT_LSPACE = "NotLSpaceKnot"
UNRESOLVED = "Unresolved"


# --- families -----------------------------------------------------------------


@dataclass(frozen=True)
class NegTwoThreeQ:
    q: int

    def __str__(self) -> str:
        return f"NegTwoThreeQ({self.q})"


@dataclass(frozen=True)
class Torus2:
    """T(2, 2n+1), recorded up to mirror image (n >= 0; n = 0 is the unknot)."""

    n: int

    def __str__(self) -> str:
        return f"Torus2({self.n})"


@dataclass(frozen=True)
class HFKException:
    def __str__(self) -> str:
        return "HFKException"


Family = Union[NegTwoThreeQ, Torus2, HFKException]

# (-2,3,1), (-2,3,3) and (-2,3,5) are T(2,5), T(3,4) and T(3,5); kept as notes only
FAMILY_NOTES = {1: "T(2,5)", 3: "T(3,4)", 5: "T(3,5)"}


def parse_family(text: Optional[str]) -> Optional[Family]:
    if not text:
        return None
    if text == "HFKException":
        return HFKException()
    name, _, arg = text.partition("(")
    value = int(arg.rstrip(")"))
    if name == "NegTwoThreeQ":
        return NegTwoThreeQ(value)
    if name == "Torus2":
        return Torus2(value)
    raise ValueError(f"unknown family {text!r}")


# --- the exceptional knot ------------------------------------------------------


@dataclass(frozen=True)
class HFKTable:
    """dim over F_2 of knot Floer homology, keyed by (Maslov, Alexander)."""

    code: Tuple[int, ...]
    entries: Dict[Tuple[int, int], int]

    def alexander_gradings(self) -> List[int]:
        return sorted({s for _, s in self.entries})

    def euler_characteristic(self, s: int) -> int:
        return sum((-1) ** (m % 2) * d for (m, a), d in self.entries.items() if a == s)

    def column_dimension(self, s: int) -> int:
        return sum(d for (_, a), d in self.entries.items() if a == s)

    def graded_euler(self) -> LaurentPolynomial:
        return LaurentPolynomial({s: self.euler_characteristic(s) for s in self.alexander_gradings()})

    def big_columns(self) -> List[int]:
        """Alexander gradings whose total dimension is at least 2."""
        return [s for s in self.alexander_gradings() if self.column_dimension(s) >= 2]

    def render(self) -> str:
        ss = self.alexander_gradings()
        ms = sorted({m for m, _ in self.entries}, reverse=True)
        width = 5
        head = "M\\A".rjust(width) + "".join(str(s).rjust(width) for s in ss)
        lines = [head]
        for m in ms:
            cells = []
            for s in ss:
                d = self.entries.get((m, s), 0)
                cells.append(("F^%d" % d if d > 1 else "F" if d else ".").rjust(width))
            lines.append(str(m).rjust(width) + "".join(cells))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "code": list(self.code),
            "entries": [[m, s, d] for (m, s), d in sorted(self.entries.items())],
        }


HFK_3_M5_3_M2 = HFKTable(
    (3, -5, 3, -2),
    {
        (4, 3): 1,
        (3, 2): 3,
        (2, 2): 2,
        (2, 1): 4,
        (1, 1): 4,
        (1, 0): 3,
        (0, 0): 4,
        (0, -1): 4,
        (-1, -1): 4,
        (-1, -2): 3,
        (-2, -2): 2,
        (-2, -3): 1,
    },
)

_EXCEPTION_CLASS = canonical(HFK_3_M5_3_M2.code)


# --- obstructions ---------------------------------------------------------------


def coefficient_obstruction(poly: LaurentPolynomial) -> bool:
    """True iff every coefficient has absolute value at most one (no obstruction)."""
    return poly.max_abs_coefficient() <= 1


def two_bridge_form(code) -> Optional[Tuple[int, int]]:
    """``(p, q)`` with the knot equal to the two-bridge knot S(p, q), or None.

    A pretzel code with at most two tangles of length > 1 is a sum of at most two
    rational tangles plus an integer twist ``e``, so its closure is two-bridge.
    """
    code = as_code(code)
    big = [n for n in code if abs(n) > 1]
    e = sum(n for n in code if abs(n) == 1)
    if len(big) == 0:
        p, q = abs(e), 1
    elif len(big) == 1:
        a = big[0]
        p, q = abs(e * a + 1), a
    elif len(big) == 2:
        a, b = big
        p, q = abs(a + b + e * a * b), e * b + 1
    else:
        return None
    return p, (q % p if p else 0)


def two_bridge_alexander(p: int, q: int) -> LaurentPolynomial:
    """Alexander polynomial of S(p, q) by Hartley's sign-sequence formula."""
    if p == 1:
        return LaurentPolynomial.one()
    if q % 2 == 0:
        q -= p
    c: Dict[int, int] = {}
    k = 0
    for i in range(p):
        if i:
            k += -1 if (i * q // p) % 2 else 1
        c[k] = c.get(k, 0) + (-1) ** i
    return LaurentPolynomial(c).symmetrized()


def _torus_from_two_bridge(code) -> Optional[Torus2]:
    form = two_bridge_form(code)
    if form is None:
        return None
    p, q = form
    if p == 1 or q in (1, p - 1):
        return Torus2((p - 1) // 2)
    return None


def match_family(code) -> Optional[Family]:
    """Known L-space family the code belongs to, up to symmetry."""
    norm = normalize(code)
    if isinstance(norm, Unknot):
        return Torus2(0)
    t = norm.tangles
    for cand in (t, tuple(-n for n in t)):
        if len(cand) == 3 and -2 in cand and 3 in cand:
            rest = list(cand)
            rest.remove(-2)
            rest.remove(3)
            q = rest[0]
            if q >= 1 and q % 2 == 1:
                return NegTwoThreeQ(q)
    if len(t) <= 2:
        s = sum(t) if len(t) == 2 else 1
        return Torus2((abs(s) - 1) // 2)
    if len(t) % 2 == 1 and all(abs(n) == 1 for n in t) and len(set(t)) == 1:
        return Torus2((len(t) - 1) // 2)
    return _torus_from_two_bridge(norm)


def is_hfk_exception(code) -> bool:
    norm = normalize(code)
    return isinstance(norm, PretzelCode) and canonical(norm.tangles) == _EXCEPTION_CLASS


# --- classification ---------------------------------------------------------------


@dataclass(frozen=True)
class LSpaceReport:
    code: str
    normalized: str
    type: str
    fibered: bool
    genus: Optional[int]
    det: int
    coeff_ok: bool
    det_ok: Optional[bool]
    family: Optional[str]
    verdict: str
    elimination_reason: Optional[str]
    alexander: str

    def __post_init__(self):
        if self.verdict == LSPACE:
            assert self.fibered and self.coeff_ok

    @property
    def reason_kind(self) -> str:
        if self.elimination_reason is None:
            return "family" if self.verdict == LSPACE else "unresolved"
        return self.elimination_reason.split(":")[0]

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, obj: dict) -> "LSpaceReport":
        return cls(**obj)

    def csv_row(self) -> List[str]:
        def b(x):
            return "" if x is None else str(x).lower()

        return [
            self.normalized,
            self.type,
            b(self.fibered),
            "" if self.genus is None else str(self.genus),
            str(self.det),
            b(self.coeff_ok),
            self.family or "",
            self.verdict,
            self.elimination_reason or "",
        ]


CSV_COLUMNS = ["code", "type", "fibered", "genus", "det", "coeff_ok", "family", "verdict", "elimination_reason"]


def classify_lspace(code) -> LSpaceReport:
    code = as_code(code)
    comps = component_count(code)
    if comps != 1:
        raise NotAKnotError(code, comps)
    norm = normalize(code)
    if isinstance(norm, Unknot):
        return LSpaceReport(str(code), str(norm), "Unknot", True, 0, 1, True, True, str(Torus2(0)), LSPACE, None, "1")

    delta = alexander(norm)
    det = determinant_formula(norm)
    coeff_ok = coefficient_obstruction(delta)
    try:
        fv = is_fibered(norm, with_genus=False)
    except NotMinimallyPresented as exc:
        return LSpaceReport(
            str(code), str(norm), "Type2C", False, None, det, coeff_ok, None, None,
            NOT_LSPACE, f"not minimally presented: {exc}", str(delta),
        )
    kind = fv.type.value
    if not fv.fibered:
        return LSpaceReport(
            str(code), str(norm), kind, False, None, det, coeff_ok, None, None,
            NOT_LSPACE, "not fibered", str(delta),
        )
    genus = delta.degree()
    det_ok = det <= 2 * genus + 1
    if not coeff_ok:
        reason = f"coefficient: |a_s| = {delta.max_abs_coefficient()}"
        return LSpaceReport(str(code), str(norm), kind, True, genus, det, False, det_ok, None, NOT_LSPACE, reason, str(delta))
    if not det_ok:
        reason = f"determinant: det {det} > 2g+1 = {2 * genus + 1}"
        return LSpaceReport(str(code), str(norm), kind, True, genus, det, True, False, None, NOT_LSPACE, reason, str(delta))
    if is_hfk_exception(norm):
        cols = HFK_3_M5_3_M2.big_columns()
        reason = f"HFK: dimension >= 2 in Alexander gradings {cols}"
        return LSpaceReport(
            str(code), str(norm), kind, True, genus, det, True, True, str(HFKException()), NOT_LSPACE, reason, str(delta),
        )
    fam = match_family(norm)
    if fam is not None:
        return LSpaceReport(str(code), str(norm), kind, True, genus, det, True, True, str(fam), LSPACE, None, str(delta))
    return LSpaceReport(str(code), str(norm), kind, True, genus, det, True, True, None, UNRESOLVED, None, str(delta))


# --- enumeration ---------------------------------------------------------------


class CounterexampleFound(Exception):
    def __init__(self, report: "VerificationReport"):
        codes = ", ".join(r.normalized for r in report.counterexamples)
        super().__init__(f"survivors outside every family: {codes}")
        self.report = report


@dataclass
class VerificationReport:
    max_r: int
    max_twist: int
    rows: List[LSpaceReport] = field(default_factory=list)

    @property
    def counterexamples(self) -> List[LSpaceReport]:
        return [r for r in self.rows if r.verdict == UNRESOLVED]

    def counts(self) -> Dict[str, int]:
        return dict(sorted(Counter(r.reason_kind for r in self.rows).items()))

    def to_json(self) -> dict:
        return {
            "max_r": self.max_r,
            "max_twist": self.max_twist,
            "counts": self.counts(),
            "counterexamples": [r.normalized for r in self.counterexamples],
            "rows": [r.to_json() for r in self.rows],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "VerificationReport":
        return cls(obj["max_r"], obj["max_twist"], [LSpaceReport.from_json(r) for r in obj["rows"]])

    def render_json(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True)


def verification_codes(max_r: int, max_twist: int) -> List[PretzelCode]:
    """Normalized knot codes, one per rotation/reversal/mirror class."""
    return [c for c in enumerate_codes(max_r, max_twist, up_to="dihedral") if is_normalized(c)]


def _sort_key(code: PretzelCode):
    return (code.r, code.tangles)


def verify_theorem1(max_r: int, max_twist: int, workers: int = 1, strict: bool = True) -> VerificationReport:
    if max_r < 3 or max_twist < 1:
        raise ValueError("need max_r >= 3 and max_twist >= 1")
    codes = sorted(verification_codes(max_r, max_twist), key=_sort_key)
    if workers > 1:
        with multiprocessing.Pool(workers) as pool:
            rows = pool.map(classify_lspace, codes, chunksize=64)
    else:
        rows = [classify_lspace(c) for c in codes]
    report = VerificationReport(max_r, max_twist, rows)
    if strict and report.counterexamples:
        raise CounterexampleFound(report)
    return report


__all__ = [
    "CSV_COLUMNS",
    "CounterexampleFound",
    "FAMILY_NOTES",
    "HFKException",
    "HFKTable",
    "HFK_3_M5_3_M2",
    "LSpaceReport",
    "NegTwoThreeQ",
    "Torus2",
    "VerificationReport",
    "classify_lspace",
    "coefficient_obstruction",
    "is_hfk_exception",
    "match_family",
    "parse_family",
    "two_bridge_alexander",
    "two_bridge_form",
    "verify_theorem1",
]
