"""Exact interpolation of counting sequences against structural shapes.

Each structure theorem says that, from some n on, a count has the form
P(n) 2^n + Q(n) with bounded degrees (either part possibly absent).  Given the
shape, we solve for the coefficients on the first ``unknowns`` sample points
and insist that ``margin`` further points agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .errors import CapacityError, ShapeViolationError, UnsupportedParameterError
from .oracle import count_by_rank_states
from .recurrences import FamilyId, as_family

SAMPLE_CAP = 40
MARGIN = 3


@dataclass(frozen=True)
class StructuredFormula:
    """value(n) = sum pow2[i] n^i 2^n + sum poly[j] n^j, for n >= validity_floor."""

    shape: str
    pow2: tuple
    poly: tuple
    validity_floor: int
    source: str = ""

    def __call__(self, n: int) -> Fraction:
        t = Fraction(2) ** n
        return (sum(c * n ** i for i, c in enumerate(self.pow2)) * t
                + sum(c * n ** j for j, c in enumerate(self.poly)))

    def value(self, n: int) -> int:
        v = self(n)
        if v.denominator != 1:
            raise ArithmeticError(f"fitted value at n={n} is not an integer: {v}")
        return int(v)

    def degrees(self) -> tuple[int, int]:
        """Actual degrees of the 2^n part and the polynomial part (-1 if zero)."""
        def deg(cs):
            nz = [i for i, c in enumerate(cs) if c]
            return nz[-1] if nz else -1
        return deg(self.pow2), deg(self.poly)

    def __str__(self):
        def poly_text(cs):
            terms = []
            for i, c in enumerate(cs):
                if c:
                    terms.append(f"{c}" + ("" if i == 0 else ("*n" if i == 1 else f"*n^{i}")))
            return " + ".join(terms) if terms else "0"
        parts = []
        if any(self.pow2):
            parts.append(f"({poly_text(self.pow2)})*2^n")
        if any(self.poly) or not parts:
            parts.append(poly_text(self.poly))
        return " + ".join(parts) + f"  [n >= {self.validity_floor}]"


@dataclass(frozen=True)
class Shape:
    name: str
    pow2_degree: int  # negative means no 2^n part
    poly_degree: int  # negative means no polynomial part
    floor: int
    source: str
    stated_floor: int | None = None

    @property
    def unknowns(self) -> int:
        return max(self.pow2_degree + 1, 0) + max(self.poly_degree + 1, 0)


def solve_exact(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Gauss-Jordan elimination over the rationals for a square, nonsingular system."""
    n = len(matrix)
    a = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular interpolation system")
        a[col], a[pivot] = a[pivot], a[col]
        pv = a[col][col]
        a[col] = [v / pv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def _delta(v: int) -> int:
    return 1 if v == 0 else 0


def shape_for(key, r: int) -> Shape:
    """The structural shape claimed for ``key`` (a FamilyId, or ("joint", r, s))."""
    if isinstance(key, tuple) and key and key[0] == "joint":
        _, rr, s = key
        dp = rr + s + 1 - _delta(rr) - _delta(s)
        dq = rr + s - _delta(rr) - _delta(s)
        return Shape("P(n)*2^n + Q(n)", dp, dq, 1, "joint 12-3/13-2")
    fam = as_family(key)
    table = {
        ("f", "31-2"): lambda: Shape("polynomial P(n)", -1, 2 * r + 2, 0, "f:31-2"),
        # stated for n >= r+2; the polynomial only takes over from r+3 when r >= 1
        ("f", "32-1"): lambda: Shape("polynomial P(n)", -1, r + 1, 2 if r == 0 else r + 3,
                                     "f:32-1", stated_floor=r + 2),
        ("f", "13-2"): lambda: Shape("P(n)*2^n + Q(n)", r, r - 1, 1, "f:13-2"),
        ("g", "12-3"): lambda: Shape("P(n)*2^n + Q(n)", r, r - 1, 1, "g:12-3"),
        ("g", "21-3"): lambda: Shape("P(n)*2^n", r, -1, r + 1, "g:21-3", stated_floor=r),
        ("g", "23-1"): lambda: Shape("c*2^n + P(n)", 0, r - 1, r + 1 if r else 1, "g:23-1",
                                     stated_floor=r),
        ("g", "31-2"): lambda: Shape("P(n)*2^n + Q(n)", r, 2 * r - 2, 1, "g:31-2"),
        ("g", "32-1"): lambda: Shape("polynomial P(n)", -1, r + 2, r, "g:32-1"),
        ("h", "23-1"): lambda: Shape("P(n)*2^n", r, -1, r + 1, "h:23-1", stated_floor=r),
    }
    try:
        return table[(fam.symbol, fam.tau)]()
    except KeyError:
        raise UnsupportedParameterError(f"no structure theorem registered for {fam}") from None


def sampler_for(key, r: int) -> Callable[[int], int]:
    if isinstance(key, tuple) and key and key[0] == "joint":
        _, rr, s = key
        return lambda n: count_by_rank_states((), [("12-3", rr), ("13-2", s)], n)
    fam = as_family(key)
    return lambda n: count_by_rank_states([fam.avoid_class], [(fam.tau, r)], n)


def fit_structure(key, r: int = 0, floor: int | None = None, margin: int = MARGIN,
                  sample_cap: int = SAMPLE_CAP,
                  sampler: Callable[[int], int] | None = None) -> StructuredFormula:
    """Fit the registered shape for ``key`` exactly and check ``margin`` extra points.

    ``key`` is a family (``FamilyId`` or text like ``"g:21-3"``) with ``r``, or
    ``("joint", r, s)`` for the joint 12-3/13-2 counts (``r`` is then ignored).
    """
    if r < 0:
        raise UnsupportedParameterError("r must be nonnegative")
    if isinstance(key, tuple) and key and key[0] == "joint":
        r = key[1]
    shape = shape_for(key, r)
    start = shape.floor if floor is None else floor
    sample = sampler or sampler_for(key, r)
    u = shape.unknowns
    last = start + u + margin - 1
    if last > sample_cap:
        raise CapacityError(f"{u} unknowns + {margin} margin points need n up to {last} > {sample_cap}")
    ns = list(range(start, last + 1))
    values = {n: sample(n) for n in ns}

    def row(n):
        t = 2 ** n
        return ([n ** i * t for i in range(shape.pow2_degree + 1)]
                + [n ** j for j in range(shape.poly_degree + 1)])

    fit_ns = ns[:u]
    sol = solve_exact([row(n) for n in fit_ns], [values[n] for n in fit_ns]) if u else []
    k = max(shape.pow2_degree + 1, 0)
    formula = StructuredFormula(shape.name, tuple(sol[:k]), tuple(sol[k:]), start, shape.source)
    for n in ns[u:]:
        if formula(n) != values[n]:
            raise ShapeViolationError(
                f"{shape.source} shape {shape.name} for {key} r={r} from n={start}: "
                f"predicted {formula(n)} but counted {values[n]} at n={n}")
    return formula
