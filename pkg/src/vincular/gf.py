"""Generating functions: closed forms, functional equations, and the
Stieltjes continued fraction for the (2-31, 31-2) distribution."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import UnsupportedParameterError
from .series import EGF, OGF, TruncatedSeries, coeff_counts

S = TruncatedSeries


def _x(order, kind=OGF):
    return S.variable(order, kind)


def _one(order, kind=OGF):
    return S.constant(1, order, kind)


def exp_series(order: int, kind: str = EGF) -> TruncatedSeries:
    return S([Fraction(1, factorial(n)) for n in range(order + 1)], order, kind)


def falling_product(m: int, order: int) -> TruncatedSeries:
    """prod_{j=0}^{m} (1 - j x); the empty product (m = -1) is 1."""
    out = _one(order)
    for j in range(1, m + 1):
        out = out * S([1, -j], order)
    return out


def _partial_exp(k: int, order: int) -> TruncatedSeries:
    """sum_{j=0}^{k-2} x^j / j!"""
    return S([Fraction(1, factorial(j)) for j in range(k - 1)], order, EGF)


def nodash_egf(k: int, r: int, order: int) -> TruncatedSeries:
    """EGF of S_n(12-3) permutations with exactly r copies of (k-1)...21k.

    The count satisfies F_r' = P F_r + (e^x - P) F_{r-1} with P the partial
    exponential of degree k-2, which integrates to
    F_r = exp(int P) * int G_{r-1},  G_0 = e^x - P,  G_s = G_0 * int G_{s-1},
    all integrals taken from 0 (so F_r(0) = 0 for r >= 1).
    """
    if k < 2:
        raise UnsupportedParameterError("k must be >= 2")
    p = _partial_exp(k, order)
    base = p.integrate().exp()
    if r == 0:
        return base
    g0 = exp_series(order) - p
    g = g0
    for _ in range(r - 1):
        g = g0 * g.integrate()
    return base * g.integrate()


def bell_egf(order: int) -> TruncatedSeries:
    return (exp_series(order) - 1).exp()


def dash_egf(k: int, order: int) -> TruncatedSeries:
    """exp(x/1! + ... + x^(k-1)/(k-1)!)"""
    return S([0] + [Fraction(1, factorial(j)) for j in range(1, k)], order, EGF).exp()


def kkm1_k4_egf(order: int) -> TruncatedSeries:
    """1 + int_0^x exp(2t + t^2/2) dt"""
    inner = S([0, 2, Fraction(1, 2)], order, EGF).exp()
    return inner.integrate() + 1


def f23_1_r0_sum(order: int) -> TruncatedSeries:
    """sum_k x^{2k} / (p_{k-1} p_{k+1})"""
    total = S([], order)
    for k in range(order // 2 + 1):
        total = total + S.monomial(2 * k, order) / (falling_product(k - 1, order) * falling_product(k + 1, order))
    return total


def f23_1_r1_sum(order: int) -> TruncatedSeries:
    total = S([], order)
    for d in range(order // 2 + 1):
        inner = S([], order)
        for k in range(order // 2 + 1):
            inner = inner + S.monomial(2 * k, order) / (
                falling_product(k + d - 1, order) * falling_product(k + d + 1, order))
        total = total + S.monomial(2 * d + 2, order) / falling_product(d + 1, order) * (inner - 1)
    return total


def f23_1_r1_unfolded(order: int) -> TruncatedSeries:
    """r = 1 series for S_n(12-3) and 23-1, obtained by unfolding the r = 1
    functional equation; it agrees with the exact counts where the folded sum does not."""
    x = _x(order)
    total = S([], order)
    for m in range(order // 2 + 1):
        inner = S([], order)
        for k in range(order // 2 + 2):
            inner = inner + S.monomial(2 * k, order) / (
                falling_product(m + k, order) * falling_product(m + k + 2, order))
        p_m = falling_product(m, order)
        tail = 1 / (p_m * p_m * (1 - m * x) * (1 - (m + 1) * x))
        total = total + S.monomial(2 * m + 2, order) * ((1 - (m + 1) * x) / (1 - m * x) * inner - tail)
    return total


def h32_1_r1_sum(order: int) -> TruncatedSeries:
    """The r = 1 sum with the stray 'u' read as x and p_d = prod_{j<=d}(1 - j x)."""
    x = _x(order)
    total = S([], order)
    for m in range(order // 2 + 1):
        inner = S([], order)
        for k in range(order // 2 + 1):
            inner = inner + S.monomial(2 * (k + m), order) / (
                falling_product(m + k, order) * falling_product(m + k + 2, order))
        front = x * x * (1 - (m + 2) * x) / (1 - (m + 1) * x)
        total = total + front * inner
    return total


def ext2_ogf(r: int, order: int) -> TruncatedSeries:
    """Counts in S_n(12-3, 21-3) with r copies of 13-2 (equivalently 23-1)."""
    if r < 0:
        raise UnsupportedParameterError("r must be >= 0")
    x = _x(order)
    fib = 1 - x - x * x
    if r == 0:
        return 1 / fib
    return x * x * (1 - x) ** (r - 1) / fib ** (r + 1)


FORMULAS = {
    "bell": lambda r, order, k: bell_egf(order),
    "dash_k": lambda r, order, k: dash_egf(k, order),
    "nodash_k": lambda r, order, k: nodash_egf(k, r, order),
    "kkm1_k4": lambda r, order, k: kkm1_k4_egf(order),
    "f23_1_r0": lambda r, order, k: f23_1_r0_sum(order),
    "f23_1_r1": lambda r, order, k: f23_1_r1_sum(order),
    "f23_1_r1_unfolded": lambda r, order, k: f23_1_r1_unfolded(order),
    "h32_1_r0": lambda r, order, k: f23_1_r0_sum(order),
    "h32_1_r1": lambda r, order, k: h32_1_r1_sum(order),
    "ext2": lambda r, order, k: ext2_ogf(r, order),
}

_NEEDS_K = {"dash_k", "nodash_k"}


def series_from_formula(formula_id: str, r: int = 0, order: int = 10, k: int | None = None) -> TruncatedSeries:
    if formula_id not in FORMULAS:
        raise UnsupportedParameterError(f"unknown formula id {formula_id!r}; known: {sorted(FORMULAS)}")
    if formula_id in _NEEDS_K and k is None:
        raise UnsupportedParameterError(f"formula {formula_id!r} needs k")
    if order < 0:
        raise UnsupportedParameterError("order must be >= 0")
    return FORMULAS[formula_id](r, order, k)


# Functional equations.

def _shifted_tail_system(r: int, order: int) -> list[TruncatedSeries]:
    # F_r = (1-x)/(1-2x) [r=0] + x^2/(1-2x) sum_{d=1}^r (F_{r-d} - head_d(F_{r-d})) / (1-x)^d
    x = _x(order)
    one_m2x = 1 - 2 * x
    built: list[TruncatedSeries] = []
    for rr in range(r + 1):
        acc = (1 - x) / one_m2x if rr == 0 else S([], order)
        for d in range(1, rr + 1):
            prev = built[rr - d]
            tail = S([0] * d + list(prev.coeffs[d:]), order)
            acc = acc + x * x / one_m2x * tail / (1 - x) ** d
        built.append(acc)
    return built


def _composed_tail_system(r: int, order: int) -> list[TruncatedSeries]:
    # F_r = [r=0]/(1-x) + x^2 sum_{d=0}^r (1-x)^{d-2} (F_{r-d}(y) - head_d(F_{r-d})(y)), y = x/(1-x)
    x = _x(order)
    y = x / (1 - x)
    built: list[TruncatedSeries] = []
    for rr in range(r + 1):
        known = 1 / (1 - x) if rr == 0 else S([], order)
        for d in range(1, rr + 1):
            prev = built[rr - d]
            tail = S([0] * d + list(prev.coeffs[d:]), order)
            known = known + x * x * (1 - x) ** (d - 2) * tail.compose(y)
        # d = 0 term refers to F_rr itself; each pass fixes two more coefficients
        f = known
        for _ in range(order // 2 + 1):
            f = known + x * x / (1 - x) ** 2 * f.compose(y)
        built.append(f)
    return built


FUNCTIONAL_EQUATIONS = {
    "F_13_2": _shifted_tail_system,
    "H_13_2": _shifted_tail_system,
    "H_31_2": _shifted_tail_system,
    "F_23_1": _composed_tail_system,
}


def iterate_functional_equation(family: str, r: int, order: int) -> TruncatedSeries:
    """OGF of the family for r occurrences, built from the lower-r series."""
    if family not in FUNCTIONAL_EQUATIONS:
        raise UnsupportedParameterError(f"no functional equation for {family!r}")
    if r < 0 or order < 0:
        raise UnsupportedParameterError("r and order must be >= 0")
    return FUNCTIONAL_EQUATIONS[family](r, order)[r]


# Continued fraction.

def pq_integer(n: int, p, q) -> Fraction:
    """q^{n-1} + p q^{n-2} + ... + p^{n-1}"""
    if n < 1:
        raise UnsupportedParameterError("(p,q)-integers need n >= 1")
    p, q = Fraction(p), Fraction(q)
    return sum((p ** i * q ** (n - 1 - i) for i in range(n)), Fraction(0))


@dataclass(frozen=True)
class CFSpec:
    depth: int
    x: Fraction
    y: Fraction
    p: Fraction
    q: Fraction

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError("continued fraction depth must be >= 1")
        for name in ("x", "y", "p", "q"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def level(self, m: int) -> Fraction:
        """Weight of level m (1-based): x[1], y[1], x[2], y[2], ..."""
        idx = (m + 1) // 2
        w = self.x if m % 2 else self.y
        return w * pq_integer(idx, self.p, self.q)


def cf_expand(spec: CFSpec, order: int) -> TruncatedSeries:
    """Expand 1/(1 - a_1 t/(1 - a_2 t/(...))) truncated after ``spec.depth`` levels."""
    t = _x(order)
    inner = _one(order)
    for m in range(spec.depth, 0, -1):
        inner = 1 / (1 - spec.level(m) * t * inner)
    return inner


def cf_series(x, y, p, q, order: int) -> TruncatedSeries:
    return cf_expand(CFSpec(2 * max(order, 1), x, y, p, q), order)
