"""Melvin-Morton coefficients, the (h, z) resummation into lines, and P_n recovery.

V_alpha(q = 1+h) = sum_{n, m} D[m, n] alpha^(2m) h^n.  Regrouping by
x = alpha*h gives V = sum_k h^k sum_m D[m, k+2m] x^(2m); substituting x as a
series in (h, z) with z = q^(alpha/2) - q^(-alpha/2) yields the lines
V^(k)(z) = sum_m d[k][m] z^(2m), and P_k = V^(k) * Delta^(2k+1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .braid import BraidWord, require_knot
from .burau import ConwayPolynomial, alexander_conway, poly_mul, poly_trim
from .errors import ConsistencyError, InputError
from .exactalg import BivarSeries, alpha_h_in_z, is_integer, norm
from .qtrace import jones_h_series


@dataclass(frozen=True)
class MMTable:
    D: dict  # (m, n) -> rational
    order: int
    samples: tuple

    def __getitem__(self, mn):
        return self.D.get(mn, 0)

    @property
    def max_m(self) -> int:
        return len(self.samples) - 1


def default_samples(order: int) -> tuple:
    return tuple(range(1, order // 2 + 2))


def solve_exact(a: list, rhs: list) -> list:
    """Gauss-Jordan elimination over the rationals for a square nonsingular system."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(a, rhs)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            raise ConsistencyError("singular linear system")
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [norm(row[n]) for row in m]


def fit_in_alpha_squared(samples, values) -> list:
    """Coefficients of the polynomial in alpha^2 through (alpha, value) pairs."""
    sq = [a * a for a in samples]
    if len(set(sq)) != len(sq):
        raise InputError("colour samples must be distinct")
    k = len(samples)
    return solve_exact([[s ** j for j in range(k)] for s in sq], values)


def extract_D(b: BraidWord, order: int, samples=None) -> MMTable:
    """Exact D[m, n] for n <= order from V_alpha at the sampled colours."""
    require_knot(b)
    if order < 0:
        raise InputError("order must be >= 0")
    samples = tuple(samples) if samples is not None else default_samples(order)
    if len(samples) < order // 2 + 1:
        raise InputError(f"need at least {order // 2 + 1} colour samples for order {order}")
    series = [jones_h_series(b, a, order) for a in samples]
    D = {}
    for n in range(order + 1):
        coeffs = fit_in_alpha_squared(samples, [s[n] for s in series])
        for m, c in enumerate(coeffs):
            if c:
                D[(m, n)] = c
    return MMTable(D, order, samples)


def to_line_series(table: MMTable) -> BivarSeries:
    """V as a series in (h, z); ``line(k)`` is V^(k) as a z-series.

    Only z^(2m) with k + 2m <= table.order is reliable in line k.
    """
    M = table.order
    x = alpha_h_in_z(M, M)
    x2 = x * x
    total = BivarSeries.from_grid([[0]], M, M)
    power = BivarSeries.from_grid([[1]], M, M)
    for m in range(M // 2 + 1):
        grid = [[table[m, k + 2 * m]] for k in range(M + 1 - 2 * m)]
        if any(g[0] for g in grid):
            total = total + BivarSeries.from_grid(grid, M, M) * power
        power = power * x2
    return total


def line_coefficients(table: MMTable, n: int, series: BivarSeries | None = None) -> list:
    """Reliable d[n][m], m = 0..(order - n) // 2."""
    if n < 0 or n > table.order:
        raise InputError(f"line {n} not available at order {table.order}")
    s = series if series is not None else to_line_series(table)
    return [s.coeff(n, 2 * m) for m in range((table.order - n) // 2 + 1)]


@dataclass(frozen=True)
class LineResult:
    n: int
    conway: tuple
    line: tuple  # d[n][m], ascending m
    P: tuple | None  # ascending powers of z^2; None when undetermined
    residual_zero_order: int  # highest z-power through which the check is exact
    stable: bool
    line_integral: bool
    P_integral: bool
    undetermined_at: tuple | None = None  # (z^2 power, value)
    source: str = "direct"
    meta: dict = field(default_factory=dict)


def rational_line(P, delta: ConwayPolynomial, n: int, count: int) -> list:
    """First ``count`` z^2-coefficients of P / Delta^(2n+1) (Delta(0) = 1, so division is exact)."""
    den = [1]
    for _ in range(2 * n + 1):
        den = poly_mul(den, list(delta.coeffs))[:count]
    den += [0] * (count - len(den))
    num = list(P)[:count] + [0] * max(0, count - len(P))
    out = []
    for k in range(count):
        c = num[k] - sum(out[i] * den[k - i] for i in range(k))
        out.append(norm(c))
    return out


STABILITY_POLICY = "trailing ceil(k/3) of k available z^2 coefficients of P must vanish"


def stabilize(candidate: list):
    """Apply the trailing-zero policy; returns (P or None, offending (index, value) or None)."""
    k = len(candidate)
    tail = -(-k // 3)
    for i in range(k - tail, k):
        if candidate[i]:
            return None, (i, candidate[i])
    return tuple(poly_trim(candidate[: k - tail])) or (0,), None


def lines_to_result(n: int, delta: ConwayPolynomial, line: list, source: str, meta=None) -> LineResult:
    k = len(line)
    dpow = [1]
    for _ in range(2 * n + 1):
        dpow = poly_mul(dpow, list(delta.coeffs))[:k]
    cand = [norm(c) for c in poly_mul(line, dpow)[:k]]
    P, bad = stabilize(cand)
    meta = dict(meta or {})
    meta["stability_policy"] = STABILITY_POLICY
    return LineResult(
        n=n,
        conway=delta.coeffs,
        line=tuple(line),
        P=P,
        residual_zero_order=2 * (k - 1) if P is not None else 2 * (bad[0] - 1),
        stable=P is not None,
        line_integral=all(is_integer(c) for c in line),
        P_integral=P is not None and all(is_integer(c) for c in P),
        undetermined_at=bad,
        source=source,
        meta=meta,
    )


def recover_P(b: BraidWord, n: int, table: MMTable, series: BivarSeries | None = None) -> LineResult:
    """P_n = V^(n) Delta^(2n+1), with the stabilisation check on trailing coefficients."""
    delta = alexander_conway(b)
    return lines_to_result(n, delta, line_coefficients(table, n, series), "direct")


@dataclass(frozen=True)
class IntegralityReport:
    mm_bound: bool
    mm_bound_first_failure: tuple | None
    factorial_D: bool
    factorial_D_first_failure: tuple | None
    line_coeffs: bool
    line_coeffs_first_failure: tuple | None
    P_coeffs: bool
    P_coeffs_first_failure: tuple | None

    @property
    def ok(self) -> bool:
        return self.mm_bound and self.factorial_D and self.line_coeffs and self.P_coeffs


def check_integrality(table: MMTable, lines) -> IntegralityReport:
    mm = next(((m, n) for (m, n), c in sorted(table.D.items()) if 2 * m > n and c), None)
    fd = next(
        ((m, n) for (m, n), c in sorted(table.D.items()) if not is_integer(factorial(n) * Fraction(c))),
        None,
    )
    lc = next(((r.n, m) for r in lines for m, c in enumerate(r.line) if not is_integer(c)), None)
    pc = next(
        ((r.n, m) for r in lines if r.P is not None for m, c in enumerate(r.P) if not is_integer(c)),
        None,
    )
    return IntegralityReport(mm is None, mm, fd is None, fd, lc is None, lc, pc is None, pc)
