"""Perturbed Burau route to the lines V^(n) for small n.

Every crossing carries formal parameters: an offset of ``a`` (or ``a'``)
around 1 - t (or 1 - 1/t) and three exponents eps1, eps2, eps12 around 0,
with t = q^(-alpha) kept formal.  The h-expansion of the exact R-check
matrix elements becomes a differential operator in these parameters acting
on the parametrized braid operator, whose graded traces sum to
1/det(1 - kappa * reduced parametrized Burau).  Reading off h^n at fixed t
gives V^(n) as (Laurent polynomial in t) / det^(2n+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .braid import BraidWord, require_knot
from .burau import ConwayPolynomial, LaurentMatrix, alexander_conway, reduced_burau, symmetric_to_z2
from .errors import ConsistencyError, InputError
from .exactalg import LAURENT_T, Laurent, TruncSeries, norm
from .mmexpand import LineResult, rational_line
from .rmatrix import GradedVector, act_letter, graded_states

T = Laurent


# ---------------------------------------------------------------------------
# sparse multivariate polynomials


class MPoly:
    """Sparse polynomial in ``nvars`` variables; exponents are tuples.

    Coefficients may be rationals or Laurent polynomials in t.
    """

    __slots__ = ("nvars", "terms", "names")

    def __init__(self, nvars: int, terms=None, names=None):
        self.nvars = nvars
        self.names = names
        self.terms = {}
        for e, c in (terms or {}).items():
            if c:
                self.terms[tuple(e)] = norm(c) if isinstance(c, Fraction) else c

    @classmethod
    def _raw(cls, nvars, terms, names=None):
        obj = cls.__new__(cls)
        obj.nvars, obj.terms, obj.names = nvars, terms, names
        return obj

    @classmethod
    def const(cls, nvars, c, names=None):
        return cls(nvars, {(0,) * nvars: c}, names)

    @classmethod
    def var(cls, nvars, i, coeff=1, names=None):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): coeff}, names)

    def _lift(self, other):
        if isinstance(other, MPoly):
            return other
        return MPoly.const(self.nvars, other)

    def __add__(self, other):
        other = self._lift(other)
        d = dict(self.terms)
        for e, c in other.terms.items():
            v = d[e] + c if e in d else c
            if v:
                d[e] = norm(v) if isinstance(v, Fraction) else v
            else:
                del d[e]
        return MPoly._raw(self.nvars, d, self.names or other.names)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def mul(self, other, weights=None, cap=None):
        """Product, dropping terms whose weighted degree exceeds ``cap``."""
        other = self._lift(other)
        d: dict = {}
        w = weights
        for e1, c1 in self.terms.items():
            d1 = sum(a * b for a, b in zip(e1, w)) if cap is not None else 0
            for e2, c2 in other.terms.items():
                if cap is not None and d1 + sum(a * b for a, b in zip(e2, w)) > cap:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                d[e] = d[e] + v if e in d else v
        clean = {}
        for e, v in d.items():
            if v:
                clean[e] = norm(v) if isinstance(v, Fraction) else v
        return MPoly._raw(self.nvars, clean, self.names or other.names)

    def __mul__(self, other):
        if isinstance(other, MPoly):
            return self.mul(other)
        if not other:
            return MPoly._raw(self.nvars, {}, self.names)
        return MPoly(self.nvars, {e: c * other for e, c in self.terms.items()}, self.names)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        r = MPoly.const(self.nvars, 1, self.names)
        for _ in range(k):
            r = r * self
        return r

    def truncate(self, weights, cap):
        return MPoly._raw(
            self.nvars,
            {e: c for e, c in self.terms.items() if sum(a * b for a, b in zip(e, weights)) <= cap},
            self.names,
        )

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def coeff(self, e):
        return self.terms.get(tuple(e), 0)

    def constant(self):
        return self.terms.get((0,) * self.nvars, 0)

    def subs(self, values):
        """Substitute variable i by values[i] (MPoly or scalar); result lives in values' ring."""
        out = None
        for e, c in self.terms.items():
            term = None
            for i, k in enumerate(e):
                if k:
                    p = values[i] ** k
                    term = p if term is None else term * p
            term = c if term is None else term * c
            out = term if out is None else out + term
        return out if out is not None else 0

    def collect(self, i: int) -> dict:
        """Group by the power of variable i: {k: MPoly with that variable removed (set to 0)}."""
        out: dict = {}
        for e, c in self.terms.items():
            k = e[i]
            ee = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[ee] = c
        return {k: MPoly._raw(self.nvars, d, self.names) for k, d in out.items()}

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.terms == other.terms
        return self.terms == MPoly.const(self.nvars, other).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        names = self.names or tuple(f"x{i}" for i in range(self.nvars))
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            c = self.terms[e]
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ") or "0"


def IntPolynomial2(terms=None, names=("m", "n")) -> MPoly:
    """Bivariate rational polynomial with named variables."""
    return MPoly(2, terms, names)


# ---------------------------------------------------------------------------
# power sums


@lru_cache(maxsize=None)
def power_sum(p: int) -> tuple:
    """Coefficients (ascending in x) of sum_{l=1}^{x} l^p."""
    # (x+1)^{p+1} - 1 = sum_{i<=p} C(p+1, i) F_i(x)
    lhs = [Fraction(comb(p + 1, i)) for i in range(p + 2)]
    lhs[0] -= 1
    for i in range(p):
        for d, c in enumerate(power_sum(i)):
            lhs[d] -= comb(p + 1, i) * c
    return tuple(norm(c / (p + 1)) for c in lhs)


def sum_over(f: MPoly, var: int, lo: MPoly, hi: MPoly) -> MPoly:
    """sum_{var = lo+1}^{hi} f, for polynomial lo and hi not involving ``var``."""
    out = MPoly(f.nvars, names=f.names)
    for k, c in f.collect(var).items():
        F = power_sum(k)
        diff = MPoly(f.nvars)
        hp = MPoly.const(f.nvars, 1)
        lp = MPoly.const(f.nvars, 1)
        for a in F:
            if a:
                diff = diff + (hp - lp) * a
            hp = hp * hi
            lp = lp * lo
        out = out + c * diff
    return out


def falling(x: MPoly, j: int, start: int = 0) -> MPoly:
    r = MPoly.const(x.nvars, 1)
    for i in range(start, start + j):
        r = r * (x - i)
    return r


def divide_linear(p: MPoly, var: int, shift: MPoly) -> MPoly:
    """Exact quotient of p by (x_var - shift), shift free of x_var.

    Synthetic division in x_var; a nonzero remainder is a ConsistencyError.
    """
    groups = p.collect(var)
    top = max(groups, default=-1)
    if top < 0:
        return p
    n = p.nvars
    coeffs = [groups.get(k, MPoly(n)) for k in range(top + 1)]
    quot = [MPoly(n)] * top
    carry = MPoly(n)
    for k in range(top, 0, -1):
        carry = coeffs[k] + carry * shift
        quot[k - 1] = carry
    rem = coeffs[0] + carry * shift
    if rem:
        raise ConsistencyError(f"non-exact division by a linear factor, remainder {rem!r}")
    xv = MPoly.var(n, var)
    out = MPoly(n, names=p.names)
    pw = MPoly.const(n, 1)
    for q in quot:
        out = out + q * pw
        pw = pw * xv
    return out


# ---------------------------------------------------------------------------
# expansion polynomials of the R-check matrix elements


@lru_cache(maxsize=None)
def _t_r2_table(jmax: int) -> tuple:
    # variables: h, l, m, n
    H, L, M, N = 0, 1, 2, 3
    w = (1, 0, 0, 0)
    h = MPoly.var(4, H)
    l = MPoly.var(4, L)
    # ((1+h)^l - 1)/(l h) = 1 + sum_k h^k prod_{1<=i<=k}(l-i)/(k+1)!
    u = MPoly(4)
    for k in range(1, jmax + 1):
        u = u + falling(l, k, 1) * Fraction(1, factorial(k + 1)) * h ** k
    # log(1+u)
    lg = MPoly(4)
    upow = MPoly.const(4, 1)
    for i in range(1, jmax + 1):
        upow = upow.mul(u, w, jmax)
        lg = lg + upow * Fraction((-1) ** (i + 1), i)

    def summed(upper: MPoly) -> MPoly:
        return sum_over(lg, L, MPoly(4), upper)

    m, n = MPoly.var(4, M), MPoly.var(4, N)
    expo = summed(m) - summed(m - n) - summed(n)
    # exp
    total = MPoly.const(4, 1)
    epow = MPoly.const(4, 1)
    for i in range(1, jmax + 1):
        epow = epow.mul(expo, w, jmax)
        total = total + epow * Fraction(1, factorial(i))
    out = []
    for j in range(1, jmax + 1):
        terms = {(e[M], e[N]): c for e, c in total.terms.items() if e[H] == j}
        out.append(IntPolynomial2(terms, ("m", "n")))
    return tuple(out)


def gen_T_R2(j: int) -> MPoly:
    """h^j coefficient of qbinom(m, n)/binom(m, n) at q = 1 + h, as a polynomial in (m, n)."""
    if j < 1:
        raise ValueError("j >= 1")
    return _t_r2_table(j)[j - 1]


@lru_cache(maxsize=None)
def gen_T_R1(j: int, k: int) -> MPoly:
    """Polynomials T(j, k)(m1, m2) with

    sum over m1 < l_1 < ... < l_j <= m2 of prod ((1+h)^(-l_i) - 1)/h
      = prod_{0<=i<j} (m2 - m1 - i) * sum_k h^k T(j, k)(m1, m2).
    """
    if j < 0 or k < 0:
        raise ValueError("j, k >= 0")
    if j == 0:
        return IntPolynomial2({(0, 0): 1} if k == 0 else {}, ("m1", "m2"))
    # variables: m1, m2, l
    M1, M2, L = 0, 1, 2
    m1, m2, l = MPoly.var(3, M1), MPoly.var(3, M2), MPoly.var(3, L)
    total = MPoly(3)
    for kp in range(k + 1):
        kk = k - kp
        prev = gen_T_R1(j - 1, kp)
        prev3 = MPoly(3, {(e[0], 0, e[1]): c for e, c in prev.terms.items()})
        prev_at = prev3.subs([m1, m2, l - 1])  # T(j-1, kp)(m1, l-1)
        # prod_{1<=i<=j-1} (l - m1 - i) * ((1+h)^{-l} - 1)/h at order h^kk
        g = _rising(l, kk + 1) * Fraction((-1) ** (kk + 1), factorial(kk + 1))
        summand = falling(l - m1, j - 1, 1) * g * prev_at
        total = total + sum_over(summand, L, m1, m2)
    for i in range(j):
        total = divide_linear(total, M2, m1 + i)
    return IntPolynomial2({(e[0], e[1]): c for e, c in total.terms.items()}, ("m1", "m2"))


def _rising(x: MPoly, j: int) -> MPoly:
    r = MPoly.const(x.nvars, 1)
    for i in range(j):
        r = r * (x + i)
    return r


# ---------------------------------------------------------------------------
# the per-crossing differential operators
#
# Variable layout for a braid with C crossings: crossing c owns
# 4c (a offset / d_a), 4c+1 (eps1), 4c+2 (eps2), 4c+3 (eps12); then kappa at
# 4C and, in operator polynomials only, h at 4C+1.


def _layout(b: BraidWord):
    C = len(b.letters)
    return C, 4 * C + 1


KAPPA_VARIANTS = ("direct", "printed")


def _h_series(nv: int, hvar: int, order: int, negative: bool) -> MPoly:
    """h itself, or h' = 1/(1+h) - 1 for inverted crossings."""
    if not negative:
        return MPoly.var(nv, hvar)
    out = MPoly(nv)
    for j in range(1, order + 1):
        out = out + MPoly.var(nv, hvar) ** j * (-1) ** j
    return out


def crossing_operator(b: BraidWord, c: int, order: int) -> MPoly:
    """Operator polynomial of crossing c in (d_a, d_eps1, d_eps2, d_eps12, h), h-order <= order."""
    C, nv0 = _layout(b)
    nv = nv0 + 1
    hvar = nv0
    w = tuple(1 if i == hvar else 0 for i in range(nv))
    neg = b.letters[c] < 0
    A, E1, E2, E12 = (MPoly.var(nv, 4 * c + i) for i in range(4))
    H = _h_series(nv, hvar, order, neg)
    Hp = [MPoly.const(nv, 1)]
    for _ in range(order):
        Hp.append(Hp[-1].mul(H, w, order))

    # q^(extra exponent): q^{m2 + m1 m2 + n(n+1)/2} (positive), its mirror for negative
    side = E1 if neg else E2
    P = side + E1 * E2 + E12 * (E12 + 1) * Fraction(1, 2)
    qpow = MPoly.const(nv, 1)
    binom = MPoly.const(nv, 1)
    for i in range(1, order + 1):
        binom = binom * (P - (i - 1)) * Fraction(1, i)
        qpow = qpow + binom.mul(Hp[i], w, order)

    # Gaussian binomial correction, arguments (m, n) = (first-factor occupation, n)
    mvar = E2 if neg else E1
    t2 = MPoly.const(nv, 1)
    for j in range(1, order + 1):
        t2 = t2 + gen_T_R2(j).subs([mvar, E12]) * Hp[j]

    # shifted product correction, arguments (m, m + n)
    base = E1 if neg else E2
    t1 = MPoly.const(nv, 1)
    for j in range(1, order + 1):
        for k in range(order - j + 1):
            poly = gen_T_R1(j, k)
            if poly:
                t1 = t1 + (A ** j) * poly.subs([base, base + E12]) * Hp[j + k]
    return qpow.mul(t2, w, order).mul(t1, w, order)


def kappa_operator(nv: int, kvar: int, hvar: int, order: int, variant: str) -> MPoly:
    """Replaces kappa^eta by q^{-eta}, expanded around kappa = 1."""
    if variant not in KAPPA_VARIANTS:
        raise InputError(f"kappa variant must be one of {KAPPA_VARIANTS}")
    K = MPoly.var(nv, kvar)
    if variant == "direct":
        H = _h_series(nv, hvar, order, True)  # kappa - 1 = 1/(1+h) - 1
    else:
        H = MPoly.var(nv, hvar) * -1
    w = tuple(1 if i == hvar else 0 for i in range(nv))
    out = MPoly.const(nv, 1)
    Hp = MPoly.const(nv, 1)
    for j in range(1, order + 1):
        Hp = Hp.mul(H, w, order)
        out = out + Hp * K ** j * Fraction(1, factorial(j))
    return out


def braid_operator(b: BraidWord, order: int, variant: str = "direct") -> MPoly:
    C, nv0 = _layout(b)
    nv = nv0 + 1
    w = tuple(1 if i == nv0 else 0 for i in range(nv))
    op = kappa_operator(nv, 4 * C, nv0, order, variant)
    for c in range(C):
        op = op.mul(crossing_operator(b, c, order), w, order)
    return op


# ---------------------------------------------------------------------------
# determinant expansion


def _exp_linear(lin: MPoly, cap: int) -> MPoly:
    w = (1,) * lin.nvars
    out = MPoly.const(lin.nvars, T.one())
    p = MPoly.const(lin.nvars, T.one())
    for k in range(1, cap + 1):
        p = p.mul(lin, w, cap)
        out = out + p * Fraction(1, factorial(k))
    return out


def _det(rows, w, cap):
    n = len(rows)
    if n == 0:
        return MPoly.const(len(w), T.one())
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        if not rows[0][j]:
            continue
        sub = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j].mul(_det(sub, w, cap), w, cap)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else MPoly(len(w))


def parametrized_burau(b: BraidWord, cap: int | None, point: str = "offset"):
    """N x N parametrized Burau matrix as MPoly entries.

    ``point="offset"``: variables are offsets around the base point and the
    exponentials are truncated at total degree ``cap``.
    ``point="symbolic"``: variables are a (or a'), w1 = e^eps1, w2 = e^eps2,
    w12 = e^eps12 themselves; entries are exact polynomials.
    """
    C, nv = _layout(b)
    N = b.strands
    t = T.monomial(1)
    ti = T.monomial(-1)
    one = MPoly.const(nv, T.one())
    zero = MPoly(nv)
    w = (1,) * nv
    rows = [[one if i == j else zero for j in range(N)] for i in range(N)]
    for c, x in enumerate(b.letters):
        v = [MPoly.var(nv, 4 * c + i, T.one()) for i in range(4)]
        if point == "offset":
            e1 = _exp_linear(v[1], cap)
            e2 = _exp_linear(v[2], cap)
            e1_12 = _exp_linear(v[1] + v[3], cap)
            e2_12 = _exp_linear(v[2] + v[3], cap)
            a_pos = v[0] + (1 - t)
            a_neg = v[0] + (1 - ti)
            mul = lambda p, q: p.mul(q, w, cap)
        else:
            e1, e2 = v[1], v[2]
            e1_12, e2_12 = v[1] * v[3], v[2] * v[3]
            a_pos = a_neg = v[0]
            mul = lambda p, q: p * q
        if x > 0:
            blk = [[mul(e1_12, a_pos), e2 * t], [e1, zero]]
        else:
            blk = [[zero, e2], [e1 * ti, mul(e2_12, a_neg)]]
        j = abs(x) - 1
        r0, r1 = rows[j], rows[j + 1]
        new0 = [mul(blk[0][0], p) + mul(blk[0][1], q) for p, q in zip(r0, r1)]
        new1 = [mul(blk[1][0], p) + mul(blk[1][1], q) for p, q in zip(r0, r1)]
        rows[j], rows[j + 1] = new0, new1
    return rows


def det_polynomial(b: BraidWord, cap: int | None = None, point: str = "offset") -> MPoly:
    """det(1 - kappa * reduced parametrized Burau).

    With ``point="offset"`` the kappa variable is the offset kappa - 1,
    otherwise it is kappa itself.
    """
    C, nv = _layout(b)
    kv = 4 * C
    rows = parametrized_burau(b, cap, point)
    w = (1,) * nv
    red = [r[1:] for r in rows[1:]]
    kappa = MPoly.var(nv, kv, T.one()) + (T.one() if point == "offset" else 0)
    n = len(red)
    mat = []
    for i in range(n):
        row = []
        for j in range(n):
            e = red[i][j].mul(kappa, w, cap) if cap is not None else red[i][j] * kappa
            row.append((MPoly.const(nv, T.one()) if i == j else MPoly(nv)) - e)
        mat.append(row)
    return _det(mat, w, cap if cap is not None else 10 ** 9)


@dataclass(frozen=True)
class MultiTaylor:
    """Taylor coefficients of 1/det around the base point.

    Coefficient of the monomial with exponent tuple ``e`` is
    ``numerators[e] / base ** denominator_power``.
    """

    nvars: int
    cap: int
    base: Laurent
    denominator_power: int
    numerators: dict

    def coeff(self, e) -> tuple:
        return self.numerators.get(tuple(e), T.zero()), self.denominator_power

    def derivative_numerator(self, e) -> Laurent:
        """Numerator of the mixed partial derivative (multiplied by prod e_i!)."""
        num = self.numerators.get(tuple(e))
        if num is None:
            return T.zero()
        return num * prod(factorial(k) for k in e)


def det_series(b: BraidWord, cap: int) -> MultiTaylor:
    """1/det(1 - kappa B~) expanded in all offsets to total degree ``cap``."""
    require_knot(b)
    C, nv = _layout(b)
    w = (1,) * nv
    D = det_polynomial(b, cap)
    D0 = D.constant()
    if not D0:
        raise InputError("base determinant vanishes")
    R = D - D0
    minus_R = -R
    # 1/D = sum_k (-R)^k / D0^(k+1) = G / D0^(cap+1)
    G = MPoly(nv)
    power = MPoly.const(nv, T.one())
    for k in range(cap + 1):
        G = G + power * (D0 ** (cap - k))
        power = power.mul(minus_R, w, cap)
    return MultiTaylor(nv, cap, D0, cap + 1, dict(G.terms))


# ---------------------------------------------------------------------------
# graded traces of the parametrized braid operator


def kappa_series(b: BraidWord, order: int) -> list:
    """Coefficients of kappa^eta, eta <= order, in 1/det(1 - kappa B~) at the base point."""
    require_knot(b)
    m = reduced_burau(b)
    n = m.size
    rows = [[TruncSeries([T.one() if i == j else T.zero(), -m[i, j]], order, LAURENT_T) for j in range(n)] for i in range(n)]
    # Leibniz expansion over TruncSeries entries
    def det(rs):
        if not rs:
            return TruncSeries.one(order, LAURENT_T)
        total = TruncSeries.zero(order, LAURENT_T)
        for j in range(len(rs)):
            sub = [r[:j] + r[j + 1:] for r in rs[1:]]
            term = rs[0][j] * det(sub)
            total = total + term if j % 2 == 0 else total - term
        return total

    return list(det(rows).inverse().coeffs)


def _base_transitions(sign_pos_a: Laurent, sign_neg_a: Laurent):
    t = T.monomial(1)
    ti = T.monomial(-1)

    def targets(m1, m2, sign):
        if sign > 0:
            return [((m2 + n, m1 - n), comb(m1, n) * sign_pos_a ** n * t ** m2) for n in range(m1 + 1)]
        return [((m2 - n, m1 + n), comb(m2, n) * sign_neg_a ** n * ti ** m1) for n in range(m2 + 1)]

    return targets


def parametrized_graded_trace(b: BraidWord, eta: int) -> Laurent:
    """Trace over f_0 (x) (all grade-eta states) of the parametrized operator at the base point."""
    t = T.monomial(1)
    targets = _base_transitions(1 - t, 1 - T.monomial(-1))
    total = T.zero()
    for seed in graded_states(b.strands, eta, first_zero=True):
        v = GradedVector(len(seed), eta, {seed: T.one()})
        for x in b.letters:
            v = act_letter(v, x, targets)
        d = v.data.get(seed)
        if d:
            total = total + d
    return total


# ---------------------------------------------------------------------------
# lines


def line_numerators(b: BraidWord, n: int, variant: str = "direct"):
    """(num, D0, s): the h^n coefficient of V at fixed t is t^(-s) num / D0^(2n+1)."""
    require_knot(b)
    if n < 0 or n > 2:
        raise InputError("the perturbative route supports line indices 0, 1 and 2 only")
    C, nv = _layout(b)
    taylor = det_series(b, 2 * n)
    op = braid_operator(b, n, variant)
    hv = nv
    parts = [T.zero() for _ in range(n + 1)]
    for e, c in op.terms.items():
        j = e[hv]
        parts[j] = parts[j] + taylor.derivative_numerator(e[:hv]) * c
    s = (b.strands - 1 - b.writhe) // 2
    # prefactor t^{-s} (1+h)^{-s}
    num = T.zero()
    for i in range(n + 1):
        cf = Fraction(1)
        for r in range(i):
            cf = cf * (-s - r) / (r + 1)
        num = num + parts[n - i] * norm(cf)
    return num, taylor.base, s


def line_via_perturbation(b: BraidWord, n: int, order_z: int = 6, variant: str = "direct") -> LineResult:
    """V^(n) = P_n / Delta^(2n+1) from the perturbed Burau expansion."""
    delta = alexander_conway(b)
    num, D0, s = line_numerators(b, n, variant)
    # V^(n) = t^-s num / D0^(2n+1) and Delta = t^s D0, so P_n = t^(2ns) num
    P_t = num.shift(2 * n * s)
    try:
        P = tuple(symmetric_to_z2(P_t))
    except ConsistencyError as exc:
        raise ConsistencyError(f"line {n} numerator is not a polynomial in z^2: {exc}") from None
    line = rational_line(P, delta, n, order_z // 2 + 1)
    return LineResult(
        n=n,
        conway=delta.coeffs,
        line=tuple(line),
        P=P,
        residual_zero_order=order_z,
        stable=True,
        line_integral=all(isinstance(c, int) for c in line),
        P_integral=all(isinstance(c, int) for c in P),
        source="perturbative",
        meta={"kappa_variant": variant},
    )
