"""Exact scalars, Laurent polynomials and truncated power series.

Nothing in here ever touches floating point.  Scalars are Python ``int`` or
``fractions.Fraction``; a Fraction whose denominator is 1 is collapsed back
to ``int`` so that integrality checks are cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Iterable


def norm(x):
    """Canonical exact scalar: ``int`` when integral, otherwise ``Fraction``."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int):
        return x
    raise TypeError(f"not an exact scalar: {x!r}")


def is_integer(x) -> bool:
    return isinstance(norm(x), int)


def scalar_str(x) -> str:
    x = norm(x)
    return str(x) if isinstance(x, int) else f"{x.numerator}/{x.denominator}"


def parse_scalar(text: str):
    return norm(Fraction(text))


# ---------------------------------------------------------------------------
# Laurent polynomials


class Laurent:
    """Immutable Laurent polynomial in one variable, exponents in Z.

    Stored as a map exponent -> nonzero coefficient.
    """

    __slots__ = ("_c", "_hash")
    var = "t"

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for k, v in items:
                if v:
                    k = int(k)
                    s = c.get(k, 0) + v
                    if s:
                        c[k] = norm(s)
                    else:
                        c.pop(k, None)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c):
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, k: int, coeff=1):
        return cls._raw({int(k): norm(coeff)} if coeff else {})

    @classmethod
    def const(cls, c):
        return cls.monomial(0, c)

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({0: 1})

    # -- inspection ---------------------------------------------------------
    def items(self):
        return sorted(self._c.items())

    def coeff(self, k: int):
        return self._c.get(k, 0)

    def is_zero(self) -> bool:
        return not self._c

    def low(self) -> int:
        return min(self._c)

    def high(self) -> int:
        return max(self._c)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def has_integer_coeffs(self) -> bool:
        return all(isinstance(v, int) for v in self._c.values())

    def __len__(self):
        return len(self._c)

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Laurent):
            if type(other) is not type(self):
                raise TypeError(f"cannot mix {type(self).__name__} and {type(other).__name__}")
            return other
        if isinstance(other, (int, Fraction)):
            return type(self).const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            s = c.get(k, 0) + v
            if s:
                c[k] = norm(s)
            else:
                c.pop(k, None)
        return type(self)._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return type(self).zero()
            return type(self)._raw({k: norm(v * other) for k, v in self._c.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                k = k1 + k2
                c[k] = c.get(k, 0) + v1 * v2
        return type(self)._raw({k: norm(v) for k, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if not self.is_monomial():
                raise ArithmeticError("negative power of a non-monomial Laurent polynomial")
            (k, v), = self._c.items()
            return type(self).monomial(k * e, Fraction(1) / Fraction(v) ** (-e))
        result = type(self).one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, k: int):
        """Multiply by var**k."""
        return type(self)._raw({e + k: v for e, v in self._c.items()})

    def inverse_var(self):
        """Substitute var -> var**-1."""
        return type(self)._raw({-k: v for k, v in self._c.items()})

    def exact_div(self, other: "Laurent"):
        """Exact quotient in the Laurent ring; raises if the division leaves a remainder."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("Laurent division by zero")
        if self.is_zero():
            return type(self).zero()
        # long division from the top degree of normalised polynomials
        rem = dict(self._c)
        dlo, dhi = other.low(), other.high()
        lead = Fraction(other._c[dhi])
        q = {}
        lo = min(rem)
        while rem:
            top = max(rem)
            if top - dhi < lo - dlo:
                raise ArithmeticError("inexact Laurent division")
            f = norm(Fraction(rem[top]) / lead)
            k = top - dhi
            q[k] = f
            for e, v in other._c.items():
                s = rem.get(e + k, 0) - f * v
                if s:
                    rem[e + k] = norm(s)
                else:
                    rem.pop(e + k, None)
        return type(self)._raw(q)

    def __call__(self, x):
        """Evaluate at a nonzero exact scalar."""
        x = Fraction(x)
        return norm(sum((v * x**k for k, v in self._c.items()), Fraction(0)))

    def is_symmetric(self) -> bool:
        return all(self._c.get(-k, 0) == v for k, v in self._c.items())

    # -- protocol -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = type(self).const(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    def _exp_str(self, k):
        return str(k)

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for k, v in sorted(self._c.items(), reverse=True):
            c = scalar_str(v)
            if k == 0:
                parts.append(c)
            else:
                e = self._exp_str(k)
                mono = self.var if e == "1" else f"{self.var}^{e}"
                parts.append(mono if v == 1 else ("-" + mono if v == -1 else f"{c}*{mono}"))
        return " + ".join(parts).replace("+ -", "- ")


class QuarterLaurent(Laurent):
    """Laurent polynomial in q**(1/4): exponent k stands for q^(k/4)."""

    __slots__ = ()
    var = "q"

    @classmethod
    def qpow(cls, exponent, coeff=1):
        """q**exponent for a rational exponent with denominator dividing 4."""
        e = Fraction(exponent) * 4
        if e.denominator != 1:
            raise ValueError(f"q-exponent {exponent} is not a multiple of 1/4")
        return cls.monomial(e.numerator, coeff)

    def _exp_str(self, k):
        return scalar_str(Fraction(k, 4))

    def at_one(self):
        """Value at q = 1."""
        return norm(sum(self._c.values(), 0))

    def is_q_laurent(self) -> bool:
        """True iff only integral powers of q with integer coefficients occur."""
        return all(k % 4 == 0 for k in self._c) and self.has_integer_coeffs()

    def to_q(self) -> Laurent:
        if any(k % 4 for k in self._c):
            raise ArithmeticError("fractional q-exponent present")
        return Laurent._raw({k // 4: v for k, v in self._c.items()})

    def q_items(self):
        """(exponent as Fraction, coefficient) pairs, ascending."""
        return [(Fraction(k, 4), v) for k, v in self.items()]

    def in_h(self, order: int) -> "TruncSeries":
        """Substitute q = 1 + h and truncate at h**order (integral exponents only)."""
        result = [0] * (order + 1)
        for k, v in self.to_q().items():
            for i, b in enumerate(binomial_series(k, order)):
                result[i] += v * b
        return TruncSeries(result, order)


def qd(n) -> QuarterLaurent:
    """q^(n/2) - q^(-n/2)."""
    return QuarterLaurent({2 * n: 1, -2 * n: -1})


@lru_cache(maxsize=None)
def qint(n: int) -> QuarterLaurent:
    """Balanced quantum integer [n] = (q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2)).

    Negative arguments are allowed and give [-n] = -[n].
    """
    if n < 0:
        return -qint(-n)
    # [n] = q^{(n-1)/2} + q^{(n-3)/2} + ... + q^{-(n-1)/2}
    return QuarterLaurent({2 * (n - 1 - 2 * i): 1 for i in range(n)})


@lru_cache(maxsize=None)
def qfact(n: int) -> QuarterLaurent:
    if n < 0:
        raise ValueError("qfact of a negative integer")
    r = QuarterLaurent.one()
    for l in range(1, n + 1):
        r = r * qint(l)
    return r


def binomial_series(k: int, order: int) -> list:
    """Coefficients of (1+h)**k up to h**order, for any integer k."""
    out = []
    c = Fraction(1)
    for i in range(order + 1):
        out.append(norm(c))
        c = c * (k - i) / (i + 1)
    return out


# ---------------------------------------------------------------------------
# coefficient rings


@dataclass(frozen=True)
class Ring:
    """Minimal ring contract used by TruncSeries.

    ``zero``/``one`` are factories so that rings whose elements carry extra
    data (a truncation order, say) can hand out fresh values.
    """

    name: str
    zero: Callable[[], Any]
    one: Callable[[], Any]
    div: Callable[[Any, Any], Any]

    def is_zero(self, x) -> bool:
        return not x


QQ = Ring("QQ", lambda: 0, lambda: 1, lambda a, b: norm(Fraction(a) / Fraction(b)))
LAURENT_T = Ring("Q[t,1/t]", Laurent.zero, Laurent.one, lambda a, b: a.exact_div(b))


@lru_cache(maxsize=None)
def series_ring(order: int) -> Ring:
    """Ring of TruncSeries in a second variable, truncated at ``order``."""
    return Ring(
        f"QQ[[z]]/z^{order + 1}",
        lambda: TruncSeries.zero(order),
        lambda: TruncSeries.one(order),
        lambda a, b: a * b.inverse(),
    )


# ---------------------------------------------------------------------------
# truncated power series


class TruncSeries:
    """c_0 + c_1 x + ... + c_M x^M + O(x^{M+1}) over a pluggable ring.

    Binary operations take the minimum of the operand orders.
    """

    __slots__ = ("coeffs", "order", "ring")

    def __init__(self, coeffs: Iterable, order: int, ring: Ring = QQ):
        if order < 0:
            raise ValueError("negative truncation order")
        cs = list(coeffs)[: order + 1]
        while len(cs) < order + 1:
            cs.append(ring.zero())
        if ring is QQ:
            cs = [norm(c) for c in cs]
        self.coeffs = tuple(cs)
        self.order = order
        self.ring = ring

    @classmethod
    def zero(cls, order, ring=QQ):
        return cls([], order, ring)

    @classmethod
    def one(cls, order, ring=QQ):
        return cls([ring.one()], order, ring)

    @classmethod
    def var(cls, order, ring=QQ):
        return cls([ring.zero(), ring.one()], order, ring)

    def __getitem__(self, i):
        return self.coeffs[i] if i <= self.order else None

    def __bool__(self):
        return any(bool(c) for c in self.coeffs)

    def truncate(self, order):
        return TruncSeries(self.coeffs, min(order, self.order), self.ring)

    def _lift(self, other):
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries([other], self.order, self.ring)

    def __add__(self, other):
        other = self._lift(other)
        m = min(self.order, other.order)
        return TruncSeries([self.coeffs[i] + other.coeffs[i] for i in range(m + 1)], m, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order, self.ring)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries([c * other for c in self.coeffs], self.order, self.ring)
        m = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        zero = self.ring.zero
        for k in range(m + 1):
            s = zero()
            for i in range(k + 1):
                if not self.ring.is_zero(a[i]) and not self.ring.is_zero(b[k - i]):
                    s = s + a[i] * b[k - i]
            out.append(s)
        return TruncSeries(out, m, self.ring)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        r = TruncSeries.one(self.order, self.ring)
        for _ in range(e):
            r = r * self
        return r

    def inverse(self):
        c0 = self.coeffs[0]
        if self.ring.is_zero(c0):
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = self.ring.div(self.ring.one(), c0)
        out = [inv0]
        for k in range(1, self.order + 1):
            s = self.ring.zero()
            for i in range(1, k + 1):
                s = s + self.coeffs[i] * out[k - i]
            out.append(-(s * inv0))
        return TruncSeries(out, self.order, self.ring)

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return self * other.inverse()
        return TruncSeries([self.ring.div(c, other) for c in self.coeffs], self.order, self.ring)

    def compose(self, g: "TruncSeries") -> "TruncSeries":
        return series_compose(self, g)

    def derivative(self):
        return TruncSeries([self.coeffs[i] * i for i in range(1, self.order + 1)], max(self.order - 1, 0), self.ring)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        m = min(self.order, other.order)
        return self.order == other.order and all(self.coeffs[i] == other.coeffs[i] for i in range(m + 1))

    def agrees_with(self, other: "TruncSeries") -> bool:
        """Equality up to the smaller of the two orders."""
        m = min(self.order, other.order)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(m + 1))

    def __repr__(self):
        return f"TruncSeries({list(self.coeffs)!r}, order={self.order})"


def series_compose(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """f(g(x)) to order min(f.order, g.order); g must have zero constant term."""
    if not g.ring.is_zero(g.coeffs[0]):
        raise ValueError("inner series of a composition must have zero constant term")
    m = min(f.order, g.order)
    g = g.truncate(m)
    acc = TruncSeries([f.coeffs[m]], m, g.ring)
    for i in range(m - 1, -1, -1):
        acc = acc * g + f.coeffs[i]
    return acc


def series_revert(g: TruncSeries) -> TruncSeries:
    """Compositional inverse of g = x + O(x^2)."""
    if g.order < 1 or g.coeffs[0] != 0 or g.coeffs[1] != 1:
        raise ValueError("reversion needs g = x + O(x^2)")
    x = TruncSeries.var(g.order)
    r = x
    # each pass fixes one more coefficient
    for _ in range(g.order):
        r = r - (series_compose(g, r) - x)
    return r


@lru_cache(maxsize=None)
def exp_series(order: int) -> TruncSeries:
    out = [Fraction(1)]
    for k in range(1, order + 1):
        out.append(out[-1] / k)
    return TruncSeries(out, order)


@lru_cache(maxsize=None)
def log1p_series(order: int) -> TruncSeries:
    """log(1+x)."""
    return TruncSeries([0] + [Fraction((-1) ** (k + 1), k) for k in range(1, order + 1)], order)


@lru_cache(maxsize=None)
def asinh_series(order: int) -> TruncSeries:
    """arcsinh(x), integrated term by term from (1+x^2)^(-1/2)."""
    out = [Fraction(0)] * (order + 1)
    c = Fraction(1)  # binom(-1/2, k)
    for k in range(0, (order - 1) // 2 + 1):
        out[2 * k + 1] = c / (2 * k + 1)
        c = c * (Fraction(-1, 2) - k) / (k + 1)
    return TruncSeries(out, order)


# ---------------------------------------------------------------------------
# bivariate series


class BivarSeries:
    """Truncated series in h whose coefficients are truncated series in z.

    ``coeff(i, j)`` is the coefficient of h^i z^j.
    """

    __slots__ = ("series", "order_h", "order_z")

    def __init__(self, series: TruncSeries, order_z: int):
        self.series = series
        self.order_h = series.order
        self.order_z = order_z

    @classmethod
    def from_grid(cls, grid, order_h, order_z):
        ring = series_ring(order_z)
        rows = [TruncSeries(row, order_z) for row in grid]
        return cls(TruncSeries(rows, order_h, ring), order_z)

    @classmethod
    def from_h(cls, s: TruncSeries, order_z):
        """Embed a series in h with scalar coefficients."""
        return cls.from_grid([[c] for c in s.coeffs], s.order, order_z)

    def coeff(self, i: int, j: int):
        return self.series.coeffs[i].coeffs[j]

    def line(self, i: int) -> TruncSeries:
        """The z-series multiplying h^i."""
        return self.series.coeffs[i]

    def __add__(self, other):
        return BivarSeries(self.series + other.series, min(self.order_z, other.order_z))

    def __mul__(self, other):
        if isinstance(other, BivarSeries):
            return BivarSeries(self.series * other.series, min(self.order_z, other.order_z))
        return BivarSeries(self.series * other, self.order_z)

    def __pow__(self, e):
        r = BivarSeries.from_grid([[1]], self.order_h, self.order_z)
        for _ in range(e):
            r = r * self
        return r

    def is_even_in_z(self) -> bool:
        return all(
            self.coeff(i, j) == 0
            for i in range(self.order_h + 1)
            for j in range(1, self.order_z + 1, 2)
        )


def alpha_h_in_z(order_h: int, order_z: int) -> BivarSeries:
    """alpha*h as a series in (h, z), where z = q^(alpha/2) - q^(-alpha/2), q = 1 + h.

    alpha*h = 2 arcsinh(z/2) * h / log(1+h).
    """
    if order_h < 0 or order_z < 1:
        raise ValueError("orders must be h >= 0, z >= 1")
    a = asinh_series(order_z)
    two_asinh_half = [norm(2 * c / Fraction(2) ** j) for j, c in enumerate(a.coeffs)]
    log_ratio = TruncSeries(log1p_series(order_h + 1).coeffs[1:], order_h)  # log(1+h)/h
    g = log_ratio.inverse()
    grid = [[norm(gi * zj) for zj in two_asinh_half] for gi in g.coeffs]
    return BivarSeries.from_grid(grid, order_h, order_z)
