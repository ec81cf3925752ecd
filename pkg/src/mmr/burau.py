"""Burau matrices, the reduced Burau determinant and the Alexander-Conway polynomial.

Generators act on the column vector of coefficients of z_1..z_N: column i of
a block is the image of z_i.  A word w_1 w_2 ... w_k is represented by the
operator product A(w_k) ... A(w_1), so the first letter acts first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, parity_check, require_knot
from .errors import ConsistencyError
from .exactalg import Laurent, norm

T = Laurent


class LaurentMatrix:
    """Square matrix over Q[t, 1/t]."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = [[x if isinstance(x, Laurent) else T.const(x) for x in r] for r in rows]
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        self.rows = rows

    @property
    def size(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        return cls([[T.one() if i == j else T.zero() for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        n = self.size
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                s = T.zero()
                for a, b in zip(r, c):
                    if a and b:
                        s = s + a * b
                row.append(s)
            out.append(row)
        return LaurentMatrix(out) if n else LaurentMatrix([])

    def __sub__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        return LaurentMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __eq__(self, other):
        return isinstance(other, LaurentMatrix) and self.rows == other.rows

    def minor(self, drop: int) -> "LaurentMatrix":
        """Delete row ``drop`` and column ``drop``."""
        return LaurentMatrix(
            [[x for j, x in enumerate(r) if j != drop] for i, r in enumerate(self.rows) if i != drop]
        )

    def det(self) -> Laurent:
        """Fraction-free (Bareiss) elimination; every division is exact."""
        n = self.size
        if n == 0:
            return T.one()
        a = [list(r) for r in self.rows]
        sign = 1
        prev = T.one()
        for k in range(n - 1):
            if not a[k][k]:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return T.zero()
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
            prev = a[k][k]
        d = a[n - 1][n - 1]
        return d if sign > 0 else -d

    def __repr__(self):
        return "LaurentMatrix(" + repr([[repr(x) for x in r] for r in self.rows]) + ")"


def burau_block(sign: int) -> LaurentMatrix:
    t = T.monomial(1)
    if sign > 0:
        return LaurentMatrix([[1 - t, t], [1, 0]])
    ti = T.monomial(-1)
    return LaurentMatrix([[0, 1], [ti, 1 - ti]])


def embed_block(block: LaurentMatrix, j: int, n: int) -> LaurentMatrix:
    """Place a 2x2 block on coordinates (j, j+1) of the n x n identity (0-based j)."""
    rows = LaurentMatrix.identity(n).rows
    for a in range(2):
        for c in range(2):
            rows[j + a][j + c] = block[a, c]
    return LaurentMatrix(rows)


def burau_matrix(b: BraidWord) -> LaurentMatrix:
    m = LaurentMatrix.identity(b.strands)
    for x in b.letters:
        m = embed_block(burau_block(1 if x > 0 else -1), abs(x) - 1, b.strands) * m
    return m


def reduced_burau(b: BraidWord) -> LaurentMatrix:
    """Burau matrix projected along the first basis vector."""
    return burau_matrix(b).minor(0)


# ---------------------------------------------------------------------------
# symmetric Laurent polynomials <-> polynomials in z^2


def poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_trim(a: list) -> list:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def symmetric_to_z2(f: Laurent) -> list:
    """Write a t <-> 1/t symmetric Laurent polynomial as a polynomial in z^2 = t + 1/t - 2.

    Uses p_k = t^k + t^-k with p_{k+1} = zeta p_k - p_{k-1}, zeta = z^2 + 2.
    Returns coefficients in ascending powers of z^2.
    """
    if not f.is_symmetric():
        raise ConsistencyError(f"not symmetric under t -> 1/t: {f!r}")
    zeta = [2, 1]
    top = max((abs(k) for k, _ in f.items()), default=0)
    p = [[2], zeta]
    while len(p) <= top:
        nxt = poly_mul(zeta, p[-1])
        for i, c in enumerate(p[-2]):
            nxt[i] -= c
        p.append(nxt)
    out = [0] * (top + 1)
    out[0] = f.coeff(0)
    for k in range(1, top + 1):
        c = f.coeff(k)
        if c:
            for i, x in enumerate(p[k]):
                out[i] += c * x
    return [norm(x) for x in poly_trim(out)] or [0]


def z2_to_laurent(coeffs) -> Laurent:
    """Inverse of symmetric_to_z2."""
    z2 = T({1: 1, 0: -2, -1: 1})
    r = T.zero()
    pw = T.one()
    for c in coeffs:
        if c:
            r = r + pw * T.const(c)
        pw = pw * z2
    return r


@dataclass(frozen=True)
class ConwayPolynomial:
    """Polynomial in z^2; ``coeffs[k]`` multiplies z^(2k)."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(norm(c) for c in poly_trim(self.coeffs)) or (0,))

    def in_t(self) -> Laurent:
        return z2_to_laurent(self.coeffs)

    def z_series(self, order: int) -> list:
        """Coefficients of z^0..z^order."""
        out = [0] * (order + 1)
        for k, c in enumerate(self.coeffs):
            if 2 * k <= order:
                out[2 * k] = c
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                mono = f"z^{2 * k}"
                parts.append(str(c) if k == 0 else mono if c == 1 else "-" + mono if c == -1 else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ") or "0"


def alexander_t(b: BraidWord) -> Laurent:
    """t^{-(e-N+1)/2} det(1 - reduced Burau), a symmetric Laurent polynomial for knots."""
    if not parity_check(b):
        raise ConsistencyError("N - 1 - e is odd")
    m = reduced_burau(b)
    d = (LaurentMatrix.identity(m.size) - m).det()
    return d.shift(-(b.writhe - b.strands + 1) // 2)


def alexander_conway(b: BraidWord) -> ConwayPolynomial:
    require_knot(b)
    coeffs = symmetric_to_z2(alexander_t(b))
    if coeffs[0] != 1:
        raise ConsistencyError(f"Conway polynomial has constant term {coeffs[0]}, expected 1")
    if any(not isinstance(c, int) for c in coeffs):
        raise ConsistencyError("non-integer Conway coefficient")
    return ConwayPolynomial(tuple(coeffs))


def torus2_oracle(k: int) -> ConwayPolynomial:
    """Conway polynomial of the closure of sigma_1^(2k+1), by a separate route.

    The 2x2 block power is done on plain integer coefficient dicts and the
    z^2 rewrite peels off powers of (t - 2 + 1/t) from the top degree down.
    """
    if k < 0:
        raise ValueError("k must be >= 0")

    def pmul(a, b):
        out = {}
        for i, x in a.items():
            for j, y in b.items():
                out[i + j] = out.get(i + j, 0) + x * y
        return {e: c for e, c in out.items() if c}

    def padd(a, b):
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, 0) + c
        return {e: c for e, c in out.items() if c}

    block = [[{0: 1, 1: -1}, {1: 1}], [{0: 1}, {}]]
    m = [[{0: 1}, {}], [{}, {0: 1}]]
    for _ in range(2 * k + 1):
        m = [[padd(pmul(block[i][0], m[0][j]), pmul(block[i][1], m[1][j])) for j in range(2)] for i in range(2)]
    entry = m[1][1]
    delta = padd({0: 1}, {e: -c for e, c in entry.items()})
    delta = {e - k: c for e, c in delta.items()}
    out = {}
    while delta:
        d = max(delta)
        c = delta[d]
        out[d] = c
        power = {0: 1}
        for _ in range(d):
            power = pmul(power, {1: 1, 0: -2, -1: 1})
        delta = padd(delta, {e: -c * v for e, v in power.items()})
    return ConwayPolynomial(tuple(out.get(i, 0) for i in range(max(out) + 1)))
