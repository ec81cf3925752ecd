"""Matrix elements of the alpha-coloured R-check matrix and its inverse.

Basis vectors f_m of the module (m >= 0; m >= alpha are the Verma extension)
are labelled by occupation numbers; a basis state of the N-fold tensor power
is a tuple (m_1, ..., m_N) with grade sum(m_j).

The positive generator maps f_m1 (x) f_m2 to a combination of
f_{m2+n} (x) f_{m1-n}, n = 0..m1, with coefficient

    q^{(alpha-1)^2/4} q^{-(alpha-1) m2} q^{m1 m2 + n(n+1)/2}
        * qbinom(m1, n) * prod_{l=m2+1}^{m2+n} (q^{-l} - q^{-alpha})

where qbinom is the ordinary (unbalanced) Gaussian binomial in q.  This is
P R in the phase-rotated basis f_m1 (x) f_m2 -> q^{(alpha-1) m2/2} f_m1 (x) f_m2.
The inverse is P Rcheck(q^-1) P.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable

from .exactalg import QuarterLaurent

Q = QuarterLaurent


@lru_cache(maxsize=None)
def gaussian_binomial(m: int, n: int) -> QuarterLaurent:
    """prod_{l=m-n+1}^{m} (q^l - 1) / prod_{l=1}^{n} (q^l - 1), a polynomial in q."""
    if n < 0 or n > m:
        return Q.zero()
    if n == 0 or n == m:
        return Q.one()
    return gaussian_binomial(m - 1, n - 1) + Q.qpow(n) * gaussian_binomial(m - 1, n)


@lru_cache(maxsize=None)
def _shifted_product(m2: int, n: int, alpha: int) -> QuarterLaurent:
    r = Q.one()
    for l in range(m2 + 1, m2 + n + 1):
        r = r * (Q.qpow(-l) - Q.qpow(-alpha))
    return r


@lru_cache(maxsize=None)
def rhat_pair(m1: int, m2: int, alpha: int) -> tuple[tuple[int, QuarterLaurent], ...]:
    """Nonzero (n, coefficient) for Rcheck(f_m1 (x) f_m2) -> f_{m2+n} (x) f_{m1-n}."""
    if m1 < 0 or m2 < 0 or alpha < 1:
        raise ValueError("need m1, m2 >= 0 and alpha >= 1")
    out = []
    for n in range(m1 + 1):
        prod = _shifted_product(m2, n, alpha)
        if not prod:
            continue
        e4 = (alpha - 1) ** 2 - 4 * (alpha - 1) * m2 + 4 * m1 * m2 + 2 * n * (n + 1)
        c = Q.monomial(e4) * gaussian_binomial(m1, n) * prod
        if c:
            out.append((n, c))
    return tuple(out)


@lru_cache(maxsize=None)
def rhat_inv_pair(m1: int, m2: int, alpha: int) -> tuple[tuple[int, QuarterLaurent], ...]:
    """Nonzero (n, coefficient) for Rcheck^-1(f_m1 (x) f_m2) -> f_{m2-n} (x) f_{m1+n}."""
    return tuple((n, c.inverse_var()) for n, c in rhat_pair(m2, m1, alpha))


def rhat_targets(m1: int, m2: int, alpha: int, sign: int):
    """(target pair, coefficient) list for a generator of the given sign."""
    if sign > 0:
        return [((m2 + n, m1 - n), c) for n, c in rhat_pair(m1, m2, alpha)]
    return [((m2 - n, m1 + n), c) for n, c in rhat_inv_pair(m1, m2, alpha)]


# ---------------------------------------------------------------------------
# graded vectors


class GradedVector:
    """Sparse vector over basis states of one fixed grade.

    ``data`` maps state tuples to ring elements (QuarterLaurent by default,
    but any ring works as long as the transition coefficients match).
    """

    __slots__ = ("strands", "grade", "data")

    def __init__(self, strands: int, grade: int, data: dict | None = None):
        self.strands = strands
        self.grade = grade
        self.data = {}
        for s, c in (data or {}).items():
            if len(s) != strands or sum(s) != grade or min(s, default=0) < 0:
                raise ValueError(f"state {s} does not belong to grade {grade} on {strands} strands")
            if c:
                self.data[tuple(s)] = c

    @classmethod
    def basis(cls, state, coeff=None):
        state = tuple(state)
        return cls(len(state), sum(state), {state: Q.one() if coeff is None else coeff})

    def __getitem__(self, state):
        return self.data.get(tuple(state), 0)

    def __eq__(self, other):
        if not isinstance(other, GradedVector):
            return NotImplemented
        return (self.strands, self.grade, self.data) == (other.strands, other.grade, other.data)

    def __add__(self, other):
        d = dict(self.data)
        for s, c in other.data.items():
            v = d[s] + c if s in d else c
            if v:
                d[s] = v
            else:
                d.pop(s, None)
        return GradedVector(self.strands, self.grade, d)

    def __len__(self):
        return len(self.data)

    def __repr__(self):
        return f"GradedVector(N={self.strands}, grade={self.grade}, {len(self.data)} states)"


TransitionFn = Callable[[int, int, int], Iterable]


def act_letter(v: GradedVector, letter: int, targets: TransitionFn) -> GradedVector:
    """Apply a generator through an arbitrary two-site transition rule.

    ``targets(m1, m2, sign)`` yields ((m1', m2'), coefficient) pairs.
    """
    j = abs(letter) - 1
    if not 0 <= j < v.strands - 1:
        raise ValueError(f"letter {letter} out of range for {v.strands} strands")
    sign = 1 if letter > 0 else -1
    out: dict = {}
    for s, c in v.data.items():
        for (t1, t2), r in targets(s[j], s[j + 1], sign):
            if t1 + t2 != s[j] + s[j + 1]:
                raise AssertionError("grade not conserved")
            ns = s[:j] + (t1, t2) + s[j + 2:]
            val = out[ns] + c * r if ns in out else c * r
            if val:
                out[ns] = val
            else:
                del out[ns]
    res = GradedVector.__new__(GradedVector)
    res.strands, res.grade, res.data = v.strands, v.grade, out
    return res


def apply_letter(v: GradedVector, letter: int, alpha: int) -> GradedVector:
    return act_letter(v, letter, lambda m1, m2, sign: rhat_targets(m1, m2, alpha, sign))


def apply_word(v: GradedVector, letters, alpha: int) -> GradedVector:
    for x in letters:
        v = apply_letter(v, x, alpha)
    return v


def graded_states(strands: int, grade: int, cap: int | None = None, first_zero: bool = False):
    """All states of a given grade, optionally with entries <= cap and m_1 = 0."""
    def rec(k, remaining):
        if k == 1:
            if cap is None or remaining <= cap:
                yield (remaining,)
            return
        top = remaining if cap is None else min(cap, remaining)
        for m in range(top + 1):
            for rest in rec(k - 1, remaining - m):
                yield (m,) + rest

    if first_zero:
        if strands == 1:
            if grade == 0:
                yield (0,)
            return
        for rest in rec(strands - 1, grade):
            yield (0,) + rest
    else:
        yield from rec(strands, grade)
