"""Braid words: parsing, closure permutation, writhe and the knot check."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import BraidParseError, NotAKnotError


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group B_N.

    ``letters`` holds signed generator indices: ``i`` is sigma_i and ``-i``
    its inverse, 1 <= i <= N-1.  Letters act left to right.
    """

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise BraidParseError("strand count must be at least 1")
        for pos, x in enumerate(self.letters):
            if x == 0 or abs(x) > self.strands - 1:
                raise BraidParseError(f"generator {x} invalid on {self.strands} strands", pos)

    @property
    def writhe(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in self.letters))

    def stabilized(self, sign: int = 1) -> "BraidWord":
        """Markov stabilisation: add a strand and the letter sigma_N^(+-1)."""
        return BraidWord(self.strands + 1, self.letters + (sign * self.strands,))

    def text(self) -> str:
        return ",".join(str(x) for x in self.letters)

    def __len__(self):
        return len(self.letters)


_TOKEN = re.compile(r"[^\s,]+")


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse ``"1,-2,1,-2"`` (commas and/or whitespace) into a BraidWord.

    Without ``strands`` the strand count is 1 + max |letter|.
    """
    letters = []
    for pos, m in enumerate(_TOKEN.finditer(text or "")):
        tok = m.group()
        try:
            x = int(tok)
        except ValueError:
            raise BraidParseError(f"not an integer: {tok!r}", pos) from None
        if x == 0:
            raise BraidParseError("generator 0 does not exist", pos)
        letters.append(x)
    if strands is None:
        if not letters:
            raise BraidParseError("empty braid word needs an explicit strand count")
        strands = 1 + max(abs(x) for x in letters)
    return BraidWord(strands, tuple(letters))


@dataclass(frozen=True)
class ClosureInfo:
    permutation: tuple[int, ...]  # 1-based: strand entering at i leaves at permutation[i-1]
    cycles: tuple[tuple[int, ...], ...]
    is_knot: bool
    exponent_sum: int


def closure_info(b: BraidWord) -> ClosureInfo:
    pos = list(range(1, b.strands + 1))  # pos[s-1] = current position of strand s
    where = {p: p for p in pos}  # position -> strand
    for x in b.letters:
        i = abs(x)
        s1, s2 = where[i], where[i + 1]
        where[i], where[i + 1] = s2, s1
        pos[s1 - 1], pos[s2 - 1] = i + 1, i
    perm = tuple(pos)
    seen = set()
    cycles = []
    for start in range(1, b.strands + 1):
        if start in seen:
            continue
        cyc = []
        j = start
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = perm[j - 1]
        cycles.append(tuple(cyc))
    return ClosureInfo(perm, tuple(cycles), len(cycles) == 1, b.writhe)


def parity_check(b: BraidWord) -> bool:
    """N - 1 - e(B_N) is even; always true when the closure is a knot."""
    return (b.strands - 1 - b.writhe) % 2 == 0


def require_knot(b: BraidWord) -> ClosureInfo:
    info = closure_info(b)
    if not info.is_knot:
        raise NotAKnotError(info.cycles)
    return info
