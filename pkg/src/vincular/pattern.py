"""Generalized (vincular) patterns and occurrence counting.

A pattern such as ``23-1`` is a word on 1..k in which letters not separated
by a dash must sit in adjacent positions of the permutation.  Occurrences are
counted by placing each maximal glued block contiguously, left to right, and
checking order-isomorphism of the chosen letters.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import PatternParseError
from .perm import standardize

TYPE_21 = ("12-3", "13-2", "21-3", "23-1", "31-2", "32-1")


@dataclass(frozen=True)
class VincularPattern:
    letters: tuple[int, ...]
    glued: tuple[bool, ...]

    def __post_init__(self):
        k = len(self.letters)
        if k < 1 or sorted(self.letters) != list(range(1, k + 1)):
            raise ValueError(f"letters {self.letters} are not a permutation of 1..{k}")
        if len(self.glued) != k - 1:
            raise ValueError("glued must have exactly k-1 entries")

    def __str__(self):
        out = [str(self.letters[0])]
        for g, v in zip(self.glued, self.letters[1:]):
            out.append(str(v) if g else f"-{v}")
        return "".join(out)

    def __repr__(self):
        return f"VincularPattern({str(self)!r})"

    def __len__(self):
        return len(self.letters)

    @property
    def is_type_21(self) -> bool:
        return len(self.letters) == 3 and self.glued == (True, False)

    @cached_property
    def blocks(self) -> tuple[tuple[int, int], ...]:
        """Maximal glued runs as (first letter index, length)."""
        runs = []
        start = 0
        for i, g in enumerate(self.glued):
            if not g:
                runs.append((start, i + 1 - start))
                start = i + 1
        runs.append((start, len(self.letters) - start))
        return tuple(runs)


def parse_pattern(text: str) -> VincularPattern:
    if isinstance(text, VincularPattern):
        return text
    if not text:
        raise PatternParseError(text, 0, "empty pattern")
    letters: list[int] = []
    glued: list[bool] = []
    pending_dash = False
    for pos, ch in enumerate(text):
        if ch == "-":
            if not letters:
                raise PatternParseError(text, pos, "leading dash")
            if pending_dash:
                raise PatternParseError(text, pos, "double dash")
            pending_dash = True
        elif ch.isdigit() and ch != "0":
            v = int(ch)
            if v in letters:
                raise PatternParseError(text, pos, f"repeated digit {v}")
            if letters:
                glued.append(not pending_dash)
            letters.append(v)
            pending_dash = False
        else:
            raise PatternParseError(text, pos, f"unexpected character {ch!r}")
    if pending_dash:
        raise PatternParseError(text, len(text) - 1, "trailing dash")
    k = len(letters)
    if sorted(letters) != list(range(1, k + 1)):
        missing = sorted(set(range(1, k + 1)) - set(letters))
        raise PatternParseError(text, len(text), f"missing digit(s) {missing}")
    return VincularPattern(tuple(letters), tuple(glued))


def _as_pattern(tau) -> VincularPattern:
    return tau if isinstance(tau, VincularPattern) else parse_pattern(tau)


def _count_type21(letters, p, anchor_last):
    # letters (a, b, c): the adjacent pair is (p[i], p[i+1]), c comes later
    a, b, c = letters
    ascent = a < b
    lo, hi = min(a, b), max(a, b)
    if c < lo:
        where = 0
    elif c > hi:
        where = 2
    else:
        where = 1
    n = len(p)
    total = 0
    js = (n - 1,) if anchor_last else None
    for i in range(n - 2):
        x, y = p[i], p[i + 1]
        if (x < y) != ascent:
            continue
        small, big = (x, y) if x < y else (y, x)
        for j in js or range(i + 2, n):
            if j < i + 2:
                continue
            z = p[j]
            if where == 0:
                total += z < small
            elif where == 2:
                total += z > big
            else:
                total += small < z < big
    return total


def occurrences(tau, p: Sequence[int], anchor_last: bool = False) -> int:
    """Number of occurrences of ``tau`` in the word ``p``.

    ``p`` need not be standardized; only the relative order of its entries
    matters.  With ``anchor_last`` only occurrences whose final letter is the
    last entry of ``p`` are counted (used for incremental prefix scans).
    """
    tau = _as_pattern(tau)
    n, k = len(p), len(tau.letters)
    if n < k:
        return 0
    if tau.is_type_21:
        return _count_type21(tau.letters, p, anchor_last)
    blocks = tau.blocks
    target = tau.letters
    chosen: list[int] = []

    def place(b: int, start: int) -> int:
        if b == len(blocks):
            if anchor_last and chosen[-1] != p[-1]:
                return 0
            return 1 if standardize(chosen) == target else 0
        _, length = blocks[b]
        remaining = sum(ln for _, ln in blocks[b + 1:])
        count = 0
        for s in range(start, n - length - remaining + 1):
            chosen.extend(p[s:s + length])
            count += place(b + 1, s + length)
            del chosen[-length:]
        return count

    return place(0, 0)


def avoids(tau, p: Sequence[int]) -> bool:
    return occurrences(tau, p) == 0


def complement_pattern(tau) -> VincularPattern:
    tau = _as_pattern(tau)
    k = len(tau.letters)
    return VincularPattern(tuple(k + 1 - v for v in tau.letters), tau.glued)


def k_pattern(kind: str, k: int) -> VincularPattern:
    """The parametric patterns used for length-k families.

    ``nodash``: (k-1)...21k fully glued; ``dash``: (k-1)...21-k;
    ``kkm1``: (k-2)...21k-(k-1); ``increasing``: 12...k glued;
    ``increasing_dash``: 12...(k-1)-k.
    """
    if k < 2 and kind != "increasing":
        raise ValueError("k-patterns need k >= 2")
    if kind == "nodash":
        letters = tuple(range(k - 1, 0, -1)) + (k,)
        glued = (True,) * (k - 1)
    elif kind == "dash":
        letters = tuple(range(k - 1, 0, -1)) + (k,)
        glued = (True,) * (k - 2) + (False,)
    elif kind == "kkm1":
        if k < 3:
            raise ValueError("kkm1 patterns need k >= 3")
        letters = tuple(range(k - 2, 0, -1)) + (k, k - 1)
        glued = (True,) * (k - 2) + (False,)
    elif kind == "increasing":
        letters = tuple(range(1, k + 1))
        glued = (True,) * (k - 1)
    elif kind == "increasing_dash":
        letters = tuple(range(1, k + 1))
        glued = (True,) * (k - 2) + (False,)
    else:
        raise ValueError(f"unknown k-pattern kind {kind!r}")
    return VincularPattern(letters, glued)
