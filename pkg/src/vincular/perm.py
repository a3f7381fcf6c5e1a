"""Permutations in one-line notation.

A permutation of size n is a plain tuple holding each of 1..n exactly once.
Positions and values are both one-based in the mathematical sense; the tuple
itself is indexed from 0 as usual.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .config import HARD_CAP, check_cap
from .errors import PermutationError

Permutation = tuple  # tuple[int, ...], kept as a plain alias for speed


def is_permutation(values: Sequence[int]) -> bool:
    n = len(values)
    return sorted(values) == list(range(1, n + 1))


def make_permutation(values: Iterable[int]) -> Permutation:
    """Validate ``values`` and return them as a permutation tuple."""
    p = tuple(int(v) for v in values)
    if not is_permutation(p):
        raise PermutationError(f"{p} is not a permutation of 1..{len(p)}")
    return p


def all_permutations(n: int, first: int | None = None, cap: int = HARD_CAP) -> Iterator[Permutation]:
    """Yield S_n in lexicographic order.

    With ``first`` given, only the permutations starting with that value are
    produced; concatenating the sub-ranges for first = 1..n reproduces the full
    sequence, which is what parallel consumers rely on.
    """
    check_cap(n, cap)
    if first is None:
        yield from permutations(range(1, n + 1))
        return
    if not 1 <= first <= n:
        raise ValueError(f"first element {first} out of range for n={n}")
    rest = [v for v in range(1, n + 1) if v != first]
    for tail in permutations(rest):
        yield (first,) + tail


def reverse(p: Sequence[int]) -> Permutation:
    return tuple(reversed(p))


def complement(p: Sequence[int]) -> Permutation:
    n = len(p)
    return tuple(n + 1 - v for v in p)


def adjacent_ascents(p: Sequence[int]) -> int:
    return sum(1 for a, b in zip(p, p[1:]) if a < b)


def adjacent_descents(p: Sequence[int]) -> int:
    return sum(1 for a, b in zip(p, p[1:]) if a > b)


def standardize(word: Sequence[int]) -> Permutation:
    """Replace distinct values by their ranks 1..len(word)."""
    ranks = {v: i for i, v in enumerate(sorted(word), 1)}
    return tuple(ranks[v] for v in word)


def format_permutation(p: Sequence[int]) -> str:
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def parse_permutation(text: str) -> Permutation:
    """Parse ``"2134"`` or ``"10,2,1,..."`` (commas required for n >= 10)."""
    text = text.strip()
    if text in ("", "()"):
        return ()
    if "," in text:
        parts = [s.strip() for s in text.split(",")]
    else:
        parts = list(text)
    if not all(s.isdigit() for s in parts):
        raise PermutationError(f"cannot parse permutation {text!r}")
    return make_permutation(int(s) for s in parts)
