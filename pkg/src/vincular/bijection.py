"""The involution carrying 12-3 avoiders onto 21-3 avoiders.

Split p at its maximum as (p', m, p''); the image is (reverse(p'), m, phi(p'')).
Because p avoids 12-3, p' is decreasing, so reversing it makes it increasing;
applying the map again undoes the reversal, hence phi is its own inverse.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .config import check_cap
from .errors import PhiDomainError
from .oracle import list_class, query
from .pattern import avoids, k_pattern, occurrences, parse_pattern
from .perm import Permutation

_P123 = parse_pattern("12-3")
_P213 = parse_pattern("21-3")
_P132 = parse_pattern("13-2")


def _phi_word(word: Sequence[int]) -> list[int]:
    out: list[int] = []
    rest = list(word)
    # unroll the tail recursion: each pass peels off the segment up to the maximum
    while rest:
        m = rest.index(max(rest))
        out.extend(reversed(rest[:m]))
        out.append(rest[m])
        rest = rest[m + 1:]
    return out


def phi(p: Sequence[int]) -> Permutation:
    if not avoids(_P123, p):
        raise PhiDomainError(f"{tuple(p)} contains 12-3; phi is defined on 12-3 avoiders only")
    return tuple(_phi_word(p))


def phi_inverse(q: Sequence[int]) -> Permutation:
    """Same rule read on 21-3 avoiders, where it undoes ``phi``."""
    if not avoids(_P213, q):
        raise PhiDomainError(f"{tuple(q)} contains 21-3; the inverse is defined on 21-3 avoiders only")
    return tuple(_phi_word(q))


@dataclass
class PhiReport:
    n: int
    checked: int = 0
    violations: list = field(default_factory=list)
    # (k, r) -> [# p with r occurrences of (k-1)...21k, # phi(p) with r occurrences of 12...k]
    transport: dict = field(default_factory=dict)

    @property
    def clean(self) -> bool:
        return not self.violations

    def kinds(self) -> dict[str, int]:
        return dict(Counter(v[0] for v in self.violations))


TRANSPORT_KS = (3, 4)
TRANSPORT_RS = (0, 1)


def check_phi_properties(n: int) -> PhiReport:
    """Exhaustively check the map on S_n(12-3): image class, involution,
    13-2 preservation and the r in {0, 1} transport for k = 3, 4."""
    check_cap(n)
    report = PhiReport(n)
    sources = list_class(query(["12-3"], (), n))
    targets = set(list_class(query(["21-3"], (), n)))
    pairs = {k: (k_pattern("nodash", k), k_pattern("increasing", k)) for k in TRANSPORT_KS}
    images = set()
    for p in sources:
        q = phi(p)
        images.add(q)
        report.checked += 1
        if q not in targets:
            report.violations.append(("image", p, q))
        if q not in targets or phi_inverse(q) != p:
            report.violations.append(("involution", p, q))
        if occurrences(_P132, p) != occurrences(_P132, q):
            report.violations.append(("13-2", p, q))
        for k, (down, up) in pairs.items():
            a, b = occurrences(down, p), occurrences(up, q)
            for r in TRANSPORT_RS:
                if (a == r) != (b == r):
                    report.violations.append((f"transport k={k} r={r}", p, q))
    if images != targets:
        report.violations.append(("image set", len(images), len(targets)))
    return report


def transport_distribution(n: int, k: int) -> dict[int, tuple[int, int]]:
    """For every r: how many p in S_n(12-3) hold r copies of (k-1)...21k, and how
    many of their images hold r copies of 12...k.  Reported as data only; equality
    is asserted for r in {0, 1}."""
    check_cap(n)
    down, up = k_pattern("nodash", k), k_pattern("increasing", k)
    src, img = Counter(), Counter()
    for p in list_class(query(["12-3"], (), n)):
        src[occurrences(down, p)] += 1
        img[occurrences(up, phi(p))] += 1
    return {r: (src[r], img[r]) for r in sorted(set(src) | set(img))}
