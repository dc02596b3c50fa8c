"""Deliberately naive reference implementations.

Everything here exists to cross-check the fast paths by a genuinely
different route: whole-family bitmap scans, direct antichain searches,
and a one-point reduction for counting. None of it shares code with the
enumeration DFS or the product evaluator.
"""

from __future__ import annotations

from .errors import SizeGuardError
from .families import SetFamily, is_mls, minimize_antichain, set_key

BRUTE_FORCE_MAX = 4
LINKED_ANTICHAIN_MAX = 5


def _families_by_bitmap(n: int):
    """Yield (bitmap, members) for every family of nonempty subsets."""
    subsets = 1 << n
    for packed in range(1, 1 << (subsets - 1)):
        bitmap = packed << 1
        members = [c for c in range(1, subsets) if bitmap >> c & 1]
        yield bitmap, members


def _is_monotone(n: int, bitmap: int, members) -> bool:
    for c in members:
        for i in range(n):
            if not c >> i & 1 and not bitmap >> (c | 1 << i) & 1:
                return False
    return True


def brute_force_mls(n: int) -> tuple[SetFamily, ...]:
    """All maximal linked systems by scanning every subset family.

    Keeps families that are upward closed, pairwise intersecting, and
    unextendable (every missing set is disjoint from some member).
    """
    if not 1 <= n <= BRUTE_FORCE_MAX:
        raise SizeGuardError(f"brute force scan is limited to n <= {BRUTE_FORCE_MAX}")
    subsets = 1 << n
    out = []
    for bitmap, members in _families_by_bitmap(n):
        if not _is_monotone(n, bitmap, members):
            continue
        if any(a & b == 0 for i, a in enumerate(members) for b in members[i:]):
            continue
        maximal = all(
            any(m & c == 0 for m in members)
            for c in range(1, subsets)
            if not bitmap >> c & 1
        )
        if maximal:
            out.append(SetFamily.from_sets(n, members))
    out.sort(key=lambda f: f.sort_key)
    return tuple(out)


def self_dual_monotone_mls(n: int) -> tuple[SetFamily, ...]:
    """All maximal linked systems via the self-dual monotone description:
    a family containing exactly one of each complementary pair of sets."""
    if not 1 <= n <= BRUTE_FORCE_MAX:
        raise SizeGuardError(f"self-dual scan is limited to n <= {BRUTE_FORCE_MAX}")
    subsets = 1 << n
    full = subsets - 1
    out = []
    for bitmap, members in _families_by_bitmap(n):
        if not _is_monotone(n, bitmap, members):
            continue
        if all((bitmap >> c & 1) != (bitmap >> (full ^ c) & 1) for c in range(subsets)):
            out.append(SetFamily.from_sets(n, members))
    out.sort(key=lambda f: f.sort_key)
    return tuple(out)


def _linked_antichains(n: int):
    """Yield every antichain of pairwise-intersecting nonempty subsets."""
    subsets = 1 << n
    chain: list[int] = []

    def walk(start: int):
        yield tuple(chain)
        for cand in range(start, subsets):
            if all(cand & c and cand | c != cand for c in chain):
                chain.append(cand)
                yield from walk(cand + 1)
                chain.pop()

    yield from walk(1)


def linked_antichain_mls(n: int) -> tuple[SetFamily, ...]:
    """All maximal linked systems by filtering linked antichains for
    self-transversality."""
    if not 1 <= n <= LINKED_ANTICHAIN_MAX:
        raise SizeGuardError(f"linked antichain search is limited to n <= {LINKED_ANTICHAIN_MAX}")
    out = []
    for chain in _linked_antichains(n):
        if not chain:
            continue
        family = SetFamily(n, tuple(sorted(chain, key=set_key)))
        if is_mls(family):
            out.append(family)
    out.sort(key=lambda f: f.sort_key)
    return tuple(out)


def count_linked_antichains(points: int) -> int:
    """Number of linked antichains (including the empty one) on a set.

    Splitting a self-dual monotone family by one distinguished point
    matches it with a linked antichain on the remaining points, so this
    count equals the number of maximal linked systems on points+1 points
    without running the system enumeration at all.
    """
    if points < 0:
        raise ValueError("need a nonnegative number of points")
    if points == 0:
        return 1
    return sum(1 for _ in _linked_antichains(points))


def antichain_families(n: int) -> tuple[SetFamily, ...]:
    """All nonempty upward-closed families, built directly as antichains."""
    if not 1 <= n <= BRUTE_FORCE_MAX:
        raise SizeGuardError(f"antichain family search is limited to n <= {BRUTE_FORCE_MAX}")
    subsets = 1 << n
    out: list[SetFamily] = []
    chain: list[int] = []

    def walk(start: int):
        if chain:
            out.append(SetFamily.from_sets(n, chain))
        for cand in range(start, subsets):
            if all(cand | c != cand and cand | c != c for c in chain):
                chain.append(cand)
                walk(cand + 1)
                chain.pop()

    walk(1)
    out.sort(key=lambda f: f.sort_key)
    return tuple(out)
