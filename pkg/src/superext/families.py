"""Upward-closed families of subsets of a finite ground set.

A family is stored canonically as the antichain of its minimal members
(masks sorted by cardinality, then value); the family itself is the
upward closure of that antichain. This keeps representations small even
on ground sets where materialising all members is hopeless, while
membership stays a handful of bitmask tests.

Over a finite ground set every family is determined by finitely many
minimal sets (the stored antichain is that witness), and no family can
survive deleting finite sets from its members; the "free" regime of the
infinite theory is empty here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from .errors import EmptyFamilyError, NotMonotoneError, SizeGuardError
from .subsets import check_mask, format_subset, mask_of, parse_subset, sorted_elements

ENUM_MLS_MAX = 7          # ~1.4M systems at n=7; the practical ceiling
ENUM_HYPERSPACES_MAX = 4  # family counts grow Dedekind-fast
BITMAP_MAX = 12           # widest ground set for whole-family bitmaps


def set_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


def minimize_antichain(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-minimal masks from ``masks``, in canonical order."""
    pool = sorted(set(masks), key=set_key)
    kept: list[int] = []
    for m in pool:
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True, eq=False)
class SetFamily:
    """An upward-closed family, held as its antichain of minimal sets.

    The constructor is strict: ``min_sets`` must already be the canonical
    antichain (nonempty sets, pairwise incomparable, sorted by cardinality
    then value). Use :meth:`from_sets` to canonicalise arbitrary input.
    """

    n: int
    min_sets: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("ground set must have at least one point")
        for m in self.min_sets:
            if m == 0:
                raise ValueError("families may not contain the empty set")
            check_mask(m, self.n, "minimal set")
        if list(self.min_sets) != sorted(set(self.min_sets), key=set_key):
            raise ValueError("min_sets are not in canonical order")
        sets = self.min_sets
        for i, a in enumerate(sets):
            for b in sets[i + 1:]:
                if a & ~b == 0 or b & ~a == 0:
                    raise ValueError(
                        f"not an antichain: {format_subset(a)} and {format_subset(b)}"
                    )

    @classmethod
    def from_sets(cls, n: int, masks: Iterable[int]) -> "SetFamily":
        return cls(n, minimize_antichain(masks))

    def member(self, mask: int) -> bool:
        """True iff ``mask`` contains one of the minimal sets."""
        return any(m & ~mask == 0 for m in self.min_sets)

    @property
    def sort_key(self) -> tuple:
        return (len(self.min_sets), tuple(set_key(m) for m in self.min_sets))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.n == other.n and self.min_sets == other.min_sets

    def __hash__(self) -> int:
        return hash((self.n, self.min_sets))

    def __repr__(self) -> str:
        return f"<family on {self.n} points: {format_family(self)}>"


class MaximalLinkedSystem(SetFamily):
    """A family that equals its own transversal.

    Equivalent characterisation used for validation: the family is
    upward closed and contains exactly one of each complementary pair
    of subsets (which forces any two members to intersect). The public
    :func:`is_mls` computes the transversal fixed point independently,
    so the two routes cross-check each other.
    """

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.min_sets:
            raise ValueError("the empty family is not maximal linked")
        if not _self_dual(self.n, self.min_sets):
            raise ValueError("family is not a maximal linked system")


def _self_dual(n: int, min_sets: tuple[int, ...]) -> bool:
    if n <= BITMAP_MAX:
        sup = _superset_closures(n)
        bitmap = 0
        for m in min_sets:
            bitmap |= sup[m]
        return _bitmap_self_dual(n, bitmap)
    family = SetFamily(n, min_sets)
    return transversal(family) == family


def _bitmap_self_dual(n: int, bitmap: int) -> bool:
    # Position C of the reversed bitmap is position ~C of the original, so
    # "exactly one of C, ~C is a member" reads: reverse == complement.
    width = 1 << n
    reversed_bits = int(format(bitmap, f"0{width}b")[::-1], 2)
    return reversed_bits == bitmap ^ ((1 << width) - 1)


@lru_cache(maxsize=None)
def _superset_closures(n: int) -> tuple[int, ...]:
    """closures[m] = bitmap over all 2^n masks with bit t set iff t >= m."""
    full = (1 << n) - 1
    closures = [0] * (1 << n)
    for m in range(full, -1, -1):
        acc = 1 << m
        missing = full & ~m
        while missing:
            low = missing & -missing
            acc |= closures[m | low]
            missing ^= low
        closures[m] = acc
    return tuple(closures)


@lru_cache(maxsize=None)
def _subset_closures(n: int) -> tuple[int, ...]:
    """closures[m] = bitmap over all 2^n masks with bit t set iff t <= m."""
    closures = [0] * (1 << n)
    for m in range(1 << n):
        acc = 1 << m
        present = m
        while present:
            low = present & -present
            acc |= closures[m ^ low]
            present ^= low
        closures[m] = acc
    return tuple(closures)


def membership_bitmap(family: SetFamily) -> int:
    """Bitmap over all 2^n subsets; bit C set iff C is a member."""
    if family.n > BITMAP_MAX:
        raise SizeGuardError(f"membership bitmaps are limited to n <= {BITMAP_MAX}")
    sup = _superset_closures(family.n)
    bitmap = 0
    for m in family.min_sets:
        bitmap |= sup[m]
    return bitmap


def is_linked(family: SetFamily) -> bool:
    """True iff every two members intersect (checked on minimal sets)."""
    sets = family.min_sets
    return all(a & b for i, a in enumerate(sets) for b in sets[i + 1:])


def transversal(family: SetFamily) -> SetFamily:
    """The family of all sets meeting every member, in canonical form.

    Computed as the minimal hitting sets of the minimal-set hypergraph,
    one edge at a time with intermediate minimisation.
    """
    if not family.min_sets:
        raise EmptyFamilyError("the transversal of the empty family is undefined")
    partial: list[int] = [0]
    for edge in family.min_sets:
        nxt: list[int] = []
        for t in partial:
            if t & edge:
                nxt.append(t)
            else:
                e = edge
                while e:
                    low = e & -e
                    nxt.append(t | low)
                    e ^= low
        partial = list(minimize_antichain(nxt))
    return SetFamily(family.n, tuple(partial))


def is_mls(family: SetFamily) -> bool:
    """True iff the family is a fixed point of the transversal."""
    if not family.min_sets:
        return False
    return transversal(family) == family


def minimal_antichain(oracle: Callable[[int], bool], n: int) -> SetFamily:
    """Canonicalise a monotone membership oracle into a SetFamily.

    The oracle is evaluated on every nonempty mask in increasing value
    order; since all subsets of a mask precede it, an accepted mask not
    covered by the antichain so far is exactly a minimal member. A
    rejected mask that is covered witnesses non-monotonicity.
    """
    if not 1 <= n <= 16:
        raise SizeGuardError(f"minimal_antichain supports 1 <= n <= 16, got {n}")
    if oracle(0):
        raise NotMonotoneError("oracle accepts the empty set", witness=(0, 0))
    mins: list[int] = []
    for mask in range(1, 1 << n):
        covering = next((m for m in mins if m & ~mask == 0), None)
        if oracle(mask):
            if covering is None:
                mins.append(mask)
        elif covering is not None:
            raise NotMonotoneError(
                f"oracle accepts {format_subset(covering)} but rejects its "
                f"superset {format_subset(mask)}",
                witness=(covering, mask),
            )
    return SetFamily(n, minimize_antichain(mins))


def enumerate_mls(n: int) -> tuple[MaximalLinkedSystem, ...]:
    """All maximal linked systems on {0,...,n-1}, canonically sorted.

    Depth-first search over masks in increasing value order, growing a
    linked antichain of minimal sets. Whenever a mask is rejected, its
    complement is recorded as an obligation (it must end up a member, or
    no self-dual completion exists); whenever a minimal set is added, all
    masks missing it become permanently non-members. Branches whose
    obligations land in the non-member region are pruned. Leaves are
    re-validated, so pruning strength never affects correctness.
    """
    if not 1 <= n <= ENUM_MLS_MAX:
        raise SizeGuardError(f"enumerate_mls supports 1 <= n <= {ENUM_MLS_MAX}, got {n}")
    return _enumerate_mls_cached(n)


@lru_cache(maxsize=None)
def _enumerate_mls_cached(n: int) -> tuple[MaximalLinkedSystem, ...]:
    sup = _superset_closures(n)
    sub = _subset_closures(n)
    full = (1 << n) - 1
    limit = 1 << n
    found: list[MaximalLinkedSystem] = []
    chosen: list[int] = []

    def emit() -> None:
        found.append(MaximalLinkedSystem(n, tuple(sorted(chosen, key=set_key))))

    def walk(mask: int, member: int, blocked: int, obligated: int) -> None:
        while mask < limit:
            bit = 1 << mask
            if member & bit:
                mask += 1
                continue
            comp = full ^ mask
            if obligated & bit:
                if blocked & bit:
                    return
                chosen.append(mask)
                walk(mask + 1, member | sup[mask], blocked | sub[comp], obligated)
                chosen.pop()
                return
            if not blocked & bit:
                new_member = member | sup[mask]
                new_blocked = blocked | sub[comp]
                if not (obligated & ~new_member & new_blocked):
                    chosen.append(mask)
                    walk(mask + 1, new_member, new_blocked, obligated)
                    chosen.pop()
            if comp > mask:
                if blocked >> comp & 1:
                    return
                obligated |= 1 << comp
            elif not member >> comp & 1:
                return
            mask += 1
        emit()

    walk(1, 0, 0, 0)
    found.sort(key=lambda f: f.sort_key)
    return tuple(found)


def enumerate_inclusion_hyperspaces(n: int) -> tuple[SetFamily, ...]:
    """All nonempty upward-closed families of nonempty subsets, sorted."""
    if not 1 <= n <= ENUM_HYPERSPACES_MAX:
        raise SizeGuardError(
            f"enumerate_inclusion_hyperspaces supports 1 <= n <= {ENUM_HYPERSPACES_MAX}, got {n}"
        )
    sup = _superset_closures(n)
    sub = _subset_closures(n)
    subsets = 1 << n
    families: list[SetFamily] = []
    # Family bitmaps over nonempty masks; bit 0 (the empty set) stays clear.
    for packed in range(1, 1 << (subsets - 1)):
        bitmap = packed << 1
        ok = True
        mins = []
        for mask in range(1, subsets):
            if bitmap >> mask & 1:
                if bitmap & sup[mask] != sup[mask]:
                    ok = False
                    break
                if not bitmap & (sub[mask] ^ (1 << mask)):
                    mins.append(mask)
        if ok:
            families.append(SetFamily(n, tuple(sorted(mins, key=set_key))))
    families.sort(key=lambda f: f.sort_key)
    return tuple(families)


def random_inclusion_hyperspace(n: int, rng: random.Random) -> SetFamily:
    """A random nonempty upward-closed family (for randomised checks)."""
    count = rng.randint(1, max(2, n + 2))
    masks = [rng.randint(1, (1 << n) - 1) for _ in range(count)]
    return SetFamily.from_sets(n, masks)


def format_family(family: SetFamily) -> str:
    """Render min_sets as ``{0,1}|{0,2}``."""
    return "|".join(format_subset(m) for m in family.min_sets)


def parse_family_line(line: str, n: int) -> SetFamily:
    """Parse the ``{0,1}|{0,2}`` syntax back into a family."""
    parts = [p for p in line.strip().split("|") if p]
    return SetFamily.from_sets(n, (parse_subset(p) for p in parts))


def family_to_json(family: SetFamily) -> dict:
    return {
        "n": family.n,
        "min_sets": [sorted_elements(m) for m in family.min_sets],
    }


def family_from_json(obj: dict, expect_mls: bool = False) -> SetFamily:
    if not isinstance(obj, dict) or "n" not in obj or "min_sets" not in obj:
        raise ValueError("family JSON needs 'n' and 'min_sets' keys")
    n = int(obj["n"])
    masks = [mask_of(map(int, part)) for part in obj["min_sets"]]
    family = SetFamily.from_sets(n, masks)
    if expect_mls:
        return MaximalLinkedSystem(n, family.min_sets)
    return family
