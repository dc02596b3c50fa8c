"""The extended product on maximal linked systems.

A subset C belongs to the product A*B exactly when the set of points x
whose translated preimage of C belongs to B is itself a member of A.
Evaluating that test on every nonempty subset and canonicalising the
accepted ones is the single audited product path; it needs no enumeration
of the ambient system space and works on ground sets up to 16 points.

Full composition tables additionally use a bulk evaluator that packs each
system into a bitmap over the 2^n subsets and sweeps whole columns with
numpy; tests pin the bulk path to the audited one pair by pair.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algebra import FiniteSemigroup, preimage_translate, semigroup_from_json, semigroup_to_json, translate
from .errors import SizeGuardError, ValidationError
from .families import (
    MaximalLinkedSystem,
    SetFamily,
    enumerate_mls,
    family_from_json,
    family_to_json,
    format_family,
    membership_bitmap,
    minimal_antichain,
    minimize_antichain,
    set_key,
)

DEFAULT_SEED = 1729
PRODUCT_MAX = 16
UNIONS_MAX = 6
TABLE_MAX = 6
EXHAUSTIVE_ASSOC_MAX = 81
_COLUMN_BLOCK = 256


def principal(x: int, n: int) -> MaximalLinkedSystem:
    """The system of all sets containing the point x."""
    if not 0 <= x < n:
        raise ValueError(f"point {x} outside ground set of size {n}")
    return MaximalLinkedSystem(n, (1 << x,))


@lru_cache(maxsize=32)
def _preimage_table(group: FiniteSemigroup) -> tuple[tuple[int, ...], ...]:
    """table[x][C] = preimage of subset C under left translation by x."""
    n = group.n
    rows = []
    for x in range(n):
        singles = [0] * n
        for z in range(n):
            singles[group.table[x][z]] |= 1 << z
        row = [0] * (1 << n)
        for c in range(1, 1 << n):
            low = c & -c
            row[c] = row[c ^ low] | singles[low.bit_length() - 1]
        rows.append(tuple(row))
    return tuple(rows)


def _check_operands(a: SetFamily, b: SetFamily, group: FiniteSemigroup) -> None:
    if not (a.n == b.n == group.n):
        raise ValueError(
            f"ground sets differ: operands on {a.n} and {b.n} points, algebra of order {group.n}"
        )


def product(
    a: MaximalLinkedSystem, b: MaximalLinkedSystem, group: FiniteSemigroup
) -> MaximalLinkedSystem:
    """The extended product, evaluated subset by subset."""
    _check_operands(a, b, group)
    n = group.n
    if n > PRODUCT_MAX:
        raise SizeGuardError(f"products are limited to ground sets of size {PRODUCT_MAX}")
    pre = _preimage_table(group)

    def accepts(c: int) -> bool:
        xs = 0
        for x in range(n):
            if b.member(pre[x][c]):
                xs |= 1 << x
        return a.member(xs)

    result = minimal_antichain(accepts, n)
    # The product of two maximal linked systems is again one; failure here
    # means a bug upstream, not bad input.
    return MaximalLinkedSystem(result.n, result.min_sets)


def product_via_unions(
    a: MaximalLinkedSystem, b: MaximalLinkedSystem, group: FiniteSemigroup
) -> MaximalLinkedSystem:
    """Cross-check route: unions of translated choice selections.

    Every member of the product arises as a union, over the points x of
    some member U of ``a``, of x translated by a member chosen from ``b``.
    Minimal members already arise from minimal U and minimal choices, so
    only those are enumerated; the choice-function blow-up restricts this
    route to small ground sets.
    """
    _check_operands(a, b, group)
    n = group.n
    if n > UNIONS_MAX:
        raise SizeGuardError(f"the union form is limited to ground sets of size {UNIONS_MAX}")
    choices = {
        x: [translate(x, v, group) for v in b.min_sets] for x in range(n)
    }
    found: list[int] = []

    def covered(mask: int) -> bool:
        return any(f & ~mask == 0 for f in found)

    def extend(points: list[int], at: int, union: int) -> None:
        if covered(union):
            return
        if at == len(points):
            found.append(union)
            return
        for translated in choices[points[at]]:
            extend(points, at + 1, union | translated)

    for u in a.min_sets:
        extend([i for i in range(n) if u >> i & 1], 0, 0)
    mins = minimize_antichain(found)
    return MaximalLinkedSystem(n, mins)


def translate_mls(
    x: int, system: MaximalLinkedSystem, group: FiniteSemigroup
) -> MaximalLinkedSystem:
    """The product of the principal system at x with ``system``.

    For groups, translation permutes the subset lattice, so the minimal
    sets can simply be translated pointwise; otherwise the product route
    is used directly.
    """
    if not 0 <= x < group.n:
        raise ValueError(f"point {x} outside algebra of order {group.n}")
    if group.is_group:
        translated = minimize_antichain(
            translate(x, m, group) for m in system.min_sets
        )
        return MaximalLinkedSystem(system.n, translated)
    return product(principal(x, group.n), system, group)


@dataclass(frozen=True)
class Superextension:
    """All maximal linked systems over a group, with their composition table.

    ``elements`` is the canonical enumeration order; ``table[i][j]`` is the
    index of elements[i] * elements[j]; ``principal_index[x]`` locates the
    principal system at the group element x.
    """

    group: FiniteSemigroup
    elements: tuple[MaximalLinkedSystem, ...]
    table: np.ndarray
    principal_index: tuple[int, ...]

    def __post_init__(self) -> None:
        size = len(self.elements)
        if self.table.shape != (size, size):
            raise ValidationError("composition table shape does not match element count")
        self.table.setflags(write=False)
        g = self.group
        p = self.principal_index
        for x in range(g.n):
            for y in range(g.n):
                if self.table[p[x], p[y]] != p[g.table[x][y]]:
                    raise ValidationError(
                        "principal systems do not embed homomorphically",
                        witness=(x, y, g.table[x][y]),
                    )

    @property
    def size(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def is_principal(self, i: int) -> bool:
        return i in set(self.principal_index)

    def nonprincipal_indices(self) -> tuple[int, ...]:
        principal = set(self.principal_index)
        return tuple(i for i in range(self.size) if i not in principal)

    def __repr__(self) -> str:
        return f"<superextension of {self.group!r}: {self.size} systems>"


def _system_bitmaps(elements, n: int) -> np.ndarray:
    return np.array(
        [membership_bitmap(el) for el in elements], dtype=np.uint64
    )


def _column_block(
    bitmaps: np.ndarray, xsets: np.ndarray, cols: slice, n: int
) -> np.ndarray:
    block = xsets[cols]
    out = np.zeros((bitmaps.shape[0], block.shape[0]), dtype=np.uint64)
    one = np.uint64(1)
    for c in range(1, 1 << n):
        bit = (bitmaps[:, None] >> block[None, :, c]) & one
        out |= bit << np.uint64(c)
    return out


def build_superextension(
    group: FiniteSemigroup,
    *,
    threads: int = 1,
    seed: int = DEFAULT_SEED,
    samples: int = 1_000_000,
) -> Superextension:
    """Enumerate all maximal linked systems over a group and compose them.

    The table is verified on construction: principal systems must embed
    homomorphically, every product must land back in the enumeration
    (closure), and associativity is checked exhaustively up to
    81 elements and on ``samples`` seeded random triples beyond that.
    """
    if not group.is_group:
        raise ValidationError("composition tables are built over groups only")
    n = group.n
    if n > TABLE_MAX:
        raise SizeGuardError(f"composition tables are limited to groups of order {TABLE_MAX}")
    elements = enumerate_mls(n)
    size = len(elements)
    subsets = 1 << n

    bitmaps = _system_bitmaps(elements, n)
    order = np.argsort(bitmaps, kind="stable")
    sorted_bitmaps = bitmaps[order]

    pre = _preimage_table(group)
    pre_arr = np.array(pre, dtype=np.uint64)
    one = np.uint64(1)
    xsets = np.zeros((size, subsets), dtype=np.uint64)
    for x in range(n):
        xsets |= ((bitmaps[:, None] >> pre_arr[x][None, :]) & one) << np.uint64(x)

    table = np.empty((size, size), dtype=np.int32)

    def fill(start: int) -> None:
        cols = slice(start, min(start + _COLUMN_BLOCK, size))
        prods = _column_block(bitmaps, xsets, cols, n)
        flat = prods.ravel()
        pos = np.minimum(np.searchsorted(sorted_bitmaps, flat), size - 1)
        if not np.array_equal(sorted_bitmaps[pos], flat):
            raise ValidationError("a product escaped the enumerated systems")
        table[:, cols] = order[pos].reshape(prods.shape)

    starts = range(0, size, _COLUMN_BLOCK)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(fill, starts))
    else:
        for start in starts:
            fill(start)

    lookup = {el: i for i, el in enumerate(elements)}
    principal_index = tuple(lookup[principal(x, n)] for x in range(n))

    ext = Superextension(group, elements, table, principal_index)
    _verify_associativity(ext, seed=seed, samples=samples)
    return ext


def _verify_associativity(ext: Superextension, *, seed: int, samples: int) -> None:
    t = ext.table
    size = ext.size
    if size <= EXHAUSTIVE_ASSOC_MAX:
        left = t[t]  # left[a, b, c] = t[t[a, b], c]
        right = t[np.arange(size)[:, None, None], t[None, :, :]]
        if not np.array_equal(left, right):
            raise ValidationError("composition table is not associative")
        return
    rng = np.random.default_rng(seed)
    a, b, c = rng.integers(0, size, size=(3, samples))
    if not np.array_equal(t[t[a, b], c], t[a, t[b, c]]):
        raise ValidationError("composition table failed sampled associativity")


def table_to_json(ext: Superextension) -> dict:
    return {
        "group": semigroup_to_json(ext.group),
        "elements": [family_to_json(el) for el in ext.elements],
        "table": ext.table.tolist(),
    }


def table_from_json(obj: dict) -> Superextension:
    group = semigroup_from_json(obj["group"])
    elements = tuple(
        family_from_json(el, expect_mls=True) for el in obj["elements"]
    )
    table = np.array(obj["table"], dtype=np.int32)
    lookup = {el: i for i, el in enumerate(elements)}
    principal_index = tuple(lookup[principal(x, group.n)] for x in range(group.n))
    return Superextension(group, elements, table, principal_index)


_DOT_COLORS = (
    "crimson", "royalblue", "seagreen", "darkorange", "purple", "teal",
    "goldenrod", "deeppink", "slategray", "saddlebrown", "olive", "navy",
    "turquoise", "salmon", "indigo", "black",
)


def translation_graph_dot(ext: Superextension) -> str:
    """DOT digraph of left translations: an edge per group generator."""
    lines = ["digraph left_translations {"]
    for i, el in enumerate(ext.elements):
        lines.append(f'  n{i} [label="{i}: {format_family(el)}"];')
    for x in range(ext.group.n):
        color = _DOT_COLORS[x % len(_DOT_COLORS)]
        row = ext.table[ext.principal_index[x]]
        label = ext.group.labels[x]
        for j in range(ext.size):
            lines.append(
                f'  n{j} -> n{int(row[j])} [color="{color}" label="{label}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
