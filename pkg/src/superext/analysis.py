"""Classical finite-semigroup analysis over raw composition tables.

Every function here accepts anything it can read as a square index
table: a FiniteSemigroup, a Superextension, a numpy array, or nested
lists. Which indices are principal, units, etc. is the caller's
metadata, not this module's concern.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import SizeGuardError

ISO_MAX = 100


def _as_array(table) -> np.ndarray:
    inner = getattr(table, "table", table)
    arr = np.asarray(inner, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("expected a square composition table")
    return arr


def idempotents(table) -> tuple[int, ...]:
    t = _as_array(table)
    n = t.shape[0]
    return tuple(int(a) for a in range(n) if t[a, a] == a)


def zeros(table) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(left zeros, right zeros): rows/columns that are constant at self."""
    t = _as_array(table)
    n = t.shape[0]
    left = tuple(int(a) for a in range(n) if np.all(t[a, :] == a))
    right = tuple(int(a) for a in range(n) if np.all(t[:, a] == a))
    return left, right


def center_of_table(table) -> tuple[int, ...]:
    t = _as_array(table)
    commuting = (t == t.T).all(axis=1)
    return tuple(int(a) for a in np.flatnonzero(commuting))


def is_commutative(table) -> bool:
    t = _as_array(table)
    return bool((t == t.T).all())


def cancelable(table) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(left cancelable, right cancelable).

    a is left cancelable when x -> a*x is injective (row a has no repeat),
    right cancelable when x -> x*a is injective (column a has no repeat).
    """
    t = _as_array(table)
    n = t.shape[0]
    left = tuple(int(a) for a in range(n) if len(np.unique(t[a, :])) == n)
    right = tuple(int(a) for a in range(n) if len(np.unique(t[:, a])) == n)
    return left, right


@dataclass(frozen=True)
class IdealCheck:
    holds: bool
    witness: Optional[tuple[int, int]] = None


def check_two_sided_ideal(table, indices: Sequence[int]) -> IdealCheck:
    """Does S*I and I*S stay inside I? On failure, the witness is the
    (outside element, ideal element) pair whose product escapes."""
    t = _as_array(table)
    n = t.shape[0]
    ideal = set(int(i) for i in indices)
    if not ideal:
        raise ValueError("ideal check needs a nonempty index set")
    for a in range(n):
        for i in ideal:
            if t[a, i] not in ideal or t[i, a] not in ideal:
                return IdealCheck(False, witness=(a, i))
    return IdealCheck(True)


def minimal_left_ideals(table) -> tuple[tuple[int, ...], ...]:
    """Inclusion-minimal principal left ideals T*a + {a}.

    Any left ideal contains a principal one, so the minimal principal
    ideals are exactly the minimal left ideals.
    """
    t = _as_array(table)
    n = t.shape[0]
    principal = {frozenset(int(v) for v in t[:, a]) | {a} for a in range(n)}
    minimal = [
        s for s in principal
        if not any(other < s for other in principal)
    ]
    return tuple(sorted(tuple(sorted(s)) for s in minimal))


def _power_profile(t: np.ndarray, a: int) -> tuple[int, int]:
    """(tail length, cycle length) of the power sequence a, a^2, ..."""
    seen: dict[int, int] = {}
    x = a
    step = 0
    while x not in seen:
        seen[x] = step
        x = int(t[x, a])
        step += 1
    return seen[x], step - seen[x]


def _initial_signature(t: np.ndarray, a: int) -> tuple:
    row_im = len(np.unique(t[a, :]))
    col_im = len(np.unique(t[:, a]))
    commute = int((t[a, :] == t[:, a]).sum())
    return (bool(t[a, a] == a), _power_profile(t, a), row_im, col_im, commute)


def _joint_colors(t1: np.ndarray, t2: np.ndarray) -> tuple[list[int], list[int]]:
    """Refine element colors for both tables in one shared palette, so
    equal colors mean indistinguishable under every invariant used."""

    def relabel(sigs1, sigs2):
        palette: dict = {}
        c1 = [palette.setdefault(s, len(palette)) for s in sigs1]
        c2 = [palette.setdefault(s, len(palette)) for s in sigs2]
        return c1, c2, len(palette)

    col1, col2, classes = relabel(
        [_initial_signature(t1, a) for a in range(t1.shape[0])],
        [_initial_signature(t2, a) for a in range(t2.shape[0])],
    )
    while True:
        def round_sig(t, cols):
            n = t.shape[0]
            return [
                (
                    cols[a],
                    tuple(sorted(
                        (cols[int(t[a, b])], cols[int(t[b, a])], cols[b])
                        for b in range(n)
                    )),
                )
                for a in range(n)
            ]

        col1, col2, refined = relabel(round_sig(t1, col1), round_sig(t2, col2))
        if refined == classes:
            return col1, col2
        classes = refined


def isomorphic(table1, table2) -> Optional[tuple[int, ...]]:
    """A bijection f with f(a*b) = f(a)*f(b), or None.

    Invariant partition refinement first, then backtracking with forced
    propagation; any bijection found is verified exhaustively before
    being returned.
    """
    t1, t2 = _as_array(table1), _as_array(table2)
    n = t1.shape[0]
    if n != t2.shape[0]:
        return None
    if n > ISO_MAX:
        raise SizeGuardError(f"isomorphism search is limited to order {ISO_MAX}")
    col1, col2 = _joint_colors(t1, t2)
    if sorted(col1) != sorted(col2):
        return None
    by_color: dict[int, list[int]] = {}
    for b, c in enumerate(col2):
        by_color.setdefault(c, []).append(b)

    fwd: list[int | None] = [None] * n
    used = [False] * n
    order = sorted(range(n), key=lambda a: (col1[a], a))

    def assign(a: int, b: int, trail: list[int]) -> bool:
        """Map a -> b and propagate forced products; log into trail."""
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            if fwd[x] is not None:
                if fwd[x] != y:
                    return False
                continue
            if used[y] or col1[x] != col2[y]:
                return False
            fwd[x] = y
            used[y] = True
            trail.append(x)
            for z in range(n):
                w = fwd[z]
                if w is None:
                    continue
                queue.append((int(t1[x, z]), int(t2[y, w])))
                queue.append((int(t1[z, x]), int(t2[w, y])))
        return True

    def undo(trail: list[int]) -> None:
        for x in trail:
            y = fwd[x]
            fwd[x] = None
            used[y] = False

    def search(pos: int) -> bool:
        while pos < n and fwd[order[pos]] is not None:
            pos += 1
        if pos == n:
            return True
        a = order[pos]
        for b in by_color.get(col1[a], ()):
            if used[b]:
                continue
            trail: list[int] = []
            if assign(a, b, trail) and search(pos + 1):
                return True
            undo(trail)
        return False

    if not search(0):
        return None
    result = tuple(int(v) for v in fwd)  # type: ignore[arg-type]
    for a in range(n):
        for b in range(n):
            if result[int(t1[a, b])] != t2[result[a], result[b]]:
                return None
    return result


@dataclass(frozen=True)
class AnalysisReport:
    """Element-level facts about one composition table."""

    order: int
    idempotents: tuple[int, ...]
    left_zeros: tuple[int, ...]
    right_zeros: tuple[int, ...]
    center: tuple[int, ...]
    left_cancelable: tuple[int, ...]
    right_cancelable: tuple[int, ...]
    is_commutative: bool
    minimal_left_ideals: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "idempotents": list(self.idempotents),
            "left_zeros": list(self.left_zeros),
            "right_zeros": list(self.right_zeros),
            "center": list(self.center),
            "left_cancelable": list(self.left_cancelable),
            "right_cancelable": list(self.right_cancelable),
            "is_commutative": self.is_commutative,
            "minimal_left_ideals": [list(s) for s in self.minimal_left_ideals],
        }


def analyze(table) -> AnalysisReport:
    t = _as_array(table)
    left_z, right_z = zeros(t)
    left_c, right_c = cancelable(t)
    return AnalysisReport(
        order=t.shape[0],
        idempotents=idempotents(t),
        left_zeros=left_z,
        right_zeros=right_z,
        center=center_of_table(t),
        left_cancelable=left_c,
        right_cancelable=right_c,
        is_commutative=is_commutative(t),
        minimal_left_ideals=minimal_left_ideals(t),
    )
