"""Finite semigroups and groups as explicit composition tables.

Elements are dense indices 0..n-1; labels are cosmetic. Associativity is
verified eagerly on every construction path, so a bad table never
propagates into downstream enumeration or table building.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import SpecParseError, ValidationError
from .subsets import check_mask, iter_elements, mask_of


@dataclass(frozen=True)
class FiniteSemigroup:
    """An order-n semigroup given by its full composition table.

    ``table[a][b]`` is the index of a*b. ``identity`` is the two-sided
    unit if one exists; ``is_group`` records whether every element has a
    two-sided inverse. Instances are immutable; construction validates
    every invariant including associativity on all n^3 triples.
    """

    n: int
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    identity: int | None
    is_group: bool

    def __post_init__(self) -> None:
        n, table = self.n, self.table
        if n < 1:
            raise ValidationError("order must be at least 1")
        if len(table) != n or any(len(row) != n for row in table):
            raise ValidationError(f"table is not {n}x{n}")
        for a in range(n):
            for b in range(n):
                if not 0 <= table[a][b] < n:
                    raise ValidationError(f"entry table[{a}][{b}]={table[a][b]} out of range")
        for a in range(n):
            ta = table[a]
            for b in range(n):
                tab = table[ta[b]]
                tb = table[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise ValidationError(
                            f"not associative: ({a}*{b})*{c} != {a}*({b}*{c})",
                            witness=(a, b, c),
                        )
        if len(self.labels) != n:
            raise ValidationError("labels length does not match order")
        if self.identity is not None:
            e = self.identity
            if not 0 <= e < n:
                raise ValidationError(f"identity index {e} out of range")
            if any(table[e][x] != x or table[x][e] != x for x in range(n)):
                raise ValidationError(f"claimed identity {e} is not a two-sided unit")
        if self.is_group:
            if self.identity is None:
                raise ValidationError("a group needs an identity")
            if any(self._find_inverse(x) is None for x in range(n)):
                raise ValidationError("not a group: some element has no two-sided inverse")

    @classmethod
    def from_table(
        cls,
        table,
        labels=None,
        identity: int | None = None,
    ) -> "FiniteSemigroup":
        """Build from a table, deriving identity/is_group when not given."""
        rows = tuple(tuple(int(v) for v in row) for row in table)
        n = len(rows)
        if identity is None:
            identity = next(
                (
                    e
                    for e in range(n)
                    if all(rows[e][x] == x and rows[x][e] == x for x in range(n))
                ),
                None,
            )
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        else:
            labels = tuple(str(l) for l in labels)
        probe = cls(n, rows, labels, identity, is_group=False)
        is_group = identity is not None and all(
            probe._find_inverse(x) is not None for x in range(n)
        )
        if not is_group:
            return probe
        return cls(n, rows, labels, identity, is_group=True)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def _find_inverse(self, a: int) -> int | None:
        e = self.identity
        if e is None:
            return None
        for b in range(self.n):
            if self.table[a][b] == e and self.table[b][a] == e:
                return b
        return None

    def inv(self, a: int) -> int:
        b = self._find_inverse(a)
        if b is None:
            raise ValidationError(f"element {a} has no two-sided inverse")
        return b

    def __repr__(self) -> str:
        kind = "group" if self.is_group else "semigroup"
        return f"<{kind} of order {self.n}>"


def make_cyclic(n: int) -> FiniteSemigroup:
    """The cyclic group of order n, written additively."""
    if n < 1:
        raise ValueError(f"invalid order {n}: cyclic groups need n >= 1")
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteSemigroup(n, table, tuple(str(i) for i in range(n)), 0, True)


# Permutations of {0,1,2} in a fixed order; composition applies the right
# factor first: (p*q)(i) = p(q(i)).
_S3_PERMS = (
    (0, 1, 2),  # id
    (1, 0, 2),  # (01)
    (2, 1, 0),  # (02)
    (0, 2, 1),  # (12)
    (1, 2, 0),  # (012)
    (2, 0, 1),  # (021)
)
_S3_LABELS = ("id", "(01)", "(02)", "(12)", "(012)", "(021)")


def make_symmetric3() -> FiniteSemigroup:
    """The symmetric group on three points; the smallest nonabelian group."""
    def compose(p, q):
        return tuple(p[q[i]] for i in range(3))

    index = {p: i for i, p in enumerate(_S3_PERMS)}
    table = tuple(
        tuple(index[compose(p, q)] for q in _S3_PERMS) for p in _S3_PERMS
    )
    return FiniteSemigroup(6, table, _S3_LABELS, 0, True)


def direct_product(a: FiniteSemigroup, b: FiniteSemigroup) -> FiniteSemigroup:
    """Componentwise product; element (x, y) is encoded as x*|b| + y."""
    n = a.n * b.n
    table = tuple(
        tuple(
            a.table[x1][x2] * b.n + b.table[y1][y2]
            for x2 in range(a.n)
            for y2 in range(b.n)
        )
        for x1 in range(a.n)
        for y1 in range(b.n)
    )
    labels = tuple(
        f"({a.labels[x]},{b.labels[y]})" for x in range(a.n) for y in range(b.n)
    )
    identity = None
    if a.identity is not None and b.identity is not None:
        identity = a.identity * b.n + b.identity
    return FiniteSemigroup(n, table, labels, identity, a.is_group and b.is_group)


def adjoin_external_unit(s: FiniteSemigroup) -> FiniteSemigroup:
    """Attach a fresh two-sided unit e at index |s|.

    Old products are unchanged; the result is a monoid but never a group
    when |s| >= 1 (a pre-existing unit of s stops being globally
    invertible once e absorbs the unit role).
    """
    n = s.n + 1
    e = s.n
    table = tuple(
        tuple(
            s.table[a][b] if a < s.n and b < s.n else (b if a == e else a)
            for b in range(n)
        )
        for a in range(n)
    )
    labels = s.labels + ("e",)
    return FiniteSemigroup(n, table, labels, e, is_group=False)


def semigroup_to_json(s: FiniteSemigroup) -> dict:
    obj: dict = {"n": s.n, "table": [list(row) for row in s.table], "labels": list(s.labels)}
    if s.identity is not None:
        obj["identity"] = s.identity
    return obj


def semigroup_from_json(obj: dict) -> FiniteSemigroup:
    if not isinstance(obj, dict) or "n" not in obj or "table" not in obj:
        raise ValidationError("group JSON needs 'n' and 'table' keys")
    s = FiniteSemigroup.from_table(
        obj["table"], labels=obj.get("labels"), identity=obj.get("identity")
    )
    if s.n != int(obj["n"]):
        raise ValidationError(f"declared order {obj['n']} but table has {s.n} rows")
    return s


def load_semigroup(path: str | Path) -> FiniteSemigroup:
    with open(path, encoding="utf-8") as fh:
        return semigroup_from_json(json.load(fh))


class _SpecParser:
    """Recursive descent for: expr := term ('x' term)*, term := atom 'e'*,
    atom := 'C' digits | 'S3'. A spec starting with ``file:`` is atomic and
    denotes a JSON Cayley-table file."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str):
        raise SpecParseError(message, self.pos)

    def parse(self) -> FiniteSemigroup:
        result = self.expr()
        if self.pos != len(self.text):
            self.fail(f"unexpected trailing input {self.text[self.pos:]!r}")
        return result

    def expr(self) -> FiniteSemigroup:
        result = self.term()
        while self.pos < len(self.text) and self.text[self.pos] == "x":
            self.pos += 1
            result = direct_product(result, self.term())
        return result

    def term(self) -> FiniteSemigroup:
        result = self.atom()
        while self.pos < len(self.text) and self.text[self.pos] == "e":
            self.pos += 1
            result = adjoin_external_unit(result)
        return result

    def atom(self) -> FiniteSemigroup:
        text = self.text
        if self.pos >= len(text):
            self.fail("expected an algebra atom, found end of input")
        if text.startswith("S3", self.pos):
            self.pos += 2
            return make_symmetric3()
        if text[self.pos] == "C":
            start = self.pos + 1
            end = start
            while end < len(text) and text[end].isdigit():
                end += 1
            if end == start:
                self.fail("expected digits after 'C'")
            self.pos = end
            order = int(text[start:end])
            if order < 1:
                self.fail(f"invalid cyclic order {order}")
            return make_cyclic(order)
        self.fail(f"unexpected character {text[self.pos]!r}")


def parse_spec(spec: str) -> FiniteSemigroup:
    """Parse an algebra spec string.

    Grammar: ``C<n>`` | ``S3`` | ``<spec>x<spec>`` (direct product, left
    associative) | ``<spec>e`` (adjoin external unit) | ``file:<path>``
    (JSON Cayley table; consumes the rest of the string).
    """
    if spec.startswith("file:"):
        return load_semigroup(spec[len("file:"):])
    return _SpecParser(spec).parse()


def algebraic_center(s: FiniteSemigroup) -> int:
    """Mask of the elements commuting with every element."""
    t = s.table
    rng = range(s.n)
    return mask_of(x for x in rng if all(t[x][y] == t[y][x] for y in rng))


def translate(x: int, subset: int, s: FiniteSemigroup) -> int:
    """The image {x*a : a in subset}."""
    check_mask(subset, s.n)
    row = s.table[x]
    return mask_of(row[a] for a in iter_elements(subset))


def preimage_translate(x: int, subset: int, s: FiniteSemigroup) -> int:
    """The preimage {z : x*z in subset} of a subset under left translation."""
    check_mask(subset, s.n)
    row = s.table[x]
    return mask_of(z for z in range(s.n) if subset >> row[z] & 1)
