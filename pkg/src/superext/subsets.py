"""Bitmask helpers for subsets of the ground set {0, ..., n-1}.

Subsets are plain ints: bit i is set iff element i is in the subset.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        if e < 0:
            raise ValueError(f"negative element {e}")
        m |= 1 << e
    return m


def elements_of(mask: int) -> list[int]:
    return list(iter_elements(mask))


def sorted_elements(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def iter_elements(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def format_subset(mask: int) -> str:
    """Render a mask as ``{0,4,8}``."""
    return "{" + ",".join(str(e) for e in iter_elements(mask)) + "}"


def parse_subset(text: str) -> int:
    """Parse ``{0,4,8}`` or bare ``0,4,8`` into a mask."""
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return 0
    try:
        return mask_of(int(part) for part in body.split(","))
    except ValueError as exc:
        raise ValueError(f"bad subset syntax {text!r}") from exc


def check_mask(mask: int, n: int, what: str = "subset") -> None:
    if mask < 0 or mask >> n:
        raise ValueError(f"{what} {format_subset(mask)} not within ground set of size {n}")
