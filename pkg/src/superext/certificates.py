"""Certificate-style verifiers that run on explicitly given systems.

These check concrete witnesses on ground sets far beyond what full
enumeration could reach: a non-centrality certificate names the sets
whose arithmetic forces a system not to commute with a rival built from
a 3-point set, and the verifier re-derives the non-commutation from raw
products instead of trusting the conditions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .algebra import FiniteSemigroup, parse_spec
from .analysis import center_of_table
from .errors import CertificateShapeError, CommutingHypothesisError
from .extension import Superextension, build_superextension, principal, product
from .families import (
    MaximalLinkedSystem,
    family_from_json,
    family_to_json,
    set_key,
    sorted_elements,
)
from .subsets import check_mask, format_subset, iter_elements, mask_of


def two_of_three_system(triple: int, n: int) -> MaximalLinkedSystem:
    """The system of all sets containing at least two points of a 3-set."""
    check_mask(triple, n, "triple")
    points = list(iter_elements(triple))
    if len(points) != 3:
        raise CertificateShapeError(
            f"need exactly 3 points, got {format_subset(triple)}"
        )
    a, b, c = (1 << p for p in points)
    pairs = sorted((a | b, a | c, b | c), key=set_key)
    return MaximalLinkedSystem(n, tuple(pairs))


@dataclass(frozen=True)
class NoncentralityCertificate:
    """Witness data that a system is not central.

    ``system`` is the maximal linked system under test; ``core`` is the
    set every member is concentrated on; ``triple`` is the 3-point set
    building the rival system; ``member`` is the finite member whose
    difference set separates cleanly from the triple's.
    """

    system: MaximalLinkedSystem
    core: int
    triple: int
    member: int

    @property
    def n(self) -> int:
        return self.system.n


@dataclass(frozen=True)
class CertificateVerdict:
    valid: bool
    failed_condition: Optional[str]
    detail: str
    left_product: Optional[MaximalLinkedSystem] = None
    right_product: Optional[MaximalLinkedSystem] = None
    # Informational: would the check also pass with the difference set
    # taken in the opposite order (t*t'^-1 instead of t^-1*t')?
    swapped_difference_ok: Optional[bool] = None

    def to_json(self) -> dict:
        obj: dict = {
            "valid": self.valid,
            "failed_condition": self.failed_condition,
            "detail": self.detail,
        }
        if self.left_product is not None:
            obj["left_product"] = family_to_json(self.left_product)
        if self.right_product is not None:
            obj["right_product"] = family_to_json(self.right_product)
        if self.swapped_difference_ok is not None:
            obj["swapped_difference_ok"] = self.swapped_difference_ok
        return obj


def _difference_set(left: int, right: int, group: FiniteSemigroup, invert_left: bool) -> int:
    """{l*r^-1} or {l^-1*r} over all pairs, as a mask."""
    out = 0
    for l in iter_elements(left):
        for r in iter_elements(right):
            if invert_left:
                out |= 1 << group.table[group.inv(l)][r]
            else:
                out |= 1 << group.table[l][group.inv(r)]
    return out


def check_noncentrality(
    cert: NoncentralityCertificate, group: FiniteSemigroup
) -> CertificateVerdict:
    """Verify a non-centrality certificate over a group.

    Conditions, in order:
      1. triple-size: the rival-building set has exactly 3 points;
      2. core-trace: each minimal member M keeps M & core in the system
         with at least 2 points (monotonicity extends this to all
         members, which is unit-tested against the naive quantifier);
      3. separation: the named member B belongs to the system and
         B*core^-1 meets triple^-1*triple only at the identity.
    When all hold, both products with the rival system are computed from
    scratch and must differ; the verdict carries them as evidence.
    """
    if not group.is_group:
        raise CertificateShapeError("non-centrality certificates need a group")
    if cert.n != group.n:
        raise CertificateShapeError(
            f"certificate on {cert.n} points but group has order {group.n}"
        )
    for mask, what in ((cert.core, "core"), (cert.triple, "triple"), (cert.member, "member")):
        check_mask(mask, group.n, what)

    if cert.triple.bit_count() != 3:
        return CertificateVerdict(
            False, "triple-size",
            f"triple {format_subset(cert.triple)} has {cert.triple.bit_count()} points, need 3",
        )

    for m in cert.system.min_sets:
        trace = m & cert.core
        if trace.bit_count() < 2 or not cert.system.member(trace):
            return CertificateVerdict(
                False, "core-trace",
                f"minimal member {format_subset(m)} traces to {format_subset(trace)} "
                "which is too small or not a member",
            )

    if not cert.system.member(cert.member):
        return CertificateVerdict(
            False, "separation",
            f"named member {format_subset(cert.member)} is not in the system",
        )
    identity_bit = 1 << group.identity
    bs_inv = _difference_set(cert.member, cert.core, group, invert_left=False)
    t_inv_t = _difference_set(cert.triple, cert.triple, group, invert_left=True)
    t_t_inv = _difference_set(cert.triple, cert.triple, group, invert_left=False)
    swapped_ok = bs_inv & t_t_inv & ~identity_bit == 0
    if bs_inv & t_inv_t & ~identity_bit:
        overlap = bs_inv & t_inv_t & ~identity_bit
        return CertificateVerdict(
            False, "separation",
            f"difference sets overlap beyond the identity: {format_subset(overlap)}",
            swapped_difference_ok=swapped_ok,
        )

    rival = two_of_three_system(cert.triple, group.n)
    left = product(cert.system, rival, group)
    right = product(rival, cert.system, group)
    if left == right:
        return CertificateVerdict(
            False, "products-differ",
            "conditions hold but the two products agree; this refutes the certificate",
            left, right, swapped_ok,
        )
    return CertificateVerdict(
        True, None,
        "all conditions hold and the products differ",
        left, right, swapped_ok,
    )


def certificate_to_json(cert: NoncentralityCertificate, group_spec: str) -> dict:
    return {
        "group": group_spec,
        "A": family_to_json(cert.system),
        "S": sorted_elements(cert.core),
        "T": sorted_elements(cert.triple),
        "B": sorted_elements(cert.member),
    }


def certificate_from_json(obj: dict) -> tuple[NoncentralityCertificate, FiniteSemigroup]:
    for key in ("group", "A", "S", "T", "B"):
        if key not in obj:
            raise CertificateShapeError(f"certificate JSON is missing key {key!r}")
    group = parse_spec(obj["group"])
    system = family_from_json(obj["A"], expect_mls=True)
    cert = NoncentralityCertificate(
        system=system,
        core=mask_of(map(int, obj["S"])),
        triple=mask_of(map(int, obj["T"])),
        member=mask_of(map(int, obj["B"])),
    )
    return cert, group


def load_certificate(path: str | Path) -> tuple[NoncentralityCertificate, FiniteSemigroup]:
    with open(path, encoding="utf-8") as fh:
        return certificate_from_json(json.load(fh))


@dataclass(frozen=True)
class CommutationVerdict:
    equal: bool
    left_product: MaximalLinkedSystem
    right_product: MaximalLinkedSystem

    def to_json(self) -> dict:
        return {
            "equal": self.equal,
            "left_product": family_to_json(self.left_product),
            "right_product": family_to_json(self.right_product),
        }


def check_pointwise_commutation(
    support: int,
    commuters: int,
    system: MaximalLinkedSystem,
    point: int,
    group: FiniteSemigroup,
) -> CommutationVerdict:
    """Check that a system supported on one set commutes with a principal
    system at a point of another, given elementwise commuting sets.

    The commuting hypothesis y*z = z*y for all y in ``support``, z in
    ``commuters`` is verified first and its failure is an error carrying
    the witness pair, never a silent false verdict.
    """
    check_mask(support, group.n, "support")
    check_mask(commuters, group.n, "commuter set")
    if any(m & ~support for m in system.min_sets):
        raise CertificateShapeError("the system has a minimal set outside its support")
    if not commuters >> point & 1:
        raise CertificateShapeError(f"point {point} is not in the commuter set")
    for y in iter_elements(support):
        for z in iter_elements(commuters):
            if group.table[y][z] != group.table[z][y]:
                raise CommutingHypothesisError(
                    f"elements {y} and {z} do not commute", witness=(y, z)
                )
    left = product(system, principal(point, group.n), group)
    right = product(principal(point, group.n), system, group)
    return CommutationVerdict(left == right, left, right)


def search_central_nonprincipal(
    group: FiniteSemigroup, table: Superextension | None = None
) -> Optional[MaximalLinkedSystem]:
    """Some central element that is not principal, if one exists."""
    ext = table if table is not None else build_superextension(group)
    principal_set = set(ext.principal_index)
    for idx in center_of_table(ext):
        if idx not in principal_set:
            return ext.elements[idx]
    return None
