"""Named verification suites over the finite claims.

Each suite re-derives one family of facts from scratch and reports one
line per claim. Output is deterministic for a fixed seed: no timings, no
environment data, claims sorted by name.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import FiniteSemigroup, parse_spec
from .analysis import cancelable, center_of_table, check_two_sided_ideal, is_commutative, isomorphic
from .certificates import check_pointwise_commutation, search_central_nonprincipal
from .extension import DEFAULT_SEED, build_superextension, product, product_via_unions
from .families import (
    enumerate_inclusion_hyperspaces,
    enumerate_mls,
    random_inclusion_hyperspace,
    transversal,
)
from .oracles import (
    brute_force_mls,
    count_linked_antichains,
    linked_antichain_mls,
    self_dual_monotone_mls,
)

SUITE_NAMES = (
    "counts",
    "ideal",
    "cancel",
    "center",
    "iso",
    "commute",
    "involution",
    "eq1eq2",
)

_GROUPS_2_TO_5 = ("C2", "C3", "C4", "C2xC2", "C5")
_ABELIAN_UP_TO_5 = ("C1", "C2", "C3", "C4", "C2xC2", "C5")


@dataclass(frozen=True)
class ClaimResult:
    name: str
    passed: bool
    detail: str

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"CLAIM {self.name}: {status} ({self.detail})"


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    seed: int
    claims: tuple[ClaimResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def render_text(self) -> str:
        lines = [f"SUITE {self.suite} seed={self.seed}"]
        lines.extend(c.render() for c in self.claims)
        good = sum(c.passed for c in self.claims)
        status = "PASS" if self.passed else "FAIL"
        lines.append(f"RESULT: {status} ({good}/{len(self.claims)} claims)")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "claims": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.claims
            ],
        }


def _suite_counts(seed: int) -> list[ClaimResult]:
    claims = []
    counts = [len(enumerate_mls(n)) for n in range(1, 7)]
    reduced = [count_linked_antichains(n - 1) for n in range(1, 7)]
    claims.append(ClaimResult(
        "counts.one-point-reduction",
        counts == reduced,
        f"enumerated {counts}, independent reduction gives {reduced}",
    ))
    brute_ok = all(
        tuple(enumerate_mls(n)) == brute_force_mls(n) for n in range(1, 5)
    )
    claims.append(ClaimResult(
        "counts.brute-force",
        brute_ok,
        "n<=4 matches the all-families scan" if brute_ok else "mismatch with the all-families scan",
    ))
    dual_ok = all(
        tuple(enumerate_mls(n)) == self_dual_monotone_mls(n) for n in range(1, 5)
    )
    claims.append(ClaimResult(
        "counts.self-dual",
        dual_ok,
        "n<=4 matches the self-dual scan" if dual_ok else "mismatch with the self-dual scan",
    ))
    chain_ok = tuple(enumerate_mls(5)) == linked_antichain_mls(5)
    claims.append(ClaimResult(
        "counts.linked-antichain",
        chain_ok,
        "n=5 matches the linked-antichain filter" if chain_ok else "mismatch at n=5",
    ))
    return claims


def _suite_ideal(seed: int) -> list[ClaimResult]:
    claims = []
    for spec in _GROUPS_2_TO_5:
        ext = build_superextension(parse_spec(spec))
        outside = ext.nonprincipal_indices()
        if not outside:
            claims.append(ClaimResult(
                f"ideal.{spec}", True, "no non-principal elements; vacuously an ideal",
            ))
            continue
        check = check_two_sided_ideal(ext, outside)
        detail = (
            f"{len(outside)} non-principal elements absorb both sides"
            if check.holds
            else f"witness pair {check.witness}"
        )
        claims.append(ClaimResult(f"ideal.{spec}", check.holds, detail))
    return claims


def _suite_cancel(seed: int) -> list[ClaimResult]:
    claims = []
    for spec in _GROUPS_2_TO_5:
        ext = build_superextension(parse_spec(spec))
        left, right = cancelable(ext)
        expected = tuple(sorted(ext.principal_index))
        ok = left == expected and right == expected
        claims.append(ClaimResult(
            f"cancel.{spec}",
            ok,
            f"left {left}, right {right}, principal {expected}",
        ))
    ext4 = build_superextension(parse_spec("C4"))
    left4, right4 = cancelable(ext4)
    orbit_ok = True
    for j in ext4.nonprincipal_indices():
        orbit = {int(ext4.table[p, j]) for p in ext4.principal_index}
        if len(orbit) != 4 or j in left4 or j in right4:
            orbit_ok = False
            break
    claims.append(ClaimResult(
        "cancel.orbit-without-cancelability",
        orbit_ok,
        "every non-principal element of the order-4 table has a 4-element "
        "orbit yet cancels on neither side",
    ))
    return claims


def _suite_center(seed: int) -> list[ClaimResult]:
    claims = []
    for spec, expect_found in (
        ("C2", False), ("C3", True), ("C4", True), ("C2xC2", True), ("C5", True),
    ):
        ext = build_superextension(parse_spec(spec))
        found = search_central_nonprincipal(ext.group, table=ext)
        ok = (found is not None) == expect_found
        if found is not None and ok:
            idx = ext.elements.index(found)
            row_ok = all(
                int(ext.table[idx, j]) == int(ext.table[j, idx])
                for j in range(ext.size)
            )
            ok = row_ok
            detail = f"central non-principal element found: {found!r}"
        else:
            detail = (
                "no central non-principal element, as required"
                if not expect_found
                else "expected a central non-principal element but found none"
            )
        claims.append(ClaimResult(f"center.{spec}", ok, detail))
    return claims


def _suite_iso(seed: int) -> list[ClaimResult]:
    ext4 = build_superextension(parse_spec("C4"))
    target = parse_spec("C4xC2e")
    bijection = isomorphic(ext4, target)
    return [ClaimResult(
        "iso.order4-superextension",
        bijection is not None,
        f"bijection {list(bijection)}" if bijection is not None else "no bijection found",
    )]


def _suite_commute(seed: int) -> list[ClaimResult]:
    claims = []
    for spec, expect in (
        ("C1", True), ("C2", True), ("C3", True), ("C4", True),
        ("C2xC2", True), ("C5", False),
    ):
        ext = build_superextension(parse_spec(spec))
        ok = is_commutative(ext) == expect
        claims.append(ClaimResult(
            f"commute.boundary.{spec}",
            ok,
            f"table of size {ext.size} is {'commutative' if expect else 'non-commutative'}",
        ))
    for spec in _ABELIAN_UP_TO_5:
        group = parse_spec(spec)
        full = (1 << group.n) - 1
        bad = None
        for system in enumerate_mls(group.n):
            for point in range(group.n):
                verdict = check_pointwise_commutation(full, full, system, point, group)
                if not verdict.equal:
                    bad = (system, point)
                    break
            if bad:
                break
        claims.append(ClaimResult(
            f"commute.pointwise.{spec}",
            bad is None,
            "every system commutes with every principal system"
            if bad is None
            else f"failure at {bad[0]!r} with point {bad[1]}",
        ))
    return claims


def _suite_involution(seed: int) -> list[ClaimResult]:
    claims = []
    exhaustive_ok = all(
        transversal(transversal(f)) == f
        for n in range(1, 5)
        for f in enumerate_inclusion_hyperspaces(n)
    )
    claims.append(ClaimResult(
        "involution.exhaustive",
        exhaustive_ok,
        "double transversal is the identity on every family, n<=4",
    ))
    for n in (5, 6, 7):
        rng = random.Random(seed * 1009 + n)
        ok = True
        for _ in range(10_000):
            fam = random_inclusion_hyperspace(n, rng)
            if transversal(transversal(fam)) != fam:
                ok = False
                break
        claims.append(ClaimResult(
            f"involution.random-n{n}",
            ok,
            "10000 random families",
        ))
    return claims


def _suite_eq1eq2(seed: int) -> list[ClaimResult]:
    claims = []
    for spec in ("C3", "C4"):
        group = parse_spec(spec)
        systems = enumerate_mls(group.n)
        ok = all(
            product(a, b, group) == product_via_unions(a, b, group)
            for a in systems
            for b in systems
        )
        claims.append(ClaimResult(
            f"eq1eq2.exhaustive.{spec}",
            ok,
            f"all {len(systems) ** 2} pairs agree",
        ))
    group = parse_spec("C5")
    systems = enumerate_mls(5)
    rng = random.Random(seed * 1009 + 8)
    ok = True
    for _ in range(1000):
        a = systems[rng.randrange(len(systems))]
        b = systems[rng.randrange(len(systems))]
        if product(a, b, group) != product_via_unions(a, b, group):
            ok = False
            break
    claims.append(ClaimResult(
        "eq1eq2.random.C5",
        ok,
        "1000 seeded random pairs agree",
    ))
    return claims


_SUITES = {
    "counts": _suite_counts,
    "ideal": _suite_ideal,
    "cancel": _suite_cancel,
    "center": _suite_center,
    "iso": _suite_iso,
    "commute": _suite_commute,
    "involution": _suite_involution,
    "eq1eq2": _suite_eq1eq2,
}


def verify_suite(name: str, *, seed: int = DEFAULT_SEED) -> SuiteReport:
    """Run one named suite (or ``all``) and report claim by claim."""
    if name == "all":
        claims: list[ClaimResult] = []
        for suite in SUITE_NAMES:
            claims.extend(_SUITES[suite](seed))
        claims.sort(key=lambda c: c.name)
        return SuiteReport("all", seed, tuple(claims))
    if name not in _SUITES:
        known = ", ".join(SUITE_NAMES + ("all",))
        raise ValueError(f"unknown suite {name!r}; expected one of: {known}")
    return SuiteReport(name, seed, tuple(_SUITES[name](seed)))
