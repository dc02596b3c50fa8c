import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superext.errors import EmptyFamilyError, NotMonotoneError, SizeGuardError
from superext.families import (
    MaximalLinkedSystem,
    SetFamily,
    enumerate_inclusion_hyperspaces,
    enumerate_mls,
    family_from_json,
    family_to_json,
    format_family,
    is_linked,
    is_mls,
    membership_bitmap,
    minimal_antichain,
    parse_family_line,
    random_inclusion_hyperspace,
    transversal,
)
from superext.oracles import (
    antichain_families,
    brute_force_mls,
    count_linked_antichains,
    linked_antichain_mls,
    self_dual_monotone_mls,
)

DELTA3 = MaximalLinkedSystem(3, (0b011, 0b101, 0b110))


@st.composite
def families(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    masks = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=6))
    return SetFamily.from_sets(n, masks)


def brute_transversal(family: SetFamily) -> SetFamily:
    """Reference route: scan all nonempty subsets, keep those meeting
    every member, canonicalise."""
    meets_all = [
        a
        for a in range(1, 1 << family.n)
        if all(a & m for m in family.min_sets)
    ]
    return SetFamily.from_sets(family.n, meets_all)


def test_member_examples():
    principal0 = SetFamily(3, (0b001,))
    assert principal0.member(0b101)
    assert not DELTA3.member(0b010)
    assert DELTA3.member(0b111)


def test_from_sets_canonicalises():
    fam = SetFamily.from_sets(3, [0b111, 0b011, 0b011, 0b101])
    assert fam.min_sets == (0b011, 0b101)


def test_strict_constructor_rejects_bad_input():
    with pytest.raises(ValueError):
        SetFamily(3, (0,))
    with pytest.raises(ValueError):
        SetFamily(3, (0b1000,))
    with pytest.raises(ValueError):
        SetFamily(3, (0b011, 0b111))  # not an antichain
    with pytest.raises(ValueError):
        SetFamily(3, (0b011, 0b001))  # wrong order, also not antichain
    with pytest.raises(ValueError):
        SetFamily(3, (0b101, 0b011))  # not canonical order


def test_families_hash_and_compare_across_subclass():
    plain = SetFamily(3, (0b001,))
    system = MaximalLinkedSystem(3, (0b001,))
    assert plain == system
    assert hash(plain) == hash(system)
    assert len({plain, system}) == 1


def test_transversal_of_principal():
    fam = SetFamily(3, (0b001,))
    assert transversal(fam) == fam


def test_transversal_of_single_pair():
    fam = SetFamily(3, (0b011,))
    assert transversal(fam) == brute_transversal(fam) == SetFamily(3, (0b001, 0b010))


def test_transversal_of_two_of_three():
    assert transversal(DELTA3) == brute_transversal(DELTA3) == DELTA3


def test_transversal_of_empty_family_is_undefined():
    with pytest.raises(EmptyFamilyError):
        transversal(SetFamily(3, ()))


@given(families())
@settings(max_examples=300)
def test_transversal_matches_brute_force(fam):
    assert transversal(fam) == brute_transversal(fam)


def test_is_linked_examples():
    assert not is_linked(SetFamily(2, (0b01, 0b10)))
    assert is_linked(DELTA3)
    assert is_linked(SetFamily(3, (0b001,)))
    assert is_linked(SetFamily(3, ()))  # vacuously


def test_is_mls_examples():
    assert is_mls(SetFamily(3, (0b001,)))
    assert not is_mls(SetFamily(3, (0b011,)))
    assert is_mls(DELTA3)
    assert not is_mls(SetFamily(3, ()))


def test_mls_constructor_rejects_non_mls():
    with pytest.raises(ValueError):
        MaximalLinkedSystem(3, (0b011,))
    with pytest.raises(ValueError):
        MaximalLinkedSystem(3, ())


def test_minimal_antichain_simple_oracles():
    contains0 = minimal_antichain(lambda m: bool(m & 1), 3)
    assert contains0.min_sets == (0b001,)
    two_or_more = minimal_antichain(lambda m: m.bit_count() >= 2, 3)
    assert two_or_more == DELTA3
    round_trip = minimal_antichain(DELTA3.member, 3)
    assert round_trip == DELTA3


def test_minimal_antichain_detects_non_monotone():
    with pytest.raises(NotMonotoneError) as err:
        minimal_antichain(lambda m: m.bit_count() == 1, 3)
    small, big = err.value.witness
    assert small & ~big == 0
    with pytest.raises(NotMonotoneError):
        minimal_antichain(lambda m: True, 3)  # accepts the empty set


def test_enumerate_small_counts():
    assert len(enumerate_mls(1)) == 1
    assert len(enumerate_mls(2)) == 2
    three = enumerate_mls(3)
    assert len(three) == 4
    principals = [MaximalLinkedSystem(3, (1 << x,)) for x in range(3)]
    assert list(three) == principals + [DELTA3]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_matches_brute_force_oracles(n):
    enumerated = tuple(enumerate_mls(n))
    assert enumerated == brute_force_mls(n)
    assert enumerated == self_dual_monotone_mls(n)


def test_enumeration_matches_linked_antichain_oracle_at_five():
    assert tuple(enumerate_mls(5)) == linked_antichain_mls(5)


def test_enumeration_matches_one_point_reduction_counts():
    for n in range(1, 7):
        assert len(enumerate_mls(n)) == count_linked_antichains(n - 1)


@pytest.mark.parametrize("n", [0, 8, -1])
def test_enumeration_guard(n):
    with pytest.raises(SizeGuardError):
        enumerate_mls(n)


def test_every_enumerated_system_is_mls():
    for n in range(1, 6):
        for fam in enumerate_mls(n):
            assert is_mls(fam)
            assert is_linked(fam)
            assert fam.min_sets  # finite support witness is always present


def test_maximality_missing_sets_have_disjoint_witnesses():
    for n in range(1, 6):
        for fam in enumerate_mls(n):
            for c in range(1, 1 << n):
                if not fam.member(c):
                    assert any(m & c == 0 for m in fam.min_sets)


def test_hyperspace_enumeration_small():
    assert enumerate_inclusion_hyperspaces(1) == (SetFamily(1, (0b1,)),)
    two = enumerate_inclusion_hyperspaces(2)
    assert len(two) == 4
    assert SetFamily(2, (0b01, 0b10)) in two
    assert SetFamily(2, (0b11,)) in two


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hyperspace_enumeration_matches_antichain_oracle(n):
    assert enumerate_inclusion_hyperspaces(n) == antichain_families(n)


def test_hyperspace_guard():
    with pytest.raises(SizeGuardError):
        enumerate_inclusion_hyperspaces(5)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_involution_exhaustive(n):
    for fam in enumerate_inclusion_hyperspaces(n):
        assert transversal(transversal(fam)) == fam


@given(families())
@settings(max_examples=300)
def test_involution_property(fam):
    assert transversal(transversal(fam)) == fam


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_mls_are_exactly_transversal_fixed_points(n):
    fixed = tuple(
        f for f in enumerate_inclusion_hyperspaces(n) if transversal(f) == f
    )
    assert fixed == tuple(enumerate_mls(n))


def test_membership_bitmap_agrees_with_member():
    for fam in enumerate_inclusion_hyperspaces(3):
        bits = membership_bitmap(fam)
        for c in range(8):
            assert bool(bits >> c & 1) == fam.member(c)


def test_random_family_generator_is_seeded():
    a = [random_inclusion_hyperspace(5, random.Random(7)) for _ in range(5)]
    b = [random_inclusion_hyperspace(5, random.Random(7)) for _ in range(5)]
    assert a == b


def test_csv_line_round_trip():
    for fam in enumerate_mls(4):
        assert parse_family_line(format_family(fam), 4) == fam


def test_json_round_trip():
    for fam in enumerate_inclusion_hyperspaces(3):
        assert family_from_json(family_to_json(fam)) == fam
    mls = family_from_json(family_to_json(DELTA3), expect_mls=True)
    assert isinstance(mls, MaximalLinkedSystem)
