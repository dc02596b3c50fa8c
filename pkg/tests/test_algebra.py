import json

import pytest

from superext.algebra import (
    FiniteSemigroup,
    adjoin_external_unit,
    algebraic_center,
    direct_product,
    make_cyclic,
    make_symmetric3,
    parse_spec,
    preimage_translate,
    semigroup_from_json,
    semigroup_to_json,
    translate,
)
from superext.errors import SpecParseError, ValidationError
from superext.subsets import mask_of, sorted_elements


def test_cyclic_trivial_group():
    c1 = make_cyclic(1)
    assert c1.table == ((0,),)
    assert c1.identity == 0
    assert c1.is_group


def test_cyclic_arithmetic():
    c4 = make_cyclic(4)
    assert c4.mul(2, 3) == 1
    assert c4.inv(3) == 1


def test_cyclic_center_is_everything():
    c3 = make_cyclic(3)
    assert algebraic_center(c3) == 0b111


def test_cyclic_rejects_zero_order():
    with pytest.raises(ValueError):
        make_cyclic(0)


def test_direct_product_with_trivial_factor():
    c4 = make_cyclic(4)
    assert direct_product(make_cyclic(1), c4).table == c4.table


def test_klein_group_self_inverse():
    klein = direct_product(make_cyclic(2), make_cyclic(2))
    assert klein.is_group
    assert all(klein.mul(x, x) == 0 for x in range(4))


def test_order_twelve_monoid():
    monoid = direct_product(make_cyclic(4), adjoin_external_unit(make_cyclic(2)))
    assert monoid.n == 12
    assert monoid.identity is not None
    assert not monoid.is_group
    assert all(
        monoid.mul(a, b) == monoid.mul(b, a) for a in range(12) for b in range(12)
    )


def test_adjoined_unit_semantics():
    m = adjoin_external_unit(make_cyclic(2))
    e = 2
    assert m.identity == e
    assert not m.is_group
    assert all(m.mul(e, x) == x and m.mul(x, e) == x for x in range(3))
    # old products unchanged
    assert m.mul(1, 1) == 0
    # exhaustive associativity, independently of constructor checks
    for a in range(3):
        for b in range(3):
            for c in range(3):
                assert m.mul(m.mul(a, b), c) == m.mul(a, m.mul(b, c))


def test_adjoined_unit_on_trivial_group():
    m = adjoin_external_unit(make_cyclic(1))
    assert m.n == 2
    assert m.mul(0, 0) == 0  # the old element is idempotent
    assert m.identity == 1


@pytest.mark.parametrize(
    "spec, order",
    [("C4", 4), ("C4xC2e", 12), ("C2xC2", 4), ("S3", 6), ("C2ee", 4), ("C2xC3xC2", 12)],
)
def test_parse_spec_orders(spec, order):
    assert parse_spec(spec).n == order


def test_parse_spec_matches_constructors():
    assert parse_spec("C4").table == make_cyclic(4).table
    built = direct_product(make_cyclic(4), adjoin_external_unit(make_cyclic(2)))
    assert parse_spec("C4xC2e").table == built.table


@pytest.mark.parametrize("bad", ["", "C", "Q5", "C4x", "xC4", "C4)", "C0", "S4"])
def test_parse_spec_rejects_garbage(bad):
    with pytest.raises(SpecParseError) as err:
        parse_spec(bad)
    assert err.value.position >= 0


def test_parse_spec_file_round_trip(tmp_path):
    path = tmp_path / "group.json"
    original = parse_spec("C4xC2e")
    path.write_text(json.dumps(semigroup_to_json(original)))
    loaded = parse_spec(f"file:{path}")
    assert loaded.table == original.table
    assert loaded.identity == original.identity


def test_json_round_trip_is_identical():
    for spec in ("C1", "C5", "S3", "C2e", "C2xC2"):
        s = parse_spec(spec)
        again = semigroup_from_json(semigroup_to_json(s))
        assert again.table == s.table
        assert again.labels == s.labels
        assert again.is_group == s.is_group


def test_file_with_non_associative_table_names_witness(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 2, "table": [[0, 1], [1, 1]]}))
    with pytest.raises(ValidationError) as err:
        parse_spec(f"file:{path}")
    a, b, c = err.value.witness
    s = [[0, 1], [1, 1]]
    assert s[s[a][b]][c] != s[a][s[b][c]]


def test_validation_rejects_bad_tables():
    with pytest.raises(ValidationError):
        FiniteSemigroup(2, ((0, 1),), ("0", "1"), None, False)
    with pytest.raises(ValidationError):
        FiniteSemigroup(2, ((0, 3), (1, 0)), ("0", "1"), None, False)
    with pytest.raises(ValidationError):
        FiniteSemigroup.from_table([[0, 1], [1, 1]])
    with pytest.raises(ValidationError):
        # claimed identity is not a unit
        FiniteSemigroup(2, ((0, 0), (0, 0)), ("0", "1"), 1, False)


def test_symmetric3_is_nonabelian_group():
    s3 = make_symmetric3()
    assert s3.is_group
    assert s3.labels[0] == "id"
    assert any(s3.mul(a, b) != s3.mul(b, a) for a in range(6) for b in range(6))


def test_center_of_symmetric3_by_exhaustion():
    s3 = make_symmetric3()
    expected = mask_of(
        x for x in range(6) if all(s3.mul(x, y) == s3.mul(y, x) for y in range(6))
    )
    assert algebraic_center(s3) == expected == 0b1


def test_center_of_adjoined_unit_monoid():
    assert algebraic_center(adjoin_external_unit(make_cyclic(2))) == 0b111


def test_translate_by_identity():
    c4 = make_cyclic(4)
    for subset in range(16):
        assert translate(0, subset, c4) == subset


def test_preimage_translate_example():
    c4 = make_cyclic(4)
    assert sorted_elements(preimage_translate(1, 0b0011, c4)) == [0, 3]


@pytest.mark.parametrize("spec", ["C3", "C4", "C5", "C2xC2"])
def test_group_translations_are_inverse_bijections(spec):
    group = parse_spec(spec)
    for x in range(group.n):
        for subset in range(1 << group.n):
            there = translate(x, subset, group)
            assert there.bit_count() == subset.bit_count()
            assert translate(x, preimage_translate(x, subset, group), group) == subset
            assert preimage_translate(x, there, group) == subset
