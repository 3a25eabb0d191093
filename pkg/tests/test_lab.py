import json

import pytest

from sfield import ConstructionError, PrimeField, SElement, WitnessNotFound
from sfield.lab import (
    FAIL,
    PASS,
    WITNESSED,
    FiniteInstance,
    characteristic_index,
    check_division_theorems,
    check_negative_theorems,
    check_regularity_and_bases,
    check_s_associative,
    check_s_structure,
    check_scalar_field_iso,
    check_unity_and_inverses,
    check_wheel_distributive,
    run_checks,
    run_full_suite,
)

from conftest import oracle_add, oracle_inverse, oracle_mul, oracle_pairs


@pytest.fixture(scope="module")
def gf2():
    return FiniteInstance(2)


@pytest.fixture(scope="module")
def gf3():
    return FiniteInstance(3)


@pytest.fixture(scope="module")
def gf5():
    return FiniteInstance(5)


def pairs(check):
    return [(e.x.value, e.y.value) for e in check.witness]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_tables_match_oracle(p):
    inst = FiniteInstance(p)
    elems = oracle_pairs(p)
    assert [(e.x.value, e.y.value) for e in inst.elements] == elems
    for i, s in enumerate(elems):
        for j, t in enumerate(elems):
            assert elems[inst.mul(i, j)] == oracle_mul(s, t, p)
            assert elems[inst.add(i, j)] == oracle_add(s, t, p)


def test_scalars_and_classes(gf3):
    assert [gf3.elem(i) for i in gf3.scalars] == [SElement.of(gf3.ring, x, 0) for x in range(3)]
    assert gf3.scalars == gf3.embedded
    classes = gf3.classes()
    assert sorted(len(v) for v in classes.values()) == [3, 3, 3]
    assert characteristic_index(gf3) == frozenset(gf3.ring.elements())


def test_s_structure_counts(gf2, gf3, gf5):
    r2 = check_s_structure(gf2)
    assert r2["s_structure.add_commutative"].cases == 16
    assert r2["s_structure.add_associative"].cases == 64
    assert r2.passed
    r3 = check_s_structure(gf3)
    assert r3.passed
    c = r3["s_structure.zero_not_absorbing"]
    assert c.verdict == WITNESSED and pairs(c) == [(0, 1)]
    assert oracle_mul((0, 0), (0, 1), 3) == (1, 0)
    assert check_s_structure(gf5)["s_structure.add_commutative"].cases == 625


@pytest.mark.parametrize("p,count", [(2, 64), (3, 729), (5, 15625)])
def test_wheel_counts(p, count):
    rep = check_wheel_distributive(FiniteInstance(p))
    assert rep.passed
    assert rep["wheel.distributive"].cases == count == (p * p) ** 3
    assert rep["wheel.remark_form"].cases == count


@pytest.mark.parametrize("p,count", [(2, 16), (3, 81), (5, 625)])
def test_s_assoc_counts(p, count):
    rep = check_s_associative(FiniteInstance(p))
    assert rep.passed
    assert rep["s_assoc.identity"].cases == count == p * p * p * p


def test_negative_witnesses_gf3(gf3):
    rep = check_negative_theorems(gf3)
    assert rep.passed
    right = rep["negative.right_distributivity"]
    assert right.verdict == WITNESSED and pairs(right) == [(0, 1)]
    # (0+0)*s = (1,0) but 0*s + 0*s = (2,0)
    assert oracle_mul((0, 0), (0, 1), 3) == (1, 0)
    assert oracle_add((1, 0), (1, 0), 3) == (2, 0)
    assoc = rep["negative.associativity"]
    assert assoc.verdict == WITNESSED
    assert pairs(assoc) == [(0, 1), (0, 0), (0, 0)]
    assert oracle_mul(oracle_mul((0, 1), (0, 0), 3), (0, 0), 3) == (0, 0)
    assert oracle_mul((0, 1), oracle_mul((0, 0), (0, 0), 3), 3) == (1, 0)
    assert rep["negative.zero_ne_one"].verdict == PASS


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_negative_witnesses_every_field(p):
    rep = check_negative_theorems(FiniteInstance(p))
    for name in ("negative.right_distributivity", "negative.left_distributivity", "negative.associativity"):
        assert rep[name].verdict == WITNESSED
        assert rep[name].witness


def _componentwise(s, t):
    return SElement(s.x * t.x, s.y * t.y)


def test_missing_witness_raises_and_fails_suite():
    # an ordinary ring product: 0 absorbs and nothing is witnessed
    inst = FiniteInstance(3, mul=_componentwise)
    with pytest.raises(WitnessNotFound) as info:
        check_negative_theorems(inst)
    assert info.value.report is not None
    assert info.value.report["negative.associativity"].verdict == FAIL
    report = run_checks(inst)
    assert not report.passed
    assert "negative.right_distributivity" in [c.name for c in report.failures()]


def test_non_closed_operation_rejected():
    F = PrimeField(3)
    with pytest.raises(ConstructionError):
        FiniteInstance(3, mul=lambda s, t: SElement.of(PrimeField(5), 0, 0))
    with pytest.raises(ConstructionError):
        FiniteInstance(3, add=lambda s, t: (s, t))
    assert FiniteInstance(3).ring == F


def test_regularity_and_bases(gf2, gf3, gf5):
    r3 = check_regularity_and_bases(gf3)
    assert r3.passed
    assert r3["bases.shift_condition"].cases == 9
    assert check_regularity_and_bases(gf5)["regular.index_is_scalar"].ok
    assert check_regularity_and_bases(gf2).passed
    # q0(0) is the zero element
    zero_class = gf2.classes()[gf2.zero]
    assert gf2.zero in zero_class


def test_unity_and_inverses(gf3, gf5):
    r3 = check_unity_and_inverses(gf3)
    assert r3.passed
    assert r3["unity.identity"].cases == 9
    assert r3["unity.unique"].cases == 9
    r5 = check_unity_and_inverses(gf5)
    assert r5.passed
    # 1^-1=1, 2^-1=3, 3^-1=2, 4^-1=4 by brute scan
    assert [oracle_inverse(a, 5) for a in range(1, 5)] == [[1], [3], [2], [4]]
    F = PrimeField(5)
    assert [F.scalar(a).inverse().value for a in range(1, 5)] == [1, 3, 2, 4]


def test_scalar_field_iso(gf2, gf3, gf5):
    r3 = check_scalar_field_iso(gf3)
    assert r3.passed
    assert r3["iso.additive"].cases == 9
    assert r3["iso.multiplicative"].cases == 9
    assert check_scalar_field_iso(gf5)["iso.bijective"].cases == 5
    assert check_scalar_field_iso(gf2).passed


def test_division_theorems(gf2, gf3):
    r3 = check_division_theorems(gf3)
    assert r3.passed
    assert r3["division.formula_vs_oracle"].cases == 18
    r2 = check_division_theorems(gf2)
    assert r2["zero.zero_over_zero_indeterminate"].verdict == PASS


@pytest.mark.parametrize("p", [2, 3, 5])
def test_full_suite_passes(p):
    rep = run_full_suite(p)
    assert rep.passed, rep.render_table()
    assert rep.modulus == p
    for c in rep.checks:
        # GF(2) has one nonzero scalar: no distinct pairs, and 1 + 1 = 0
        vacuous = p == 2 and c.name in ("zero.distinct_quotients", "zero.additivity")
        assert c.cases > 0 or vacuous
        if c.verdict == WITNESSED:
            assert c.witness


@pytest.mark.parametrize("p", [4, 1, 0, 17, 2.0, True, "3"])
def test_bad_suite_moduli(p):
    with pytest.raises(ConstructionError):
        run_full_suite(p)


def test_deterministic_reports():
    a, b = run_full_suite(3), run_full_suite(3)
    assert a.to_json() == b.to_json()
    assert a.render_table() == b.render_table()


def test_json_records():
    rep = run_full_suite(2)
    doc = json.loads(rep.to_json())
    assert doc["modulus"] == 2 and doc["passed"] is True
    names = [r["name"] for r in doc["checks"]]
    assert len(names) == len(set(names)) == len(rep.checks)
    assoc = next(r for r in doc["checks"] if r["name"] == "negative.associativity")
    assert assoc["verdict"] == "witnessed"
    assert assoc["witness"] == [["0", "1"], ["0", "0"], ["0", "0"]]


def test_table_layout():
    table = run_full_suite(3).render_table().splitlines()
    assert table[0] == "axiom suite over GF(3)"
    assert table[1].split() == ["check", "verdict", "cases", "witness"]
    assert table[-1] == "74 checks, 0 failed"
