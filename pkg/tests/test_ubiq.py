import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from ubiquity.boolalg import powerset_algebra, standard_algebra
from ubiquity.errors import PreconditionError, SizeGuardError, ValidationError
from ubiquity.monadic import (
    Ideal,
    MonadicAlgebra,
    enumerate_quantifiers,
    identity_quantifier,
    monadic_ideals,
    simple_quantifier,
)
from ubiquity.pseudotop import enumerate_spaces, validate_space
from ubiquity.ubiq import (
    UbiquityAlgebra,
    all_ubiquity_algebras,
    enumerate_upsilons,
    identity_upsilon,
    is_ubiquity_ideal,
    is_ubiquity_semisimple,
    is_ubiquity_simple,
    quotient_audit,
    quotient_descent_check,
    topological_extras,
    ubiq_law_suite,
    ubiq_simplicity_suite,
    ubiquity_adequacy_report,
    ubiquity_ideals,
    ubiquity_quotient,
    upsilon_from_space,
    upsilon_violation,
    validate_upsilon,
)

import oracles

FROZEN = json.loads((Path(__file__).parent / "data" / "oracle_values.json").read_text())

B2 = powerset_algebra("ab")
S2 = MonadicAlgebra.of(simple_quantifier(B2))
I2 = MonadicAlgebra.of(identity_quantifier(B2))


def el(s):
    return B2.element(s)


def test_clause_i_example():
    table = {el(""): el(""), el("a"): el("a"), el("b"): el("a"), el("ab"): el("ab")}
    with pytest.raises(ValidationError) as exc:
        validate_upsilon(S2, table)
    assert exc.value.clause == "(i)"
    assert exc.value.witness == {"p": ["a"], "q": ["b"]}


def test_clause_ii_and_iii():
    # Υ{a} = 1 but Υ1 = {a}: monotonicity fails before the bounds are looked at
    assert upsilon_violation(S2, [0, 3, 0, 1]).law == "(ii)"
    # Υ1 = 0 violates ∀1 = 1 ≤ Υ1
    assert upsilon_violation(S2, [0, 0, 0, 0]).law == "(iii)"


def test_interior_of_two_point_space():
    X = validate_space(["0", "1"], [["0"], ["0", "1"]])
    u = upsilon_from_space(X)
    alg = u.algebra
    assert u(alg.element(["1"])) == alg.zero
    assert u(alg.element(["0"])) == alg.element(["0"])
    assert u(alg.zero) == alg.zero and u(alg.one) == alg.one


def test_simple_p2_count_is_nine():
    ups = enumerate_upsilons(S2)
    assert len(ups) == 9 == FROZEN["upsilons_simple"]["2"]
    for u in ups:
        assert u.ups(0) == 0 and u.ups(3) == 3
        assert u.ups(1) & u.ups(2) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("kind", ["simple", "identity"])
def test_counts_against_frozen_oracle(n, kind):
    alg = standard_algebra(n)
    q = simple_quantifier(alg) if kind == "simple" else identity_quantifier(alg)
    assert len(enumerate_upsilons(MonadicAlgebra.of(q))) == FROZEN[f"upsilons_{kind}"][str(n)]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_all_quantifier_totals(n):
    assert sum(1 for _ in all_ubiquity_algebras(n)) == FROZEN["upsilons_all_quantifiers"][str(n)]


def test_p2_tables_equal_brute_force():
    for ma, ex in ((S2, oracles.simple_exists("ab")), (I2, oracles.identity_exists("ab"))):
        ours = {u.upsilon for u in enumerate_upsilons(ma)}
        idx = {"a": 1, "b": 2}
        to_mask = lambda s: sum(idx[x] for x in s)
        theirs = set()
        for t in oracles.upsilons_brute("ab", ex):
            row = [0] * 4
            for p, v in t.items():
                row[to_mask(p)] = to_mask(v)
            theirs.add(tuple(row))
        assert ours == theirs


def test_identity_quantifier_forces_identity():
    alg = standard_algebra(3)
    ma = MonadicAlgebra.of(identity_quantifier(alg))
    assert enumerate_upsilons(ma) == [identity_upsilon(ma)]


def test_enumeration_guard():
    with pytest.raises(SizeGuardError):
        enumerate_upsilons(MonadicAlgebra.of(simple_quantifier(standard_algebra(4))))


def test_law_suite_everywhere():
    for n in (1, 2, 3):
        for u in all_ubiquity_algebras(n):
            r = ubiq_law_suite(u)
            assert r.passed, r.format()


def test_non_topological_operators_exist():
    # the clauses admit Υ that are neither deflationary nor idempotent
    extras = [topological_extras(u) for u in enumerate_upsilons(S2)]
    assert any(not r["Up <= p"].passed for r in extras)


def test_space_bridge():
    for n in range(1, 5):
        for s in enumerate_spaces(n):
            u = upsilon_from_space(s)
            assert upsilon_violation(u.base, u.upsilon).ok
            assert ubiq_law_suite(u).passed
            assert topological_extras(u).passed


def test_ubiquity_ideal_examples():
    # {0, {a}} is a Boolean ideal, but ∃{a} = 1 under the simple quantifier
    u = enumerate_upsilons(S2)[0]
    assert not is_ubiquity_ideal(u, Ideal(B2, [0, 1]))
    for u in all_ubiquity_algebras(3):
        for i in monadic_ideals(u.base):
            assert is_ubiquity_ideal(u, i)


def test_simple_quantifier_descent():
    for u in enumerate_upsilons(S2):
        proper = [i for i in ubiquity_ideals(u) if i.is_proper]
        assert [i.members for i in proper] == [frozenset({0})]
        v = quotient_descent_check(u, proper[0])
        assert v.descends and v.quotient_valid


def test_descent_preconditions():
    u = identity_upsilon(I2)
    with pytest.raises(PreconditionError):
        quotient_descent_check(u, Ideal(B2, range(4)))
    u = enumerate_upsilons(S2)[0]
    with pytest.raises(PreconditionError):
        quotient_descent_check(u, Ideal(B2, [0, 1]))


def test_quotient_of_identity_algebra():
    u = identity_upsilon(I2)
    q = ubiquity_quotient(u, Ideal(B2, [0, 1]))
    assert q.target.algebra.size == 2
    assert q.target.upsilon == (0, 1)


def test_audit_runs_and_invariant_holds():
    audit = quotient_audit(3)
    assert audit.passed
    c = audit.counts
    assert c["pairs"] == len(audit.records) > 0
    assert all("descends" in r for r in audit.records)
    assert quotient_audit(3).records == audit.records


def test_audit_guard():
    with pytest.raises(SizeGuardError):
        quotient_audit(4)


def test_simplicity_suite():
    for n in (1, 2, 3):
        for u in all_ubiquity_algebras(n):
            assert ubiq_simplicity_suite(u).passed
            assert is_ubiquity_semisimple(u)
    assert not is_ubiquity_simple(identity_upsilon(I2))


def test_adequacy():
    for u in all_ubiquity_algebras(2):
        r = ubiquity_adequacy_report(u)
        assert r.passed
        assert r.info["refuted_by_upsilon_preserving_map"] <= r.info["refuted"]


def test_json_round_trip():
    for u in all_ubiquity_algebras(2):
        assert UbiquityAlgebra.from_json(json.loads(json.dumps(u.to_json()))) == u


@given(st.integers(0, 370), st.integers(0, 7), st.integers(0, 7))
def test_multiplicative(i, p, q):
    us = _p3()
    u = us[i % len(us)]
    t = u.upsilon
    assert t[p & q] == t[p] & t[q]
    assert (t[p] | t[q]) & ~t[p | q] == 0


_cache = []


def _p3():
    if not _cache:
        _cache.extend(all_ubiquity_algebras(3))
    return _cache
