import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from ubiquity.errors import PreconditionError, SizeGuardError, ValidationError
from ubiquity.pseudotop import (
    PseudoTopology,
    count_spaces,
    enumerate_spaces,
    interior,
    interior_law_suite,
    openness,
    validate_space,
)

import oracles

FROZEN = json.loads((Path(__file__).parent / "data" / "oracle_values.json").read_text())

E2 = ["0", "1"]


def test_valid_spaces():
    validate_space(E2, [["0"], ["0", "1"]])
    validate_space(E2, [["0", "1"]])


def test_clause_i_violation():
    with pytest.raises(ValidationError) as exc:
        validate_space(E2, [["0"], ["1"], ["0", "1"]])
    assert exc.value.clause.startswith("(i) ")
    assert sorted(exc.value.witness) == [["0"], ["1"]]


def test_other_clauses():
    with pytest.raises(ValidationError) as exc:
        validate_space(E2, [["0"]])
    assert exc.value.clause.startswith("(iii) ")
    with pytest.raises(ValidationError) as exc:
        validate_space(E2, [[], ["0", "1"]])
    assert exc.value.clause.startswith("(iv) ")
    with pytest.raises(ValidationError) as exc:
        validate_space("0123", [["0"], ["0", "1"], ["0", "2"], ["0", "1", "2", "3"]])
    assert exc.value.clause.startswith("(ii) ")
    assert exc.value.witness == [["0", "1"], ["0", "2"]]
    with pytest.raises(PreconditionError):
        validate_space(E2, [["0", "7"]])


def test_interior_examples():
    X = validate_space(E2, [["0"], ["0", "1"]])
    assert interior(X, ["1"]) == frozenset()
    assert interior(X, ["0"]) == {"0"}
    assert interior(X, E2) == set(E2)
    with pytest.raises(PreconditionError):
        interior(X, ["2"])


def test_openness():
    X = validate_space(E2, [["0"], ["0", "1"]])
    assert openness(X, ["0"]) == (True, False)
    assert openness(X, E2) == (True, False)
    # ∅ passes the inclusion test vacuously
    assert openness(X, []).is_open


def test_two_point_spaces_in_order():
    spaces = enumerate_spaces(2)
    assert [s.open_sets() for s in spaces] == [[["0", "1"]], [["0"], ["0", "1"]], [["1"], ["0", "1"]]]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_counts_match_oracle(n):
    ours = {frozenset(frozenset(int(x) for x in o) for o in s.open_sets()) for s in enumerate_spaces(n)}
    theirs = set(oracles.pseudo_topologies(n))
    assert ours == theirs
    assert count_spaces(n) == FROZEN["spaces"][str(n)]


def test_size_guard():
    with pytest.raises(SizeGuardError):
        enumerate_spaces(5)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_interior_laws(n):
    for s in enumerate_spaces(n):
        assert interior_law_suite(s).passed


@pytest.mark.parametrize("n", [1, 2, 3])
def test_interior_matches_greatest_open(n):
    for s in enumerate_spaces(n):
        omega = [frozenset(o) for o in s.open_sets()]
        for a in oracles.subsets(s.carrier):
            assert interior(s, a) == oracles.greatest_open_inside(omega, a)


def test_json_round_trip():
    for s in enumerate_spaces(3):
        assert PseudoTopology.from_json(json.loads(json.dumps(s.to_json()))) == s


def test_custom_carrier_labels():
    spaces = enumerate_spaces(["x", "y"])
    assert spaces[1].open_sets() == [["x"], ["x", "y"]]


@given(st.integers(0, 144), st.integers(0, 15))
def test_any_two_opens_meet(i, a):
    s = enumerate_spaces(4)[i]
    for o in s.opens:
        for p in s.opens:
            assert o & p
    assert s.interior_mask(a) & ~a == 0
