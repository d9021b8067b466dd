"""Acceptance criteria, one test per criterion.

Each test prints a single ``[PASS]`` / ``[FAIL]`` line to the terminal
(even under pytest's capture) and then asserts.  Running this file as a
script prints the same twelve lines.
"""

import json
import subprocess
import sys
import time
from pathlib import Path

import pytest

from ubiquity.boolalg import standard_algebra
from ubiquity.funcalg import check_q_properties
from ubiquity.logic import AXIOMS, CONTROLS, THEOREMS, axiom_suite, check_validity, parse, to_text
from ubiquity.errors import ParseError
from ubiquity.monadic import (
    MonadicAlgebra,
    enumerate_quantifiers,
    enumerate_subalgebras,
    identity_quantifier,
    is_semisimple,
    quantifier_from_subalgebra,
    quantifier_law_suite,
    simple_quantifier,
    verify_semisimplicity_certificate,
)
from ubiquity.pseudotop import count_spaces, enumerate_spaces, interior_law_suite
from ubiquity.ubiq import (
    all_ubiquity_algebras,
    enumerate_upsilons,
    quotient_audit,
    topological_extras,
    ubiq_law_suite,
    ubiquity_ideals,
    upsilon_from_space,
    upsilon_violation,
)

HERE = Path(__file__).parent
sys.path.insert(0, str(HERE))
import oracles  # noqa: E402

DATA = HERE / "data"
FROZEN = json.loads((DATA / "oracle_values.json").read_text())

pytestmark = pytest.mark.acceptance


def _masks(atoms, table):
    idx = {a: i for i, a in enumerate(atoms)}
    m = lambda s: sum(1 << idx[a] for a in s)
    out = [0] * (1 << len(atoms))
    for p, v in table.items():
        out[m(p)] = m(v)
    return tuple(out)


# ---------------------------------------------------------------- criteria
# each returns (passed, one-line detail)


def criterion_1():
    start = time.perf_counter()
    report = axiom_suite(3)
    elapsed = time.perf_counter() - start
    names = [f"{k}: {v}" for k, v in {**AXIOMS, **THEOREMS}.items()]
    ok = (
        report.passed
        and [r.name for r in report.results] == names
        and all(r.note == "valid up to bound 3" and r.counterexample is None for r in report.results)
        and all(r.checked == FROZEN["structures"]["P:1,Q:1 up to 3"] for r in report.results)
        and elapsed < 120
    )
    return ok, f"9 sentences valid up to bound 3 over {report.results[0].checked} structures in {elapsed:.1f}s"


def criterion_2():
    outputs = []
    ok = True
    for text in CONTROLS.values():
        v = check_validity(text, 2)
        again = check_validity(text, 2)
        a, b = json.dumps(v.to_json(), sort_keys=True), json.dumps(again.to_json(), sort_keys=True)
        ok &= not v.valid and len(v.countermodel.domain) <= 2 and a == b
        cli = subprocess.run(
            [sys.executable, "-m", "ubiquity.cli", "check", text, "--max-domain", "2", "--format", "json"],
            capture_output=True,
        )
        cli2 = subprocess.run(
            [sys.executable, "-m", "ubiquity.cli", "check", text, "--max-domain", "2", "--format", "json"],
            capture_output=True,
        )
        ok &= cli.returncode == 1 and cli.stdout == cli2.stdout and json.loads(cli.stdout)["countermodel"] == v.to_json()["countermodel"]
        outputs.append(v.countermodel.to_json())
    expected = [
        {"domain": ["a", "b"], "opens": [["a"], ["a", "b"]], "predicates": {"P": [["a"]]}},
        {"domain": ["a"], "opens": [["a"]], "predicates": {"P": [["a"]], "Q": []}},
    ]
    ok &= outputs == expected
    return ok, f"countermodels {json.dumps(outputs)} identical across runs"


def criterion_3():
    counts = [count_spaces(n) for n in (1, 2, 3, 4)]
    again = [len(enumerate_spaces(n)) for n in (1, 2, 3, 4)]
    oracle = [len(oracles.pseudo_topologies(n)) for n in (1, 2, 3, 4)]
    frozen = [FROZEN["spaces"][str(n)] for n in (1, 2, 3, 4)]
    same_sets = all(
        {frozenset(frozenset(int(x) for x in o) for o in s.open_sets()) for s in enumerate_spaces(n)}
        == set(oracles.pseudo_topologies(n))
        for n in (1, 2, 3, 4)
    )
    ok = counts[:2] == [1, 3] and counts == again == oracle == frozen and same_sets
    return ok, f"space counts {counts}; oracle {oracle}; recorded {frozen}"


def criterion_4():
    laws = ["A <= B implies int A <= int B", "int A <= int(A | B)", "int A & int B <= int(A & B)"]
    failures = 0
    checked = 0
    for n in (1, 2, 3, 4):
        for s in enumerate_spaces(n):
            r = interior_law_suite(s)
            for name in laws:
                checked += r[name].checked
                failures += not r[name].passed
    return failures == 0 and checked > 0, f"{checked} subset-pair instances across {sum(map(count_spaces, (1, 2, 3, 4)))} spaces, {failures} failures"


def criterion_5():
    X = ["x1", "x2"]
    r = check_q_properties(standard_algebra(2), X)
    must_pass = [
        "P1 Q0 = 0",
        "P2 p <= Qp",
        "P3 Q(p | q) = Qp | Qq",
        "P4 Q(Qp) = Qp",
        "P5 Q((Qp)') = (Qp)'",
        "P7 Q(p & Qq) = Qp & Qq",
        "P6 restricted Q(p') = (Qp)' for constant p",
        "P8 restricted Q(p & q) = Qp & q for constant q",
    ]
    must_fail = ["P6 Q(p') = (Qp)'", "P8 Q(p & q) = Qp & q"]
    oracle = oracles.q_law_sweep("ab", X)
    ok = (
        all(r[n].passed for n in must_pass)
        and all(not r[n].passed and r[n].counterexample for n in must_fail)
        and all(oracle[k] for k in ("P1", "P2", "P3", "P4", "P5", "P7", "P6 constant", "P8 constant"))
        and not oracle["P6"]
        and not oracle["P8"]
    )
    return ok, f"P1-P5, P7 and restricted P6/P8 pass; P6 witness {json.dumps(r[must_fail[0]].counterexample['p'])}"


def criterion_6():
    laws = [
        "exists 1 = 1",
        "idempotent",
        "monotone",
        "disjunctive",
        "exists((exists p)') = (exists p)'",
        "exists p - exists q <= exists(p - q)",
        "exists p + exists q <= exists(p + q)",
    ]
    total = 0
    ok = True
    for n in (1, 2, 3, 4):
        alg = standard_algebra(n)
        qs = enumerate_quantifiers(alg)
        ok &= set(qs) == {quantifier_from_subalgebra(alg, s) for s in enumerate_subalgebras(alg)}
        if n <= 3:
            atoms = alg.labels
            ok &= {q.table for q in qs} == {_masks(atoms, t) for t in oracles.quantifiers_brute(atoms)}
        ok &= len(qs) == FROZEN["quantifiers"][str(n)]
        for q in qs:
            r = quantifier_law_suite(q)
            ok &= all(r[name].passed for name in laws)
            total += 1
    return ok, f"{total} quantifiers on algebras of 2..16 elements pass the seven laws"


def criterion_7():
    total = 0
    ok = True
    for n in (1, 2, 3, 4):
        for q in enumerate_quantifiers(standard_algebra(n)):
            ma = MonadicAlgebra.of(q)
            s = is_semisimple(ma)
            ok &= s.ok and verify_semisimplicity_certificate(ma, s.certificate).ok
            total += 1
    return ok, f"{total} monadic algebras semisimple with revalidated certificates"


def criterion_8():
    total = 0
    ok = True
    for n in (2, 3):
        alg = standard_algebra(n)
        atoms = alg.labels
        for kind, q in (("simple", simple_quantifier(alg)), ("identity", identity_quantifier(alg))):
            ups = enumerate_upsilons(MonadicAlgebra.of(q))
            ok &= len(ups) == FROZEN[f"upsilons_{kind}"][str(n)]
            if n == 2:
                ex = oracles.simple_exists(atoms) if kind == "simple" else oracles.identity_exists(atoms)
                ok &= {u.upsilon for u in ups} == {_masks(atoms, t) for t in oracles.upsilons_brute(atoms, ex)}
            for u in ups:
                r = ubiq_law_suite(u)
                ok &= r.passed and r["U(p & q) = Up & Uq"].passed
                total += 1
    return ok, f"{total} Υ tables pass all {len(r.results)} laws including U(p & q) = Up & Uq"


def criterion_9():
    total = 0
    ok = True
    for n in (1, 2, 3, 4):
        for s in enumerate_spaces(n):
            u = upsilon_from_space(s)
            extras = topological_extras(u)
            ok &= upsilon_violation(u.base, u.upsilon).ok and extras["Up <= p"].passed and extras["UUp = Up"].passed
            total += 1
    return ok, f"{total} spaces give valid Υ with Up <= p and UUp = Up"


def criterion_10():
    alg = standard_algebra(2)
    count = len(enumerate_upsilons(MonadicAlgebra.of(simple_quantifier(alg))))
    brute = len(oracles.upsilons_brute("ab", oracles.simple_exists("ab")))
    vectorized = oracles.upsilon_count_numpy(2, [0, 3, 3, 3])
    frozen = FROZEN["upsilons_simple"]["2"]
    ok = count == brute == vectorized == frozen == 9
    return ok, f"enumerate_upsilons gives {count}; brute force {brute}; vectorized {vectorized}; recorded {frozen}"


def criterion_11():
    audit = quotient_audit(3)
    expected_pairs = sum(
        1 for k in (1, 2, 3) for u in all_ubiquity_algebras(k) for i in ubiquity_ideals(u) if i.is_proper
    )
    c = audit.counts
    ok = (
        c["pairs"] == expected_pairs
        and all(isinstance(r["descends"], bool) for r in audit.records)
        and audit.invariant.passed
    )
    return ok, (
        f"{c['pairs']} verdicts ({c['descends']} descend, {c['fails']} do not); "
        f"Up | Uq <= U(p | q) over {audit.invariant.checked} instances"
    )


def criterion_12():
    lines = [l.strip() for l in (DATA / "formulas.txt").read_text().splitlines()]
    corpus = [l for l in lines if l and not l.startswith("#")]
    parsed = [parse(t) for t in corpus]
    ok = len(corpus) >= 50
    ok &= all(parse(t) in parsed for t in list(AXIOMS.values()) + list(THEOREMS.values()))
    ok &= all(parse(to_text(phi)) == phi for phi in parsed)
    bad = json.loads((DATA / "malformed.json").read_text())
    positioned = 0
    for case in bad:
        try:
            parse(case["text"])
        except ParseError as e:
            positioned += (e.line, e.column) == (case["line"], case["column"])
    ok &= len(bad) >= 10 and positioned == len(bad)
    return ok, f"{len(corpus)} formulas round-trip; {positioned}/{len(bad)} malformed inputs rejected with positions"


CRITERIA = [
    ("1 axiom validity", criterion_1),
    ("2 control soundness", criterion_2),
    ("3 pseudo-topology oracle", criterion_3),
    ("4 interior laws", criterion_4),
    ("5 functional-algebra laws", criterion_5),
    ("6 quantifier laws", criterion_6),
    ("7 monadic semisimplicity", criterion_7),
    ("8 ubiquity operator laws", criterion_8),
    ("9 space bridge", criterion_9),
    ("10 upsilon count", criterion_10),
    ("11 quotient audit", criterion_11),
    ("12 parser round-trip", criterion_12),
]


def _line(name, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {name}: {detail}"


@pytest.mark.parametrize("name,fn", CRITERIA, ids=[n for n, _ in CRITERIA])
def test_criterion(name, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + _line(name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for name, fn in CRITERIA:
        ok, detail = fn()
        print(_line(name, ok, detail), flush=True)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
