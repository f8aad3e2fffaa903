import itertools
import random

import pytest

from probcons.analysis import (
    argument_size,
    ci_argument,
    classify_preservation_invalidity,
    compare_relations,
    fixture_pairwise_inconsistent,
    fixture_rational_family,
    incomparability_fixtures,
    joint_set,
    minimal_argument_threshold,
    minimally_sufficient_sets,
    mp_argument,
    ms_formula,
    probe_conjecture,
    symmetric_upper_bound,
)
from probcons.consequence import maxsat, preservation_valid, symmetric_valid
from probcons.errors import EnumerationCapError, PreconditionError
from probcons.formula import (
    And,
    Argument,
    Atom,
    Implies,
    Not,
    Or,
    big_conj,
    dedup_formulas,
    negate_set,
    parse_argument,
    parse_formula_list,
)
from probcons.rational import rat
from probcons.semantics import classical_valid, satisfiable
from probcons.upset import ONE_ONLY, POSITIVE, Upset

from oracles import tt_entails, tt_satisfiable

p, q, r = Atom("p"), Atom("q"), Atom("r")


def up(num, den, closed):
    return Upset(rat(num, den), closed)


def _brute_minimal_sets(premises, conclusion):
    premises = list(premises)
    winners = []
    for k in range(len(premises) + 1):
        for combo in itertools.combinations(range(len(premises)), k):
            if not tt_entails([premises[i] for i in combo], [conclusion]):
                continue
            if any(set(w) <= set(combo) for w in winners):
                continue
            winners.append(combo)
    return [tuple(premises[i] for i in combo) for combo in winners]


def test_ms_examples_against_brute_force():
    g = (p, Implies(p, q), r)
    assert minimally_sufficient_sets(g, q) == _brute_minimal_sets(g, q)
    assert minimally_sufficient_sets(g, q) == [(p, Implies(p, q))]
    assert minimally_sufficient_sets((p,), p) == [(p,)]
    assert minimally_sufficient_sets((p, Not(p)), q) == [(p, Not(p))]
    assert minimally_sufficient_sets((p, q), And(q, r)) == []


def test_ms_random_against_brute_force():
    rng = random.Random(50)
    pool = [p, q, r, Not(p), Implies(p, q), Implies(q, r), And(p, q), Or(p, r)]
    for _ in range(60):
        g = tuple(rng.sample(pool, rng.randrange(1, 5)))
        phi = rng.choice(pool)
        assert minimally_sufficient_sets(g, phi) == _brute_minimal_sets(
            dedup_formulas(g), phi
        )


def test_ms_formula_examples():
    assert ms_formula((p, Implies(p, q), r), q) == And(p, Implies(p, q))
    assert ms_formula((p,), p) == p
    assert ms_formula((p, Not(p)), q) == And(p, Not(p))
    with pytest.raises(PreconditionError):
        ms_formula((p, q), And(q, r))


def test_ms_formula_equiconsistency_property():
    rng = random.Random(51)
    pool = [p, q, r, Not(p), Implies(p, q), Implies(q, r), And(p, q), Or(p, r)]
    checked = 0
    for _ in range(80):
        g = tuple(rng.sample(pool, rng.randrange(1, 5)))
        phi = rng.choice(pool)
        if not classical_valid(Argument(g, (phi,))):
            continue
        ms = ms_formula(g, phi)
        for k in range(len(g) + 1):
            for sigma in itertools.combinations(g, k):
                lhs = not tt_entails(sigma, [phi])
                rhs = not tt_entails(sigma, [ms])
                assert lhs == rhs
        checked += 1
    assert checked > 10


def test_enumeration_cap():
    many = tuple(Atom(f"b{i}") for i in range(21))
    with pytest.raises(EnumerationCapError):
        minimally_sufficient_sets(many, many[0])


def test_classifier_spec_cases():
    arg = parse_argument("p, q | r |- p & q, r")
    for a in [up(1, 2, True), up(2, 3, False), up(9, 10, True)]:
        report = classify_preservation_invalidity(arg, a)
        assert "setfmla-condition" in report.applicable_rules
        assert report.invalid_here
        assert not preservation_valid(arg, a).valid

    arg2 = parse_argument("p, q |- p & q, p & ~q")
    for a in [up(2, 3, True), up(1, 2, False)]:
        report = classify_preservation_invalidity(arg2, a)
        assert report.applicable_rules == ()
        assert report.guaranteed_invalid_for == "undetermined"
        assert not preservation_valid(arg2, a).valid  # decider still catches it

    report = classify_preservation_invalidity(parse_argument("p |- q"), up(1, 2, True))
    assert "classically-invalid" in report.applicable_rules
    assert report.guaranteed_invalid_for == "all upsets"


def test_classifier_soundness_random():
    rng = random.Random(52)
    pool = [p, q, r, Not(p), And(p, q), Or(p, q), Implies(p, q), Not(And(p, q))]
    for _ in range(150):
        arg = Argument(
            rng.sample(pool, rng.randrange(0, 3)), rng.sample(pool, rng.randrange(0, 3))
        )
        den = rng.randrange(2, 7)
        a = Upset(rat(rng.randrange(1, den), den), bool(rng.getrandbits(1)))
        report = classify_preservation_invalidity(arg, a)
        if report.invalid_here:
            assert not preservation_valid(arg, a).valid


def test_argument_size_examples():
    assert argument_size(parse_argument("p |- p")) == 2
    assert argument_size(ci_argument(4)) == 5
    assert argument_size(mp_argument(4)) == 5
    # overlap collapses: same formula as premise and negated conclusion
    assert argument_size(Argument((Not(p),), (p,))) == 1


def test_symmetric_upper_bound():
    assert symmetric_upper_bound(ci_argument(2)) == up(2, 3, False)
    assert symmetric_upper_bound(parse_argument("p |- p")) == up(1, 2, False)
    with pytest.raises(PreconditionError):
        symmetric_upper_bound(parse_argument("p |- q"))
    rng = random.Random(53)
    pool = [p, q, r, Not(p), And(p, q), Or(p, q), Implies(p, q)]
    checked = 0
    for _ in range(200):
        arg = Argument(
            rng.sample(pool, rng.randrange(0, 4)), rng.sample(pool, rng.randrange(0, 4))
        )
        if not classical_valid(arg):
            continue
        bound = symmetric_upper_bound(arg)
        assert symmetric_valid(arg, bound).valid
        checked += 1
    assert checked > 20


def test_minimal_argument_threshold():
    assert minimal_argument_threshold(ci_argument(2)) == rat(2, 3)
    assert minimal_argument_threshold(parse_argument("p, p -> q |- q")) == rat(2, 3)
    assert minimal_argument_threshold(parse_argument("p |- p")) == rat(1, 2)
    with pytest.raises(PreconditionError):
        minimal_argument_threshold(parse_argument("p, q |- p"))  # q is dead weight
    with pytest.raises(PreconditionError):
        minimal_argument_threshold(parse_argument("p |- q"))


def test_minimal_threshold_matches_maxsat():
    for n in range(1, 6):
        for arg in (ci_argument(n), mp_argument(n)):
            if n == 1:
                continue
            value = minimal_argument_threshold(arg)
            assert value == rat(n, n + 1)
            assert maxsat(joint_set(arg)) == value


def test_fixture_pairwise_inconsistent():
    fam3 = fixture_pairwise_inconsistent(3)
    assert [str(f) for f in fam3] == ["p & q", "p & ~q", "~p & q"]
    assert [str(f) for f in fixture_pairwise_inconsistent(1)] == ["p"]
    assert len(fixture_pairwise_inconsistent(4)) == 4
    for m in (1, 2, 3, 4, 5, 8):
        fam = fixture_pairwise_inconsistent(m)
        assert len(fam) == m
        for f in fam:
            assert satisfiable(f)
        for a, b in itertools.combinations(fam, 2):
            assert not tt_satisfiable(And(a, b))


def test_fixture_rational_family():
    fam = fixture_rational_family(2, 3)
    assert len(fam) == 3
    assert maxsat(fam) == rat(2, 3)
    assert maxsat(fixture_rational_family(1, 2)) == rat(1, 2)
    assert maxsat(fixture_rational_family(3, 4)) == rat(3, 4)
    with pytest.raises(PreconditionError):
        fixture_rational_family(3, 3)
    with pytest.raises(EnumerationCapError):
        fixture_rational_family(8, 16)


def test_compare_relations_incomparability():
    a, b = up(2, 3, True), up(2, 3, False)
    report = compare_relations(incomparability_fixtures(), a, b, "preservation")
    assert report.a_only and report.b_only
    text = report.to_text()
    assert "A-only: 1" in text and "B-only: 1" in text


def test_compare_symmetric_ordering_and_material_identity():
    rng = random.Random(54)
    pool = [p, q, Not(p), And(p, q), Or(p, q)]
    args = [
        Argument(rng.sample(pool, rng.randrange(0, 3)), rng.sample(pool, rng.randrange(0, 3)))
        for _ in range(40)
    ]
    a, b = up(3, 4, True), up(1, 2, True)  # a is the narrower upset
    rep = compare_relations(args, a, b, "symmetric")
    assert not rep.b_only  # b-valid implies a-valid when a is narrower
    rep2 = compare_relations(args, a, b, "material")
    assert not rep2.a_only and not rep2.b_only


def test_probe_conjecture_runs_clean():
    report = probe_conjecture(atom_budget=2, trials=60, seed=3)
    assert report.refutations == []
    assert report.eligible > 10
    assert report.confirmations == report.eligible
    again = probe_conjecture(atom_budget=2, trials=60, seed=3)
    assert again.to_json_dict() == report.to_json_dict()


def test_probe_counts_known_confirmation():
    # the two-conclusion argument satisfies the conjecture's hypotheses at
    # [2/3,1] and is preservation-invalid there: a confirmation, not a
    # refutation
    arg = parse_argument("p, q |- p & q, p & ~q")
    a = up(2, 3, True)
    from probcons.consequence import alpha_satisfiable, alpha_tautologous

    assert alpha_satisfiable(arg.premises, a).satisfiable
    assert not alpha_tautologous(arg.conclusions, a).tautologous
    assert not any(
        classical_valid(Argument((g,), (d,)))
        for g in arg.premises
        for d in arg.conclusions
    )
    assert not preservation_valid(arg, a).valid
