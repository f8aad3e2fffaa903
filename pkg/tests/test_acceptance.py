"""Acceptance suite.

One test per criterion; each prints a single PASS/FAIL line (run with
``pytest tests/test_acceptance.py -v -s`` to see them) and enforces its
stated runtime budget.  All comparisons are exact rational equality.

Every invalid verdict produced anywhere in this module is recorded and
re-verified with independent arithmetic by the final criterion, along
with two-sided certification of every recorded maxsat value.
"""

import itertools
import random
import time

from probcons import linprog
from probcons.analysis import (
    ci_argument,
    classify_preservation_invalidity,
    compare_relations,
    fixture_rational_family,
    incomparability_fixtures,
    joint_set,
    minimal_argument_threshold,
    mp_argument,
)
from probcons.consequence import (
    alpha_satisfiable,
    decide,
    material_valid,
    maxsat,
    preservation_valid,
    preservation_valid_lp,
    symmetric_valid,
    symmetric_valid_lp,
)
from probcons.formula import (
    And,
    Argument,
    Atom,
    Implies,
    Not,
    Or,
    big_conj,
    parse_argument,
    parse_formula_list,
    semantic_atoms,
)
from probcons.linprog import GE
from probcons.models import verify_counterexample
from probcons.rational import ONE, ZERO, rat
from probcons.semantics import (
    classical_valid,
    satisfiable,
    state_space,
    sub_valid,
    sv_valid,
    tautology,
)
from probcons.upset import ONE_ONLY, POSITIVE, Upset

p, q, r = Atom("p"), Atom("q"), Atom("r")


def up(num, den, closed):
    return Upset(rat(num, den), closed)


# Records feeding criterion 10.
INVALID_VERDICTS = []  # (model, argument, upset, kind)
MAXSAT_VALUES = []  # (formulas, value)


def _record(verdict, argument, kind):
    if not verdict.valid:
        INVALID_VERDICTS.append((verdict.model, argument, verdict.upset, kind))
    return verdict


def _report(number, description, failures, elapsed, budget):
    status = "PASS" if not failures else f"FAIL ({len(failures)} problems)"
    print(
        f"ACCEPTANCE {number:>2} {status}: {description} "
        f"[{elapsed:.2f}s, budget {budget}s]"
    )
    assert not failures, failures[:10]
    assert elapsed < budget, f"criterion {number} exceeded {budget}s: {elapsed:.2f}s"


def test_criterion_01_die_example():
    t0 = time.perf_counter()
    failures = []
    die = parse_argument("p, q |- p & q")
    a = up(7, 10, False)
    v = _record(preservation_valid(die, a), die, "preservation")
    if v.valid:
        failures.append("preservation should be invalid")
    elif not verify_counterexample(v.model, die, a, "preservation"):
        failures.append("model does not verify")
    s = symmetric_valid(die, a)
    if not s.valid:
        failures.append("symmetric should be valid")
    MAXSAT_VALUES.append((joint_set(die), s.certificate.detail))
    _report(1, "die example: preservation invalid, symmetric valid at (7/10,1]",
            failures, time.perf_counter() - t0, 1)


def test_criterion_02_pairwise_incompatible_triple():
    t0 = time.perf_counter()
    failures = []
    triple = parse_formula_list("p & ~q, q & ~p, ~(p | q)")
    value = maxsat(triple)
    if value != rat(1, 3):
        failures.append(f"maxsat {value} != 1/3")
    MAXSAT_VALUES.append((triple, value))
    arg = Argument(triple, ())
    if not preservation_valid(arg, up(2, 5, True)).valid:
        failures.append("should be valid at [2/5,1]")
    v = _record(preservation_valid(arg, up(3, 10, True)), arg, "preservation")
    if v.valid:
        failures.append("should be invalid at [3/10,1]")
    _report(2, "pairwise-incompatible triple: maxsat 1/3, [2/5,1] valid, [3/10,1] invalid",
            failures, time.perf_counter() - t0, 1)


# Fixed surface-depth-<=2 pool over two atoms for the limit-theorem corpus.
_POOL3 = (
    p,
    q,
    Not(p),
    Not(q),
    And(p, q),
    Or(p, q),
    Implies(p, q),
    Not(And(p, q)),
    Not(Or(p, q)),
    And(p, Not(p)),
    Or(p, Not(p)),
)


def _corpus_sides():
    sides = [()]
    sides += [(f,) for f in _POOL3]
    sides += list(itertools.combinations(_POOL3, 2))
    return sides


def test_criterion_03_limit_theorems():
    t0 = time.perf_counter()
    failures = []
    sides = _corpus_sides()
    material_upsets = (ONE_ONLY, up(1, 2, True), up(1, 3, False))
    for prem in sides:
        for conc in sides:
            arg = Argument(prem, conc)
            cl = classical_valid(arg)
            for a in material_upsets:
                if material_valid(arg, a).valid != cl:
                    failures.append(("material", arg, a))
            if preservation_valid_lp(arg, ONE_ONLY).valid != sv_valid(arg):
                failures.append(("pres-one", arg))
            if preservation_valid_lp(arg, POSITIVE).valid != sub_valid(arg):
                failures.append(("pres-positive", arg))
            if symmetric_valid_lp(arg, ONE_ONLY).valid != cl:
                failures.append(("sym-one", arg))
            char = any(not satisfiable(g) for g in prem) or any(
                tautology(d) for d in conc
            )
            if symmetric_valid_lp(arg, POSITIVE).valid != char:
                failures.append(("sym-positive", arg))
    n = len(sides) ** 2
    _report(3, f"limit theorems, exhaustive corpus of {n} arguments, LP vs classical routes",
            failures, time.perf_counter() - t0, 30)


def test_criterion_04_knight_size_thresholds():
    t0 = time.perf_counter()
    failures = []
    for n in range(2, 6):
        for name, arg in (("CI", ci_argument(n)), ("MP", mp_argument(n))):
            closed = up(n, n + 1, True)
            open_ = up(n, n + 1, False)
            v = _record(symmetric_valid(arg, closed), arg, "symmetric")
            if v.valid:
                failures.append((name, n, "should be invalid at closed threshold"))
            if not symmetric_valid(arg, open_).valid:
                failures.append((name, n, "should be valid at open threshold"))
            value = minimal_argument_threshold(arg)
            if value != rat(n, n + 1):
                failures.append((name, n, f"threshold {value}"))
            ms = maxsat(joint_set(arg))
            if ms != value:
                failures.append((name, n, f"maxsat {ms} != {value}"))
            MAXSAT_VALUES.append((joint_set(arg), ms))
    _report(4, "Knight size thresholds for CI_n and MP_n, n = 2..5",
            failures, time.perf_counter() - t0, 5)


def test_criterion_05_rational_families():
    t0 = time.perf_counter()
    failures = []
    for n, m in [(1, 2), (2, 3), (1, 3), (3, 4), (2, 5)]:
        family = fixture_rational_family(n, m)
        value = maxsat(family)
        if value != rat(n, m):
            failures.append((n, m, f"maxsat {value}"))
        MAXSAT_VALUES.append((family, value))
        if not alpha_satisfiable(family, up(n, m, True)).satisfiable:
            failures.append((n, m, "should be satisfiable at closed n/m"))
        if alpha_satisfiable(family, up(n, m, False)).satisfiable:
            failures.append((n, m, "should be unsatisfiable at open n/m"))
    _report(5, "rational families: maxsat n/m exactly for five (n, m) pairs",
            failures, time.perf_counter() - t0, 5)


def test_criterion_06_incomparability_witnesses():
    t0 = time.perf_counter()
    failures = []
    a, b = up(2, 3, True), up(2, 3, False)
    report = compare_relations(incomparability_fixtures(), a, b, "preservation")
    if not report.a_only:
        failures.append("no argument valid only at [2/3,1]")
    if not report.b_only:
        failures.append("no argument valid only at (2/3,1]")
    _report(6, "incomparability of [2/3,1]- and (2/3,1]-preservation from fixtures",
            failures, time.perf_counter() - t0, 5)


def test_criterion_07_case_studies():
    t0 = time.perf_counter()
    failures = []
    first = parse_argument("p, q | r |- p & q, r")
    for a in (ONE_ONLY, up(1, 2, True), up(2, 3, False), up(9, 10, True)):
        v = _record(preservation_valid(first, a), first, "preservation")
        if v.valid:
            failures.append(("first", str(a)))
    second = parse_argument("p, q |- p & q, p & ~q")
    for a in (ONE_ONLY, POSITIVE):
        if not preservation_valid(second, a).valid:
            failures.append(("second should be valid", str(a)))
    for a in (up(2, 3, True), up(1, 2, False)):
        v = _record(preservation_valid(second, a), second, "preservation")
        if v.valid:
            failures.append(("second should be invalid", str(a)))
        report = classify_preservation_invalidity(second, a)
        if report.guaranteed_invalid_for != "undetermined":
            failures.append(("classifier should be undetermined", str(a)))
    _report(7, "case studies: one-sided conditions fire or fall silent as published",
            failures, time.perf_counter() - t0, 2)


def test_criterion_08_lattice_example():
    t0 = time.perf_counter()
    failures = []
    arg = parse_argument("p, q, ~(p & q) |- r, ~r")
    if not preservation_valid(arg, up(1, 2, True)).valid:
        failures.append("should be valid at [1/2,1] (half inside)")
    if not preservation_valid(arg, up(2, 3, False)).valid:
        failures.append("should be valid at (2/3,1] (two-thirds outside)")
    for a in (up(2, 3, True), up(1, 2, False)):
        v = _record(preservation_valid(arg, a), arg, "preservation")
        if v.valid:
            failures.append(f"should be invalid at {a}")
    _report(8, "three-premise lattice example: valid-invalid-valid as the upset narrows",
            failures, time.perf_counter() - t0, 2)


# ---------------------------------------------------------------------------
# criterion 9: structural property suites, 1000 randomized cases each
# ---------------------------------------------------------------------------

_PROP_POOL = (
    p,
    q,
    r,
    Not(p),
    Not(q),
    And(p, q),
    Or(p, q),
    Implies(p, q),
    Not(And(p, q)),
    Or(And(p, q), r),
    And(p, Not(p)),
    Or(q, Not(q)),
)
_CONTINGENT = tuple(
    f for f in _PROP_POOL if satisfiable(f) and not tautology(f)
)


def _rand_argument(rng, max_side=2):
    prem = rng.sample(_PROP_POOL, rng.randrange(0, max_side + 1))
    conc = rng.sample(_PROP_POOL, rng.randrange(0, max_side + 1))
    return Argument(prem, conc)


def _rand_upset(rng, max_den=12):
    k = rng.randrange(12)
    if k == 0:
        return ONE_ONLY
    if k == 1:
        return POSITIVE
    den = rng.randrange(2, max_den + 1)
    num = rng.randrange(1, den)
    return Upset(rat(num, den), closed=bool(rng.getrandbits(1)))


def _suite(check, cases=1000, seed=0):
    rng = random.Random(seed)
    failures = []
    for i in range(cases):
        problem = check(rng)
        if problem is not None:
            failures.append((i, problem))
    return failures


def _check_negation_swap(rng):
    arg = _rand_argument(rng)
    phi = rng.choice(_PROP_POOL)
    a = _rand_upset(rng)
    left = symmetric_valid(Argument((phi,) + arg.premises, arg.conclusions), a)
    right = symmetric_valid(Argument(arg.premises, arg.conclusions + (Not(phi),)), a)
    if left.valid != right.valid:
        return ("swap", arg, phi, a)


def _check_unsat_reduction(rng):
    arg = _rand_argument(rng)
    a = _rand_upset(rng)
    direct = symmetric_valid(arg, a)
    _record(direct, arg, "symmetric")
    via_preservation = preservation_valid(Argument(joint_set(arg), ()), a)
    if direct.valid != via_preservation.valid:
        return ("unsat-reduction", arg, a)


def _check_monotonicity(rng):
    arg = _rand_argument(rng)
    a = _rand_upset(rng)
    bigger = Argument(
        arg.premises + tuple(rng.sample(_PROP_POOL, rng.randrange(0, 2))),
        arg.conclusions + tuple(rng.sample(_PROP_POOL, rng.randrange(0, 2))),
    )
    for kind in ("material", "preservation", "symmetric"):
        small = decide(arg, a, kind)
        _record(small, arg, kind)
        if small.valid and not decide(bigger, a, kind).valid:
            return ("monotonicity", kind, arg, a)


def _check_reflexivity(rng):
    phi = rng.choice(_CONTINGENT)
    a = _rand_upset(rng)
    refl = Argument((phi,), (phi,))
    v = symmetric_valid(refl, a)
    _record(v, refl, "symmetric")
    if v.valid != (not a.contains(rat(1, 2))):
        return ("reflexivity", phi, a)


def _ci_chain_triple(a):
    """The explicit cut-rule failure from the conjunction-introduction
    chain, available whenever 2/3 lies outside the upset (and the upset
    is not {1}): take the least k with k/(k+1) inside, cut on the
    conjunction of the first k-1 atoms."""
    k = 2
    while not a.contains(rat(k, k + 1)):
        k += 1
    ci = ci_argument(k)
    cut = big_conj([Atom(f"p{i}") for i in range(1, k)])
    return ci, cut


def _check_transitivity(rng):
    # Where the cut rule provably holds ({1}, upsets containing 1/2, and
    # the open upset at 1/2), random instances must never break it; where
    # the conjunction-introduction chain provides a failure (2/3 outside
    # the upset), the constructed triple must exhibit one.  Upsets between
    # those regions are not sampled: no CI-chain witness exists there (the
    # chain's pivotal instances are invalid), and whether any other
    # witness exists is open.
    a = _rand_upset(rng)
    holds = a == ONE_ONLY or a.contains(rat(1, 2)) or a == up(1, 2, False)
    if holds:
        arg = _rand_argument(rng)
        phi = rng.choice(_PROP_POOL)
        i = symmetric_valid(Argument(arg.premises, arg.conclusions + (phi,)), a)
        ii = symmetric_valid(Argument((phi,) + arg.premises, arg.conclusions), a)
        base = symmetric_valid(arg, a)
        if i.valid and ii.valid and not base.valid:
            return ("cut broke where it must hold", arg, phi, a)
        return None
    if a.contains(rat(2, 3)):
        return None  # gap region: no CI-chain witness exists
    ci, cut = _ci_chain_triple(a)
    i = symmetric_valid(Argument(ci.premises, ci.conclusions + (cut,)), a)
    ii = symmetric_valid(Argument((cut,) + ci.premises, ci.conclusions), a)
    base = symmetric_valid(ci, a)
    _record(base, ci, "symmetric")
    if not (i.valid and ii.valid and not base.valid):
        return ("CI-chain failure not exhibited", a, i.valid, ii.valid, base.valid)


def _check_weak_equivalence_symmetric(rng):
    phi = rng.choice(_CONTINGENT)
    psi = rng.choice(_CONTINGENT)
    a = _rand_upset(rng)
    paraconsistent = not symmetric_valid(
        Argument((phi, Not(phi)), (psi,)), a
    ).valid
    paracomplete = not symmetric_valid(
        Argument((psi,), (phi, Not(phi))), a
    ).valid
    nonreflexive = not symmetric_valid(Argument((phi,), (phi,)), a).valid
    expected = a.contains(rat(1, 2))
    if not (paraconsistent == paracomplete == nonreflexive == expected):
        return ("weak-equivalence", phi, psi, a)


def _check_sandwich(rng):
    arg = _rand_argument(rng)
    a = _rand_upset(rng)
    outer, inner = (a.dual(), a) if a.issubset(a.dual()) else (a, a.dual())
    if symmetric_valid(arg, outer).valid and not preservation_valid(arg, inner).valid:
        return ("sandwich outer", arg, a)
    if preservation_valid(arg, inner).valid and not symmetric_valid(arg, inner).valid:
        return ("sandwich inner", arg, a)


def _check_exactly_one_weak_preservation(rng):
    phi = rng.choice([f for f in _CONTINGENT if "r" not in str(f)])
    psi = rng.choice((r, Not(r)))
    a = _rand_upset(rng)
    # strong forms hold at every upset
    if not preservation_valid(Argument((And(phi, Not(phi)),), (psi,)), a).valid:
        return ("explosion-conjunctive", phi, psi, a)
    if not preservation_valid(Argument((psi,), (Or(phi, Not(phi)),)), a).valid:
        return ("excluded-middle-disjunctive", phi, psi, a)
    paraconsistent = not preservation_valid(
        Argument((phi, Not(phi)), (psi,)), a
    ).valid
    paracomplete = not preservation_valid(
        Argument((psi,), (phi, Not(phi))), a
    ).valid
    if paraconsistent != a.contains(rat(1, 2)):
        return ("weakly-paraconsistent iff half inside", phi, psi, a)
    if paracomplete == a.contains(rat(1, 2)):
        return ("weakly-paracomplete iff half outside", phi, psi, a)


def test_criterion_09_structural_property_suites():
    t0 = time.perf_counter()
    failures = []
    suites = [
        ("negation swap", _check_negation_swap, 901),
        ("unsat reduction", _check_unsat_reduction, 902),
        ("monotonicity", _check_monotonicity, 903),
        ("reflexivity iff 1/2 outside", _check_reflexivity, 904),
        ("CI-chain transitivity", _check_transitivity, 905),
        ("weak equivalence (symmetric)", _check_weak_equivalence_symmetric, 906),
        ("sandwich containment", _check_sandwich, 907),
        ("exactly-one weak property (preservation)", _check_exactly_one_weak_preservation, 908),
    ]
    for name, check, seed in suites:
        bad = _suite(check, cases=1000, seed=seed)
        if bad:
            failures.append((name, bad[:3]))
    _report(9, "structural property suites, 1000 randomized cases each",
            failures, time.perf_counter() - t0, 60)


def test_criterion_10_certificate_integrity():
    t0 = time.perf_counter()
    failures = []
    if len(INVALID_VERDICTS) < 50:
        failures.append("too few invalid verdicts recorded; run the full module")
    for model, argument, upset, kind in INVALID_VERDICTS:
        if not verify_counterexample(model, argument, upset, kind):
            failures.append(("reverify", argument, upset, kind))
    seen = set()
    for formulas, value in MAXSAT_VALUES:
        key = (formulas, value)
        if key in seen:
            continue
        seen.add(key)
        if value > 0 and not alpha_satisfiable(formulas, Upset(value, True)).satisfiable:
            failures.append(("satisfiable at [v,1]", value))
        bump = value + rat(1, 1000)
        space = state_space(semantic_atoms(formulas))
        constraints = linprog.probability_constraints(
            [(f, GE, bump) for f in formulas], space
        )
        out = linprog.solve([ZERO] * space.size, "max", constraints)
        if out.status != "infeasible":
            failures.append(("bump should be infeasible", value))
    _report(
        10,
        f"certificate integrity: {len(INVALID_VERDICTS)} models re-verified, "
        f"{len(seen)} maxsat values certified two-sided",
        failures,
        time.perf_counter() - t0,
        30,
    )
