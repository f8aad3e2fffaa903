"""Structural analysis and fixture generation.

Minimally sufficient premise sets, the sufficient-invalidity classifier,
argument sizes and the size-threshold results, the named argument
families (iterated conjunction introduction and conditional chains), the
pairwise-inconsistent and rational-threshold fixture families, relation
comparison over argument corpora, and an empirical probe of the open
conjecture that preservation validity off the extremes always traces
back to a single premise classically entailing a single conclusion.
"""

import itertools
import math
import random
from dataclasses import dataclass, field

from .consequence import (
    alpha_satisfiable,
    alpha_tautologous,
    decide,
    maxsat,
    preservation_valid,
)
from .errors import EnumerationCapError, PreconditionError, ProbconsError
from .formula import (
    And,
    Argument,
    Atom,
    Implies,
    Not,
    Or,
    big_conj,
    big_disj,
    dedup_formulas,
    format_argument,
    format_formula,
    negate_set,
)
from .rational import format_rational, rat
from .semantics import check_atom_cap, classical_valid, satisfiable, tautology
from .upset import ONE_ONLY, POSITIVE, Upset, format_upset

MS_ENUMERATION_CAP = 20
FAMILY_CAP = 4096

_FIXTURE_NAMES = tuple("pqrstuvw") + tuple(f"x{i}" for i in range(1, 17))


# ---------------------------------------------------------------------------
# minimally sufficient sets
# ---------------------------------------------------------------------------


def minimally_sufficient_sets(premises, conclusion, atom_cap=None):
    """All subset-minimal premise sets classically entailing the conclusion.

    Returns a list of tuples (in premise order), smallest first; empty
    when the full set does not entail the conclusion.  Capped at 20
    premises: the enumeration is exponential by design.
    """
    premises = dedup_formulas(premises)
    if len(premises) > MS_ENUMERATION_CAP:
        raise EnumerationCapError(
            f"{len(premises)} premises exceed the enumeration cap "
            f"{MS_ENUMERATION_CAP}"
        )
    if not classical_valid(Argument(premises, (conclusion,)), atom_cap):
        return []
    found = []
    found_sets = []
    indices = range(len(premises))
    for size in range(len(premises) + 1):
        for combo in itertools.combinations(indices, size):
            cset = set(combo)
            if any(f <= cset for f in found_sets):
                continue
            subset = tuple(premises[i] for i in combo)
            if classical_valid(Argument(subset, (conclusion,)), atom_cap):
                found.append(subset)
                found_sets.append(cset)
    return found


def ms_formula(premises, conclusion, atom_cap=None):
    """Disjunction, over the minimally sufficient sets, of their
    conjunctions."""
    sets = minimally_sufficient_sets(premises, conclusion, atom_cap)
    if not sets:
        raise PreconditionError(
            "ms formula requires the premises to classically entail the conclusion"
        )
    return big_disj([big_conj(s) for s in sets])


# ---------------------------------------------------------------------------
# sufficient-invalidity classifier
# ---------------------------------------------------------------------------

RULE_CLASSICAL = "classically-invalid"
RULE_SETFMLA = "setfmla-condition"
RULE_FMLASET = "fmlaset-condition"


@dataclass(frozen=True)
class InvalidityReport:
    argument: Argument
    upset: Upset
    applicable_rules: tuple
    details: dict
    guaranteed_invalid_for: str

    @property
    def invalid_here(self):
        return bool(self.applicable_rules)

    def to_json_dict(self):
        return {
            "argument": format_argument(self.argument),
            "upset": format_upset(self.upset),
            "applicable_rules": list(self.applicable_rules),
            "details": self.details,
            "guaranteed_invalid_for": self.guaranteed_invalid_for,
        }


def classify_preservation_invalidity(argument, upset, atom_cap=None):
    """Evaluate the three sufficient conditions for preservation
    invalidity at the given upset.

    The conditions are only sufficient: arguments may be invalid although
    no rule fires, in which case the report says "undetermined" and the
    LP decider has the last word.
    """
    premises = argument.premises
    conclusions = argument.conclusions
    rules = []
    details = {}

    classically = classical_valid(argument, atom_cap)
    details[RULE_CLASSICAL] = {"classically_valid": classically}
    if not classically:
        rules.append(RULE_CLASSICAL)

    disj = big_disj(conclusions)
    if upset != ONE_ONLY:
        sat = alpha_satisfiable(premises, upset, atom_cap)
        disj_taut = tautology(disj, atom_cap)
        single = [
            format_formula(g)
            for g in premises
            if classical_valid(Argument((g,), (disj,)), atom_cap)
        ]
        hyp = sat.satisfiable and not disj_taut and not single
        details[RULE_SETFMLA] = {
            "premises_alpha_satisfiable": sat.satisfiable,
            "premises_maxsat": format_rational(sat.maxsat),
            "conclusion_disjunction_tautologous": disj_taut,
            "single_premise_entails_disjunction": single,
        }
        if hyp:
            rules.append(RULE_SETFMLA)
    else:
        details[RULE_SETFMLA] = {"skipped": "upset is {1}"}

    conj = big_conj(premises)
    if upset != POSITIVE:
        taut = alpha_tautologous(conclusions, upset, atom_cap)
        conj_sat = satisfiable(conj, atom_cap)
        single = [
            format_formula(d)
            for d in conclusions
            if classical_valid(Argument((conj,), (d,)), atom_cap)
        ]
        hyp = (not taut.tautologous) and conj_sat and not single
        details[RULE_FMLASET] = {
            "conclusions_alpha_tautologous": taut.tautologous,
            "negated_conclusions_maxsat": format_rational(taut.dual_sat.maxsat),
            "premise_conjunction_satisfiable": conj_sat,
            "conclusion_entailed_by_premise_conjunction": single,
        }
        if hyp:
            rules.append(RULE_FMLASET)
    else:
        details[RULE_FMLASET] = {"skipped": "upset is (0,1]"}

    if RULE_CLASSICAL in rules:
        scope = "all upsets"
    elif RULE_SETFMLA in rules and RULE_FMLASET in rules:
        scope = "this upset (both one-sided conditions apply)"
    elif RULE_SETFMLA in rules:
        scope = (
            "every upset other than {1} in which the premises are "
            "satisfiable (threshold at or below maxsat "
            f"{details[RULE_SETFMLA]['premises_maxsat']})"
        )
    elif RULE_FMLASET in rules:
        scope = (
            "every upset other than (0,1] in which the conclusions are "
            "not tautologous"
        )
    else:
        scope = "undetermined"
    return InvalidityReport(argument, upset, tuple(rules), details, scope)


# ---------------------------------------------------------------------------
# argument size and thresholds
# ---------------------------------------------------------------------------


def joint_set(argument):
    """Premises together with negated conclusions, deduplicated."""
    return dedup_formulas(argument.premises + negate_set(argument.conclusions))


def argument_size(argument):
    """|premises union negated-conclusions| after syntactic dedup."""
    return len(joint_set(argument))


def symmetric_upper_bound(argument, atom_cap=None):
    """The open upset ((n-1)/n, 1] at which a classically valid argument
    of size n is guaranteed symmetric-valid."""
    if not classical_valid(argument, atom_cap):
        raise PreconditionError("size bound requires a classically valid argument")
    n = argument_size(argument)
    return Upset(rat(n - 1, n), closed=False)


def subarguments(argument, proper=True):
    prem, conc = argument.premises, argument.conclusions
    for pk in range(len(prem) + 1):
        for ps in itertools.combinations(prem, pk):
            for ck in range(len(conc) + 1):
                for cs in itertools.combinations(conc, ck):
                    if proper and len(ps) == len(prem) and len(cs) == len(conc):
                        continue
                    yield Argument(ps, cs)


def minimal_argument_threshold(argument, atom_cap=None):
    """(n-1)/n for a minimally classically valid argument of size n.

    Precondition: the argument is classically valid and no proper
    subargument is.  The value is cross-checked against Knight's
    threshold of the joint set, which must agree exactly.
    """
    if not classical_valid(argument, atom_cap):
        raise PreconditionError("argument is not classically valid")
    for sub in subarguments(argument, proper=True):
        if classical_valid(sub, atom_cap):
            raise PreconditionError(
                f"proper subargument {format_argument(sub)} is classically valid"
            )
    n = argument_size(argument)
    value = rat(n - 1, n)
    check = maxsat(joint_set(argument), atom_cap)
    if check != value:
        raise ProbconsError(
            f"size threshold {format_rational(value)} disagrees with "
            f"maxsat {format_rational(check)}"
        )
    return value


def ci_argument(n):
    """Conjunction introduction: p1, ..., pn entail their conjunction."""
    atoms = [Atom(f"p{i}") for i in range(1, n + 1)]
    return Argument(atoms, (big_conj(atoms),))


def mp_argument(n):
    """Chained detachment: p1 and the chain p1 -> p2 -> ... -> pn entail pn."""
    atoms = [Atom(f"p{i}") for i in range(1, n + 1)]
    premises = [atoms[0]] + [Implies(atoms[i], atoms[i + 1]) for i in range(n - 1)]
    return Argument(premises, (atoms[-1],))


# ---------------------------------------------------------------------------
# fixture families
# ---------------------------------------------------------------------------


def fixture_pairwise_inconsistent(m, atom_cap=None):
    """m sentences, individually satisfiable and pairwise inconsistent.

    State-description conjunctions over ceil(log2 m) atoms, all-true
    first.
    """
    if m < 1:
        raise PreconditionError("need at least one sentence")
    n_atoms = max(1, math.ceil(math.log2(m)))
    check_atom_cap(range(n_atoms), atom_cap)
    names = _FIXTURE_NAMES[:n_atoms]
    out = []
    for pattern in itertools.product((True, False), repeat=n_atoms):
        if len(out) == m:
            break
        literals = [
            Atom(a) if value else Not(Atom(a))
            for a, value in zip(names, pattern)
        ]
        out.append(big_conj(literals))
    return tuple(out)


def fixture_rational_family(n, m, atom_cap=None):
    """All n-ary disjunctions over the m-member pairwise-inconsistent
    family; Knight's threshold of the result is exactly n/m."""
    if not 0 < n < m:
        raise PreconditionError("need 0 < n < m")
    if math.comb(m, n) > FAMILY_CAP:
        raise EnumerationCapError(
            f"C({m},{n}) = {math.comb(m, n)} exceeds cap {FAMILY_CAP}"
        )
    base = fixture_pairwise_inconsistent(m, atom_cap)
    return tuple(
        big_disj(combo) for combo in itertools.combinations(base, n)
    )


# ---------------------------------------------------------------------------
# relation comparison
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComparisonReport:
    kind: str
    upset_a: Upset
    upset_b: Upset
    rows: tuple  # (argument, valid_at_a, valid_at_b)

    def _bucket(self, at_a, at_b):
        return tuple(
            format_argument(arg)
            for arg, va, vb in self.rows
            if va == at_a and vb == at_b
        )

    @property
    def a_only(self):
        return self._bucket(True, False)

    @property
    def b_only(self):
        return self._bucket(False, True)

    @property
    def both(self):
        return self._bucket(True, True)

    @property
    def neither(self):
        return self._bucket(False, False)

    def to_json_dict(self):
        return {
            "relation": self.kind,
            "upset_a": format_upset(self.upset_a),
            "upset_b": format_upset(self.upset_b),
            "rows": [
                {
                    "argument": format_argument(arg),
                    "valid_at_a": va,
                    "valid_at_b": vb,
                }
                for arg, va, vb in self.rows
            ],
            "a_only": list(self.a_only),
            "b_only": list(self.b_only),
            "both": list(self.both),
            "neither": list(self.neither),
        }

    def to_text(self):
        a, b = format_upset(self.upset_a), format_upset(self.upset_b)
        head = f"{self.kind} at A = {a} vs B = {b}"
        lines = [head, "-" * len(head)]
        width = max((len(format_argument(r[0])) for r in self.rows), default=8)
        lines.append(f"{'argument'.ljust(width)}  {'A':>7}  {'B':>7}")
        for arg, va, vb in self.rows:
            lines.append(
                f"{format_argument(arg).ljust(width)}  "
                f"{'valid' if va else 'invalid':>7}  "
                f"{'valid' if vb else 'invalid':>7}"
            )
        lines.append(
            f"A-only: {len(self.a_only)}  B-only: {len(self.b_only)}  "
            f"both: {len(self.both)}  neither: {len(self.neither)}"
        )
        return "\n".join(lines)


def compare_relations(arguments, upset_a, upset_b, kind, atom_cap=None):
    """Verdicts for each argument at two upsets, with containment summary."""
    rows = []
    for arg in arguments:
        va = decide(arg, upset_a, kind, atom_cap).valid
        vb = decide(arg, upset_b, kind, atom_cap).valid
        rows.append((arg, va, vb))
    return ComparisonReport(kind, upset_a, upset_b, tuple(rows))


def incomparability_fixtures():
    """The pair of arguments separating [x,1]- from (x,1]-preservation
    at x = 2/3: a premise-only argument built on the (2,3) family and a
    conclusion-only argument built on the negated (1,3) family."""
    gamma = fixture_rational_family(2, 3)
    delta = negate_set(fixture_rational_family(1, 3))
    return (Argument((), delta), Argument(gamma, ()))


# ---------------------------------------------------------------------------
# conjecture probe
# ---------------------------------------------------------------------------


@dataclass
class ProbeReport:
    trials: int
    eligible: int
    confirmations: int
    refutations: list = field(default_factory=list)
    seed: int = 0

    def to_json_dict(self):
        return {
            "trials": self.trials,
            "eligible": self.eligible,
            "confirmations": self.confirmations,
            "refutations": list(self.refutations),
            "seed": self.seed,
        }

    def to_text(self):
        lines = [
            f"conjecture probe: {self.trials} trials, seed {self.seed}",
            f"eligible instances: {self.eligible}",
            f"confirmations (invalid as conjectured): {self.confirmations}",
            f"refutations: {len(self.refutations)}",
        ]
        for r in self.refutations:
            lines.append(f"  REFUTATION: {r}")
        return "\n".join(lines)


def random_formula(rng, atom_names, max_depth=3):
    if max_depth <= 1 or rng.random() < 0.35:
        return Atom(rng.choice(atom_names))
    op = rng.choice(("not", "or", "and", "implies"))
    if op == "not":
        return Not(random_formula(rng, atom_names, max_depth - 1))
    left = random_formula(rng, atom_names, max_depth - 1)
    right = random_formula(rng, atom_names, max_depth - 1)
    if op == "or":
        return Or(left, right)
    if op == "and":
        return And(left, right)
    return Implies(left, right)


def random_upset(rng, denominators):
    den = rng.choice(list(denominators))
    if den < 2:
        den = 2
    num = rng.randrange(1, den)
    return Upset(rat(num, den), closed=bool(rng.getrandbits(1)))


def probe_conjecture(
    atom_budget=3, denominators=range(2, 13), trials=200, seed=0, atom_cap=None
):
    """Search for a counterexample to the open conjecture that, away from
    the extreme upsets, preservation validity requires an unsatisfiable
    premise side, a tautologous conclusion side, or a single premise
    classically entailing a single conclusion.

    Samples arguments and upsets meeting the conjecture's hypotheses and
    reports any preservation-valid instance as a refutation.  Evidence
    only; a clean report proves nothing.
    """
    names = tuple("pqr"[:atom_budget]) or ("p",)
    report = ProbeReport(trials=trials, eligible=0, confirmations=0, seed=seed)
    for i in range(trials):
        # deterministic per-trial stream, independent of trial order
        rng = random.Random(seed * 1000003 + i)
        upset = random_upset(rng, denominators)
        premises = dedup_formulas(
            random_formula(rng, names) for _ in range(rng.randint(1, 3))
        )
        conclusions = dedup_formulas(
            random_formula(rng, names) for _ in range(rng.randint(1, 3))
        )
        arg = Argument(premises, conclusions)
        if any(
            classical_valid(Argument((g,), (d,)), atom_cap)
            for g in premises
            for d in conclusions
        ):
            continue
        if not alpha_satisfiable(premises, upset, atom_cap).satisfiable:
            continue
        if alpha_tautologous(conclusions, upset, atom_cap).tautologous:
            continue
        report.eligible += 1
        verdict = preservation_valid(arg, upset, atom_cap)
        if verdict.valid:
            report.refutations.append(
                f"{format_argument(arg)} at {format_upset(upset)}"
            )
        else:
            report.confirmations += 1
    return report
