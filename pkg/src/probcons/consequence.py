"""Deciders for the three probabilistic consequence relations.

Every verdict carries a machine-checkable certificate: invalid verdicts a
probability model that passes :func:`~probcons.models.verify_counterexample`,
valid verdicts the LP optimum, the classical-tautology fact, or the limit
characterization that forced validity.  A verdict whose certificate fails
verification raises :class:`~probcons.errors.CertificateError`; that is a
bug in the engine, never an answer.

Strictness is handled by one shared slack variable maximized as the
objective: the feasible regions are compact polytopes, so a strict system
is satisfiable exactly when the attained maximum slack is positive.  The
extreme upsets {1} and (0,1], where the slack encoding degenerates into
boundary cases, are decided by their limit characterizations
(supervaluationist and subvaluationist validity, classical validity, and
the contradiction/tautology test); the LP routes remain available as
separate functions and the test suite cross-checks the two.
"""

from dataclasses import dataclass
from functools import lru_cache

from . import linprog
from .errors import CertificateError, ProbconsError
from .formula import (
    Implies,
    big_conj,
    big_disj,
    dedup_formulas,
    negate_set,
    semantic_atoms,
)
from .linprog import GE, LE, LinearConstraint
from .models import ProbModel, from_witness, point_mass, verify_counterexample
from .rational import ONE, ZERO, rat
from .semantics import classical_valid, state_space, sub_valid, sv_valid
from .upset import ONE_ONLY, POSITIVE

PROBABILISTIC_KINDS = ("material", "preservation", "symmetric")
CLASSICAL_KINDS = ("classical", "sv", "sub")


@dataclass(frozen=True)
class ValidityWitness:
    """Why a valid verdict is valid.

    kind is one of "classical-tautology", "lp-optimum", "limit-theorem";
    detail carries the exact optimum (a rational), "infeasible", or the
    name of the characterization that applied.
    """

    kind: str
    detail: object = None


@dataclass(frozen=True)
class CounterexampleModel:
    model: ProbModel


@dataclass(frozen=True)
class Verdict:
    valid: bool
    certificate: object
    relation: str = None
    upset: object = None

    @property
    def model(self):
        """Counterexample model, or None for valid verdicts."""
        if isinstance(self.certificate, CounterexampleModel):
            return self.certificate.model
        return None


@dataclass(frozen=True)
class SatResult:
    """Outcome of an alpha-satisfiability query.

    ``maxsat`` is the exact optimum of Knight's threshold LP; ``witness``
    realizes probability >= maxsat on every member (present only when the
    set is satisfiable in the queried upset).
    """

    satisfiable: bool
    maxsat: object
    witness: ProbModel = None


@dataclass(frozen=True)
class TautResult:
    tautologous: bool
    dual_sat: SatResult


def _checked_invalid(model, argument, upset, kind):
    if not verify_counterexample(model, argument, upset, kind):
        raise CertificateError(
            f"internal error: {kind} counterexample failed verification "
            f"for {argument} at {upset}"
        )
    return Verdict(False, CounterexampleModel(model), kind, upset)


def _uniform_model(atom_list, states):
    states = sorted(set(states))
    share = rat(1, len(states))
    return ProbModel(atom_list, {s: share for s in states})


def _lowest_state(mask):
    # mask != 0; index of its lowest set bit
    return (mask & -mask).bit_length() - 1


# ---------------------------------------------------------------------------
# maxsat and alpha-satisfiability
# ---------------------------------------------------------------------------


@lru_cache(maxsize=65536)
def _maxsat_cached(formulas, atom_cap):
    space = state_space(semantic_atoms(formulas), atom_cap)
    constraints = []
    for f in formulas:
        coeffs = list(linprog.formula_coefficients(space, f)) + [-ONE]
        constraints.append(LinearConstraint(coeffs, GE, ZERO))
    constraints.append(linprog.simplex_constraint(space, extra_vars=1))
    objective = [ZERO] * space.size + [ONE]
    outcome = linprog.solve(objective, "max", constraints)
    if not outcome.optimal:
        raise ProbconsError("maxsat LP must be feasible and bounded")
    model = from_witness(outcome.witness[: space.size], space.atoms)
    return outcome.value, model


def maxsat_with_witness(formulas, atom_cap=None):
    """Knight's threshold: the largest t with all members at probability >= t.

    Returns (value, witness model).  The optimum is always attained and
    rational; the empty set has maxsat 1 by convention (vacuous
    satisfaction), witnessed by the trivial one-state model.
    """
    formulas = dedup_formulas(formulas)
    if not formulas:
        return ONE, point_mass((), 0)
    return _maxsat_cached(formulas, atom_cap)


def maxsat(formulas, atom_cap=None):
    return maxsat_with_witness(formulas, atom_cap)[0]


def alpha_satisfiable(formulas, upset, atom_cap=None):
    """Can every member take a probability inside the upset at once?

    Satisfiable exactly when maxsat lands in the upset; the maxsat
    witness then realizes membership for every member simultaneously
    (upsets are upward closed and every probability sits at or above the
    optimum level).
    """
    value, model = maxsat_with_witness(formulas, atom_cap)
    if upset.contains(value):
        return SatResult(True, value, model)
    return SatResult(False, value, None)


def alpha_tautologous(formulas, upset, atom_cap=None):
    """Must some member take a probability inside the upset?

    Decided by duality: the set is alpha-tautologous exactly when its
    negation set is unsatisfiable in the dual upset.
    """
    res = alpha_satisfiable(negate_set(formulas), upset.dual(), atom_cap)
    return TautResult(not res.satisfiable, res)


# ---------------------------------------------------------------------------
# material consequence
# ---------------------------------------------------------------------------


def material_valid(argument, upset, atom_cap=None):
    """Every model must give conj(premises) -> disj(conclusions) a good
    probability; equivalent to that sentence being a classical tautology,
    independently of the upset.  Invalidity is witnessed by a point mass
    on a falsifying state, which drives the rolled-up sentence to
    probability 0.
    """
    rolled = Implies(big_conj(argument.premises), big_disj(argument.conclusions))
    space = state_space(semantic_atoms(argument), atom_cap)
    mask = space.denotation(rolled)
    if mask == space.full:
        return Verdict(
            True, ValidityWitness("classical-tautology"), "material", upset
        )
    model = point_mass(space.atoms, _lowest_state(space.full & ~mask))
    return _checked_invalid(model, argument, upset, "material")


# ---------------------------------------------------------------------------
# preservation consequence
# ---------------------------------------------------------------------------


def preservation_valid(argument, upset, atom_cap=None):
    """No model may put every premise inside the upset and every
    conclusion outside it.

    The extreme upsets are decided by their limit characterizations
    ({1}: supervaluationist; (0,1]: subvaluationist); every other upset
    by the slack-maximizing LP.
    """
    if upset == ONE_ONLY:
        return _preservation_at_one(argument, atom_cap)
    if upset == POSITIVE:
        return _preservation_at_positive(argument, atom_cap)
    return preservation_valid_lp(argument, upset, atom_cap)


@lru_cache(maxsize=16384)
def preservation_valid_lp(argument, upset, atom_cap=None):
    """Pure LP route for preservation, sound at every upset.

    Closed [x,1]: premises at probability >= x, conclusions <= x - eps,
    shared eps maximized; a counterexample exists iff the optimum is
    positive.  Open (x,1]: premises >= x + eps, conclusions <= x.  When
    the strict side is empty the system is a plain feasibility question.
    """
    space = state_space(semantic_atoms(argument), atom_cap)
    x = upset.threshold
    premises = argument.premises
    conclusions = argument.conclusions
    strict_side = conclusions if upset.closed else premises

    if not strict_side:
        items = (
            [(g, GE, x) for g in premises]
            if upset.closed
            else [(d, LE, x) for d in conclusions]
        )
        constraints = linprog.probability_constraints(items, space)
        outcome = linprog.solve([ZERO] * space.size, "max", constraints)
        if not outcome.optimal:
            return Verdict(
                True,
                ValidityWitness("lp-optimum", "infeasible"),
                "preservation",
                upset,
            )
        model = from_witness(outcome.witness, space.atoms)
        return _checked_invalid(model, argument, upset, "preservation")

    constraints = []
    for g in premises:
        coeffs = list(linprog.formula_coefficients(space, g))
        coeffs.append(ZERO if upset.closed else -ONE)
        constraints.append(LinearConstraint(coeffs, GE, x))
    for d in conclusions:
        coeffs = list(linprog.formula_coefficients(space, d))
        coeffs.append(ONE if upset.closed else ZERO)
        constraints.append(LinearConstraint(coeffs, LE, x))
    constraints.append(linprog.simplex_constraint(space, extra_vars=1))
    objective = [ZERO] * space.size + [ONE]
    outcome = linprog.solve(objective, "max", constraints)
    if outcome.status == "unbounded":
        raise ProbconsError("preservation LP cannot be unbounded")
    if not outcome.optimal or outcome.value <= 0:
        detail = outcome.value if outcome.optimal else "infeasible"
        return Verdict(
            True, ValidityWitness("lp-optimum", detail), "preservation", upset
        )
    model = from_witness(outcome.witness[: space.size], space.atoms)
    return _checked_invalid(model, argument, upset, "preservation")


def _preservation_at_one(argument, atom_cap=None):
    # {1}-preservation is supervaluationist validity; a counterexample
    # spreads mass uniformly over premise-satisfying states chosen to
    # dodge each conclusion.
    if sv_valid(argument, atom_cap):
        return Verdict(
            True,
            ValidityWitness("limit-theorem", "supervaluationist"),
            "preservation",
            ONE_ONLY,
        )
    space = state_space(semantic_atoms(argument), atom_cap)
    prem = space.full
    for g in argument.premises:
        prem &= space.denotation(g)
    chosen = [
        _lowest_state(prem & ~space.denotation(d) & space.full)
        for d in argument.conclusions
    ]
    if not chosen:
        chosen = [_lowest_state(prem)]
    model = _uniform_model(space.atoms, chosen)
    return _checked_invalid(model, argument, ONE_ONLY, "preservation")


def _preservation_at_positive(argument, atom_cap=None):
    # (0,1]-preservation is subvaluationist validity; a counterexample
    # puts all mass where no conclusion holds, touching every premise.
    if sub_valid(argument, atom_cap):
        return Verdict(
            True,
            ValidityWitness("limit-theorem", "subvaluationist"),
            "preservation",
            POSITIVE,
        )
    space = state_space(semantic_atoms(argument), atom_cap)
    nodisj = space.full
    for d in argument.conclusions:
        nodisj &= ~space.denotation(d)
    nodisj &= space.full
    chosen = [
        _lowest_state(space.denotation(g) & nodisj) for g in argument.premises
    ]
    if not chosen:
        chosen = [_lowest_state(nodisj)]
    model = _uniform_model(space.atoms, chosen)
    return _checked_invalid(model, argument, POSITIVE, "preservation")


# ---------------------------------------------------------------------------
# symmetric consequence
# ---------------------------------------------------------------------------


def symmetric_valid(argument, upset, atom_cap=None):
    """No model may put every premise inside the upset while every
    conclusion sits in its mirror image (symmetrically low).

    Reduces to alpha-unsatisfiability of premises plus negated
    conclusions; {1} is classical validity and (0,1] the
    contradictory-premise / tautologous-conclusion test.
    """
    if upset == ONE_ONLY:
        return _symmetric_at_one(argument, atom_cap)
    if upset == POSITIVE:
        return _symmetric_at_positive(argument, atom_cap)
    return symmetric_valid_lp(argument, upset, atom_cap)


@lru_cache(maxsize=16384)
def symmetric_valid_lp(argument, upset, atom_cap=None):
    """Pure LP route for symmetric consequence, sound at every upset."""
    joint = dedup_formulas(argument.premises + negate_set(argument.conclusions))
    res = alpha_satisfiable(joint, upset, atom_cap)
    if not res.satisfiable:
        return Verdict(
            True, ValidityWitness("lp-optimum", res.maxsat), "symmetric", upset
        )
    return _checked_invalid(res.witness, argument, upset, "symmetric")


def _symmetric_at_one(argument, atom_cap=None):
    if classical_valid(argument, atom_cap):
        return Verdict(
            True, ValidityWitness("limit-theorem", "classical"), "symmetric", ONE_ONLY
        )
    space = state_space(semantic_atoms(argument), atom_cap)
    prem = space.full
    for g in argument.premises:
        prem &= space.denotation(g)
    conc = 0
    for d in argument.conclusions:
        conc |= space.denotation(d)
    model = point_mass(space.atoms, _lowest_state(prem & ~conc & space.full))
    return _checked_invalid(model, argument, ONE_ONLY, "symmetric")


def _symmetric_at_positive(argument, atom_cap=None):
    space = state_space(semantic_atoms(argument), atom_cap)
    for g in argument.premises:
        if space.denotation(g) == 0:
            return Verdict(
                True,
                ValidityWitness("limit-theorem", "contradictory premise"),
                "symmetric",
                POSITIVE,
            )
    for d in argument.conclusions:
        if space.denotation(d) == space.full:
            return Verdict(
                True,
                ValidityWitness("limit-theorem", "tautologous conclusion"),
                "symmetric",
                POSITIVE,
            )
    chosen = [_lowest_state(space.denotation(g)) for g in argument.premises]
    chosen += [
        _lowest_state(space.full & ~space.denotation(d))
        for d in argument.conclusions
    ]
    if not chosen:
        chosen = [0]
    model = _uniform_model(space.atoms, chosen)
    return _checked_invalid(model, argument, POSITIVE, "symmetric")


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def decide(argument, upset, kind, atom_cap=None):
    """Route a query to the matching decider.

    Probabilistic kinds (material, preservation, symmetric) require an
    upset; classical kinds (classical, sv, sub) forbid one.  Classical
    verdicts still carry verified certificates, through the probabilistic
    gates they are equivalent to (classical = symmetric at {1}, sv =
    preservation at {1}, sub = preservation at (0,1]).
    """
    if kind in PROBABILISTIC_KINDS:
        if upset is None:
            raise ProbconsError(f"relation {kind!r} requires an upset")
        if kind == "material":
            return material_valid(argument, upset, atom_cap)
        if kind == "preservation":
            return preservation_valid(argument, upset, atom_cap)
        return symmetric_valid(argument, upset, atom_cap)
    if kind in CLASSICAL_KINDS:
        if upset is not None:
            raise ProbconsError(f"relation {kind!r} does not take an upset")
        if kind == "classical":
            inner = _symmetric_at_one(argument, atom_cap)
        elif kind == "sv":
            inner = _preservation_at_one(argument, atom_cap)
        else:
            inner = _preservation_at_positive(argument, atom_cap)
        return Verdict(inner.valid, inner.certificate, kind, None)
    raise ProbconsError(f"unknown relation kind {kind!r}")
