"""Exact rational linear programming over probability vectors.

A deliberately small two-phase primal simplex with Bland's anti-cycling
rule, run entirely in exact rational arithmetic.  All variables are
implicitly nonnegative, which fits every system built here: probability
masses, the shared strictness slack, and the satisfiability level are all
nonnegative by construction.  Strict inequalities never reach the solver;
callers encode them through a maximized slack variable.

Determinism: entering column is the lowest-index improving column,
leaving row is the lowest basic index among minimum-ratio ties, so a
fixed input always yields the same optimum and the same basic witness.
"""

from dataclasses import dataclass

from .errors import DimensionError
from .rational import ONE, ZERO, rat

GE = ">="
LE = "<="
EQ = "=="

_RELATIONS = (GE, LE, EQ)


@dataclass(frozen=True)
class LinearConstraint:
    coefficients: tuple
    relation: str
    bound: object

    def __init__(self, coefficients, relation, bound):
        if relation not in _RELATIONS:
            raise DimensionError(f"unsupported relation {relation!r}")
        object.__setattr__(
            self, "coefficients", tuple(rat(c) for c in coefficients)
        )
        object.__setattr__(self, "relation", relation)
        object.__setattr__(self, "bound", rat(bound))


@dataclass(frozen=True)
class LPOutcome:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: object = None
    witness: tuple = None

    @property
    def optimal(self):
        return self.status == "optimal"


def solve(objective, sense, constraints):
    """Maximize or minimize objective . x subject to the constraints, x >= 0.

    Returns an :class:`LPOutcome`; optimal outcomes carry the exact value
    and a basic witness restricted to the structural variables.
    """
    n = len(objective)
    obj = [rat(c) for c in objective]
    if sense == "min":
        obj = [-c for c in obj]
    elif sense != "max":
        raise DimensionError(f"sense must be 'max' or 'min', got {sense!r}")

    rows = []
    for lc in constraints:
        if len(lc.coefficients) != n:
            raise DimensionError(
                f"constraint has {len(lc.coefficients)} coefficients, expected {n}"
            )
        coeffs = list(lc.coefficients)
        rel, b = lc.relation, lc.bound
        if b < 0:
            coeffs = [-c for c in coeffs]
            b = -b
            rel = {GE: LE, LE: GE, EQ: EQ}[rel]
        rows.append((coeffs, rel, b))

    m = len(rows)
    n_slack = sum(1 for _, rel, _ in rows if rel != EQ)
    slack_start = n
    art_start = n + n_slack

    tableau = []
    basis = []
    n_art = 0
    slack_i = 0
    for coeffs, rel, b in rows:
        row = coeffs + [ZERO] * (n_slack + m) + [b]
        if rel == LE:
            row[slack_start + slack_i] = ONE
            basis.append(slack_start + slack_i)
            slack_i += 1
        else:
            if rel == GE:
                row[slack_start + slack_i] = -ONE
                slack_i += 1
            row[art_start + n_art] = ONE
            basis.append(art_start + n_art)
            n_art += 1
        tableau.append(row)
    ncols = art_start + n_art
    tableau = [row[:ncols] + [row[-1]] for row in tableau]

    if n_art:
        # Phase 1: maximize minus the sum of artificials; feasible iff the
        # optimum is 0.  The cost row is priced out over the artificial basis.
        cost = [ZERO] * ncols
        value = ZERO
        for i, b in enumerate(basis):
            if b >= art_start:
                row = tableau[i]
                for j in range(ncols):
                    cost[j] += row[j]
                value -= row[-1]
        for j in range(art_start, ncols):
            cost[j] = ZERO
        value = _run_simplex(tableau, basis, cost, value, art_start)
        if value < 0:
            return LPOutcome("infeasible")
        _expel_artificials(tableau, basis, art_start)
        keep = [i for i, b in enumerate(basis) if b < art_start]
        tableau = [tableau[i][:art_start] + [tableau[i][-1]] for i in keep]
        basis = [basis[i] for i in keep]
        ncols = art_start

    # Phase 2: the real objective, priced out over the current basis.
    cost = obj + [ZERO] * (ncols - n)
    value = ZERO
    for i, b in enumerate(basis):
        cb = cost[b]
        if cb != 0:
            row = tableau[i]
            for j in range(ncols):
                cost[j] -= cb * row[j]
            value += cb * row[-1]
    value = _run_simplex(tableau, basis, cost, value, ncols)
    if value is None:
        return LPOutcome("unbounded")

    witness = [ZERO] * n
    for i, b in enumerate(basis):
        if b < n:
            witness[b] = tableau[i][-1]
    if sense == "min":
        value = -value
    return LPOutcome("optimal", value, tuple(witness))


def _run_simplex(tableau, basis, cost, value, allowed):
    """Pivot to optimality under Bland's rule.

    Only columns below ``allowed`` may enter (phase 1 excludes the
    artificial columns from entering once expelled).  Returns the final
    objective value, or None if the objective is unbounded above.
    """
    while True:
        enter = -1
        for j in range(allowed):
            if cost[j] > 0:
                enter = j
                break
        if enter < 0:
            return value
        leave = -1
        best = None
        for i, row in enumerate(tableau):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and basis[i] < basis[leave])
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            return None
        value += cost[enter] * _pivot(tableau, basis, cost, leave, enter)
    # unreachable


def _pivot(tableau, basis, cost, r, e):
    """Make column e basic in row r; returns the new basic value."""
    row = tableau[r]
    piv = row[e]
    if piv != 1:
        inv = 1 / piv
        tableau[r] = row = [x * inv for x in row]
    for i, other in enumerate(tableau):
        if i != r:
            f = other[e]
            if f != 0:
                tableau[i] = [a - f * b for a, b in zip(other, row)]
    f = cost[e]
    if f != 0:
        for j in range(len(cost)):
            cost[j] -= f * row[j]
    basis[r] = e
    return row[-1]


def _expel_artificials(tableau, basis, art_start):
    """Drive zero-valued artificial variables out of the basis.

    After a feasible phase 1 every basic artificial sits at value 0; pivot
    each onto any real column with a nonzero entry (a degenerate pivot
    keeps feasibility regardless of the entry's sign).  Rows with no such
    column are redundant constraints and are left for the caller to drop.
    """
    dummy_cost = [ZERO] * (len(tableau[0]) - 1)
    for r, b in enumerate(basis):
        if b >= art_start:
            row = tableau[r]
            for j in range(art_start):
                if row[j] != 0:
                    _pivot(tableau, basis, dummy_cost, r, j)
                    break


def formula_coefficients(space, formula):
    """Indicator vector over the state space: 1 on the denotation."""
    mask = space.denotation(formula)
    return tuple(ONE if (mask >> s) & 1 else ZERO for s in range(space.size))


def simplex_constraint(space, extra_vars=0):
    """Masses sum to one (extra variables do not participate)."""
    coeffs = (ONE,) * space.size + (ZERO,) * extra_vars
    return LinearConstraint(coeffs, EQ, ONE)


def probability_constraints(items, space):
    """Constraints p(formula) REL bound for each item, plus sum-to-one.

    ``items`` is an iterable of (formula, relation, bound) triples over
    the given state space.  Nonnegativity of the masses is implicit in
    the solver.
    """
    out = [
        LinearConstraint(formula_coefficients(space, f), rel, rat(bound))
        for f, rel, bound in items
    ]
    out.append(simplex_constraint(space))
    return out
