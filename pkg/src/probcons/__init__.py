"""Decision procedures for probabilistic consequence relations.

Finite Set-Set propositional arguments are judged against threshold sets
of good probabilities (upsets of [0, 1]) under three counterexample
notions: material (roll the argument into one conditional), preservation
(premises good, conclusions not good), and symmetric (premises good,
conclusions symmetrically bad).  All decisions run in exact rational
arithmetic over state-description probability models, and every invalid
verdict carries a counterexample model that is re-verified independently.
"""

from .analysis import (
    ComparisonReport,
    InvalidityReport,
    ProbeReport,
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
from .consequence import (
    CounterexampleModel,
    SatResult,
    TautResult,
    ValidityWitness,
    Verdict,
    alpha_satisfiable,
    alpha_tautologous,
    decide,
    material_valid,
    maxsat,
    maxsat_with_witness,
    preservation_valid,
    preservation_valid_lp,
    symmetric_valid,
    symmetric_valid_lp,
)
from .errors import (
    AtomCapError,
    CertificateError,
    DepthError,
    DimensionError,
    DomainError,
    EnumerationCapError,
    ParseError,
    PreconditionError,
    ProbconsError,
    UnknownAtomError,
    UpsetError,
)
from .formula import (
    BOTTOM,
    TOP,
    And,
    Argument,
    Atom,
    Formula,
    Implies,
    Not,
    Or,
    atoms,
    big_conj,
    big_disj,
    format_argument,
    format_formula,
    negate_set,
    parse_argument,
    parse_formula,
    parse_formula_list,
    semantic_atoms,
)
from .linprog import EQ, GE, LE, LinearConstraint, LPOutcome, solve
from .models import (
    ProbModel,
    from_witness,
    model_from_json_dict,
    point_mass,
    verify_counterexample,
)
from .rational import format_rational, parse_rational, rat, to_fraction
from .semantics import (
    DEFAULT_ATOM_CAP,
    MAX_ATOM_CAP,
    StateDescription,
    StateSpace,
    classical_valid,
    denotation,
    eval_formula,
    satisfiable,
    state_space,
    sub_valid,
    sv_valid,
    tautology,
)
from .upset import ONE_ONLY, POSITIVE, Downset, Upset, format_upset, parse_upset

__version__ = "0.1.0"
