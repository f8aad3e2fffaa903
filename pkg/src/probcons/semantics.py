"""Classical truth-table engine over state descriptions.

A state description over atoms (a1, ..., an) is a full assignment of
truth values, indexed by the integer whose i-th bit gives the value of
ai.  Denotations are computed as 2^n-bit masks (bit s set iff the formula
is true at state s), which keeps validity checks to a handful of big-int
operations.  Single-state evaluation walks the AST directly instead; the
two routes are independent, and counterexample verification deliberately
uses the slow one.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import AtomCapError, UnknownAtomError
from .formula import (
    RESERVED_ATOM,
    Argument,
    Atom,
    Not,
    Or,
    big_conj,
    negate_set,
    semantic_atoms,
)

DEFAULT_ATOM_CAP = 16
MAX_ATOM_CAP = 24


def check_atom_cap(atom_list, atom_cap=None):
    cap = DEFAULT_ATOM_CAP if atom_cap is None else atom_cap
    if cap > MAX_ATOM_CAP:
        raise AtomCapError(f"atom cap {cap} exceeds hard maximum {MAX_ATOM_CAP}")
    if len(atom_list) > cap:
        raise AtomCapError(
            f"query over {len(atom_list)} atoms exceeds cap {cap}; "
            f"raise the cap (max {MAX_ATOM_CAP}) to proceed"
        )
    return tuple(atom_list)


@dataclass(frozen=True)
class StateDescription:
    """One full assignment over a fixed atom tuple."""

    atom_list: tuple
    index: int

    def __post_init__(self):
        if not 0 <= self.index < (1 << len(self.atom_list)):
            raise ValueError("state index out of range for atom list")

    def value(self, name):
        if name == RESERVED_ATOM:
            return False
        try:
            i = self.atom_list.index(name)
        except ValueError:
            raise UnknownAtomError(f"atom {name!r} not in state atom list") from None
        return bool((self.index >> i) & 1)

    def assignment(self):
        return {a: bool((self.index >> i) & 1) for i, a in enumerate(self.atom_list)}

    def true_atoms(self):
        return tuple(a for i, a in enumerate(self.atom_list) if (self.index >> i) & 1)


class StateSpace:
    """All state descriptions over a fixed atom tuple, with mask caching."""

    def __init__(self, atom_list, atom_cap=None):
        self.atoms = check_atom_cap(tuple(atom_list), atom_cap)
        self.n = len(self.atoms)
        self.size = 1 << self.n
        self.full = (1 << self.size) - 1
        self._atom_masks = {}
        self._index = {a: i for i, a in enumerate(self.atoms)}

    def _atom_mask(self, name):
        mask = self._atom_masks.get(name)
        if mask is None:
            if name == RESERVED_ATOM and name not in self._index:
                mask = 0  # reserved atom is fixed false
            else:
                i = self._index.get(name)
                if i is None:
                    raise UnknownAtomError(f"atom {name!r} not in state space")
                mask = 0
                for s in range(self.size):
                    if (s >> i) & 1:
                        mask |= 1 << s
            self._atom_masks[name] = mask
        return mask

    def denotation(self, formula):
        """Bit mask of the states where the formula holds."""
        results = {}
        stack = [(formula, False)]
        while stack:
            node, processed = stack.pop()
            if id(node) in results:
                continue
            if type(node) is Atom:
                results[id(node)] = self._atom_mask(node.name)
            elif not processed:
                stack.append((node, True))
                if type(node) is Not:
                    stack.append((node.child, False))
                else:
                    stack.append((node.left, False))
                    stack.append((node.right, False))
            elif type(node) is Not:
                results[id(node)] = self.full & ~results[id(node.child)]
            else:
                results[id(node)] = results[id(node.left)] | results[id(node.right)]
        return results[id(formula)]

    def denotation_states(self, formula):
        mask = self.denotation(formula)
        return tuple(s for s in range(self.size) if (mask >> s) & 1)

    def state(self, index):
        return StateDescription(self.atoms, index)


@lru_cache(maxsize=256)
def _cached_space(atom_list, atom_cap):
    return StateSpace(atom_list, atom_cap)


def state_space(atom_list, atom_cap=None):
    return _cached_space(tuple(atom_list), atom_cap)


def eval_formula(formula, state):
    """Truth of a formula at a state description.

    Walks the AST node by node; does not touch the mask machinery (this
    is the independent arithmetic used to verify certificates).
    """
    results = {}
    stack = [(formula, False)]
    while stack:
        node, processed = stack.pop()
        if id(node) in results:
            continue
        if type(node) is Atom:
            results[id(node)] = state.value(node.name)
        elif not processed:
            stack.append((node, True))
            if type(node) is Not:
                stack.append((node.child, False))
            else:
                stack.append((node.left, False))
                stack.append((node.right, False))
        elif type(node) is Not:
            results[id(node)] = not results[id(node.child)]
        else:
            results[id(node)] = results[id(node.left)] or results[id(node.right)]
    return results[id(formula)]


def denotation(formula, atom_list, atom_cap=None):
    """State indices over ``atom_list`` where the formula is true."""
    return state_space(atom_list, atom_cap).denotation_states(formula)


def _space_for(argument, atom_cap=None):
    return state_space(semantic_atoms(argument), atom_cap)


def classical_valid(argument, atom_cap=None):
    """No state satisfies every premise and no conclusion."""
    space = _space_for(argument, atom_cap)
    prem = space.full
    for g in argument.premises:
        prem &= space.denotation(g)
    conc = 0
    for d in argument.conclusions:
        conc |= space.denotation(d)
    return prem & ~conc & space.full == 0


def tautology(formula, atom_cap=None):
    space = state_space(semantic_atoms(formula), atom_cap)
    return space.denotation(formula) == space.full


def satisfiable(formula, atom_cap=None):
    space = state_space(semantic_atoms(formula), atom_cap)
    return space.denotation(formula) != 0


def sv_valid(argument, atom_cap=None):
    """Supervaluationist validity: preservation of truth-at-every-world.

    Decided classically: the premises are jointly unsatisfiable, or some
    single conclusion follows classically from the premises.
    """
    if not satisfiable(big_conj(argument.premises), atom_cap):
        return True
    return any(
        classical_valid(Argument(argument.premises, (d,)), atom_cap)
        for d in argument.conclusions
    )


def sub_valid(argument, atom_cap=None):
    """Subvaluationist validity, via classical self-duality.

    An argument is sV-valid iff its dual (negated conclusions entailing
    negated premises) is SV-valid.
    """
    dual = Argument(negate_set(argument.conclusions), negate_set(argument.premises))
    return sv_valid(dual, atom_cap)
