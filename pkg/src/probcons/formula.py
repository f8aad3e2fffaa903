"""Propositional language: AST, parser, printer, and set-level helpers.

The primitive connectives are negation and disjunction; conjunction, the
material conditional, and the constants are defined constructors that
expand into the primitives at construction time.  The constants expand
over a reserved atom ``_t0`` that the concrete grammar cannot name, so
every formula in the language is evaluable while the primitive language
stays exactly {~, |}.

All structural operations (equality, printing, atom collection) run
iteratively: formulas may nest up to ``MAX_DEPTH`` deep and must not
exhaust the interpreter stack.
"""

import re
from dataclasses import dataclass

from .errors import DepthError, ParseError

MAX_DEPTH = 10**4

RESERVED_ATOM = "_t0"

_ATOM_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")

# Bare T / F are the constants in the grammar, so they cannot name atoms.
_FORBIDDEN_ATOMS = frozenset({"T", "F"})


class Formula:
    """Immutable propositional formula node.

    Subclasses: :class:`Atom`, :class:`Not`, :class:`Or`.  Each node
    caches its structural hash and depth at construction, so equality
    can short-circuit and deep formulas never recurse.
    """

    __slots__ = ("_hash", "_depth")

    def __setattr__(self, name, value):
        raise AttributeError("Formula objects are immutable")

    def _init(self, depth, hashval):
        if depth > MAX_DEPTH:
            raise DepthError(f"formula depth exceeds cap of {MAX_DEPTH}")
        object.__setattr__(self, "_depth", depth)
        object.__setattr__(self, "_hash", hashval)

    @property
    def depth(self):
        return self._depth

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Formula):
            return NotImplemented
        if self._hash != other._hash:
            return False
        stack = [(self, other)]
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            if type(a) is not type(b) or a._hash != b._hash:
                return False
            if type(a) is Atom:
                if a.name != b.name:
                    return False
            elif type(a) is Not:
                stack.append((a.child, b.child))
            else:
                stack.append((a.left, b.left))
                stack.append((a.right, b.right))
        return True

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return f"<Formula {format_formula(self)}>"

    def __str__(self):
        return format_formula(self)


class Atom(Formula):
    __slots__ = ("name",)

    def __init__(self, name):
        if name != RESERVED_ATOM and (
            not _ATOM_RE.fullmatch(name) or name in _FORBIDDEN_ATOMS
        ):
            raise ParseError(f"illegal atom name {name!r}")
        object.__setattr__(self, "name", name)
        self._init(1, hash(("atom", name)))


class Not(Formula):
    __slots__ = ("child",)

    def __init__(self, child):
        _require_formula(child)
        object.__setattr__(self, "child", child)
        self._init(child._depth + 1, hash(("not", child._hash)))


class Or(Formula):
    __slots__ = ("left", "right")

    def __init__(self, left, right):
        _require_formula(left)
        _require_formula(right)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        self._init(
            max(left._depth, right._depth) + 1,
            hash(("or", left._hash, right._hash)),
        )


def _require_formula(x):
    if not isinstance(x, Formula):
        raise TypeError(f"expected Formula, got {type(x).__name__}")


def And(left, right):
    """a & b, expanded as ~(~a | ~b)."""
    return Not(Or(Not(left), Not(right)))


def Implies(left, right):
    """a -> b, expanded as ~a | b."""
    return Or(Not(left), right)


TOP = Or(Atom(RESERVED_ATOM), Not(Atom(RESERVED_ATOM)))
BOTTOM = Not(TOP)


def subformulas(formula):
    """Iterative post-order traversal (children before parents)."""
    out = []
    stack = [formula]
    while stack:
        node = stack.pop()
        out.append(node)
        if type(node) is Not:
            stack.append(node.child)
        elif type(node) is Or:
            stack.append(node.right)
            stack.append(node.left)
    out.reverse()
    return out


def atoms(x):
    """Sorted, duplicate-free tuple of atom names occurring in ``x``.

    ``x`` may be a Formula, an Argument, or an iterable of formulas.  The
    reserved atom is reported when it occurs (the constants carry it).
    """
    names = set()
    for f in _formulas_of(x):
        stack = [f]
        while stack:
            node = stack.pop()
            if type(node) is Atom:
                names.add(node.name)
            elif type(node) is Not:
                stack.append(node.child)
            else:
                stack.append(node.left)
                stack.append(node.right)
    return tuple(sorted(names))


def semantic_atoms(x):
    """Atoms of ``x`` minus the reserved constant atom.

    State spaces and probability models range over these: the reserved
    atom is fixed false in evaluation and never affects any probability,
    so it is kept out of emitted models.
    """
    return tuple(a for a in atoms(x) if a != RESERVED_ATOM)


def _formulas_of(x):
    if isinstance(x, Formula):
        return (x,)
    if isinstance(x, Argument):
        return x.premises + x.conclusions
    return tuple(x)


def dedup_formulas(formulas):
    """Tuple of formulas, syntactic duplicates dropped, first-seen order."""
    seen = set()
    out = []
    for f in formulas:
        _require_formula(f)
        if f not in seen:
            seen.add(f)
            out.append(f)
    return tuple(out)


@dataclass(frozen=True)
class Argument:
    """A Set-Set argument: finite premise and conclusion sets.

    Both sides are deduplicated syntactically and keep first-appearance
    order.  Either side may be empty.
    """

    premises: tuple
    conclusions: tuple

    def __init__(self, premises=(), conclusions=()):
        object.__setattr__(self, "premises", dedup_formulas(premises))
        object.__setattr__(self, "conclusions", dedup_formulas(conclusions))

    def __str__(self):
        return format_argument(self)

    def __repr__(self):
        return f"<Argument {format_argument(self)}>"


def negate_set(formulas):
    """{~s : s in S}, deduplicated.  No double-negation elimination."""
    return dedup_formulas(Not(f) for f in dedup_formulas(formulas))


def big_conj(formulas):
    """Left-folded conjunction in set order; empty conjunction is T."""
    items = dedup_formulas(formulas)
    if not items:
        return TOP
    acc = items[0]
    for f in items[1:]:
        acc = And(acc, f)
    return acc


def big_disj(formulas):
    """Left-folded disjunction in set order; empty disjunction is F."""
    items = dedup_formulas(formulas)
    if not items:
        return BOTTOM
    acc = items[0]
    for f in items[1:]:
        acc = Or(acc, f)
    return acc


# ---------------------------------------------------------------------------
# Concrete syntax
#
# atom  = [a-zA-Z][a-zA-Z0-9_]*   (excluding bare T and F)
# unary ~, binary & | ->, constants T F, parentheses
# precedence ~ > & > | > ->, with -> right-associative, & and | left
# argument:  premises "|-" conclusions, each side a comma list (maybe empty)
# ---------------------------------------------------------------------------

_TOKEN_SPEC = [
    ("WS", re.compile(r"\s+")),
    ("NAME", re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")),
    ("IMPLIES", re.compile(r"->")),
    ("TURNSTILE", re.compile(r"\|-")),
    ("OR", re.compile(r"\|")),
    ("AND", re.compile(r"&")),
    ("NOT", re.compile(r"~")),
    ("LPAREN", re.compile(r"\(")),
    ("RPAREN", re.compile(r"\)")),
    ("COMMA", re.compile(r",")),
]


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        for kind, pattern in _TOKEN_SPEC:
            m = pattern.match(text, pos)
            if m:
                if kind != "WS":
                    tokens.append((kind, m.group(), pos))
                pos = m.end()
                break
        else:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
    tokens.append(("END", "", n))
    return tokens


_PRECEDENCE = {"NOT": 4, "AND": 3, "OR": 2, "IMPLIES": 1}
_RIGHT_ASSOC = {"IMPLIES"}


def _apply(op, operands, pos):
    if op == "NOT":
        if not operands:
            raise ParseError("missing operand for '~'", pos)
        operands.append(Not(operands.pop()))
        return
    if len(operands) < 2:
        raise ParseError("missing operand", pos)
    right = operands.pop()
    left = operands.pop()
    if op == "AND":
        operands.append(And(left, right))
    elif op == "OR":
        operands.append(Or(left, right))
    else:
        operands.append(Implies(left, right))


def _parse_tokens(tokens):
    """Shunting-yard over a token slice; builds the AST bottom-up.

    Iterative on purpose: formulas near the depth cap must parse without
    recursing.
    """
    if not tokens:
        raise ParseError("empty formula")
    operands = []
    operators = []  # (op name or "LPAREN", position)
    expect_operand = True
    for kind, value, pos in tokens:
        if expect_operand:
            if kind == "NAME":
                if value == "T":
                    operands.append(TOP)
                elif value == "F":
                    operands.append(BOTTOM)
                else:
                    operands.append(Atom(value))
                expect_operand = False
            elif kind == "NOT":
                operators.append(("NOT", pos))
            elif kind == "LPAREN":
                operators.append(("LPAREN", pos))
            else:
                raise ParseError(f"expected a formula, found {value!r}", pos)
        else:
            if kind in ("AND", "OR", "IMPLIES"):
                prec = _PRECEDENCE[kind]
                while operators and operators[-1][0] != "LPAREN":
                    top, tpos = operators[-1]
                    tprec = _PRECEDENCE[top]
                    if tprec > prec or (tprec == prec and kind not in _RIGHT_ASSOC):
                        operators.pop()
                        _apply(top, operands, tpos)
                    else:
                        break
                operators.append((kind, pos))
                expect_operand = True
            elif kind == "RPAREN":
                while operators and operators[-1][0] != "LPAREN":
                    top, tpos = operators.pop()
                    _apply(top, operands, tpos)
                if not operators:
                    raise ParseError("unbalanced ')'", pos)
                operators.pop()
                expect_operand = False
            else:
                raise ParseError(f"expected an operator, found {value!r}", pos)
    if expect_operand:
        raise ParseError("formula ends where an operand was expected", tokens[-1][2])
    while operators:
        top, tpos = operators.pop()
        if top == "LPAREN":
            raise ParseError("unbalanced '('", tpos)
        _apply(top, operands, tpos)
    if len(operands) != 1:
        raise ParseError("malformed formula", tokens[0][2])
    return operands[0]


def parse_formula(text):
    """Parse a formula in the ASCII grammar."""
    tokens = _tokenize(text)
    body = [t for t in tokens if t[0] != "END"]
    for kind, value, pos in body:
        if kind in ("TURNSTILE", "COMMA"):
            raise ParseError(f"unexpected {value!r} in formula", pos)
    return _parse_tokens(body)


def _split_on(tokens, kind):
    parts = []
    current = []
    for tok in tokens:
        if tok[0] == kind:
            parts.append((current, tok[2]))
            current = []
        else:
            current.append(tok)
    parts.append((current, None))
    return parts


def parse_formula_list(text):
    """Parse a comma-separated list of formulas (possibly empty)."""
    tokens = [t for t in _tokenize(text) if t[0] != "END"]
    for kind, value, pos in tokens:
        if kind == "TURNSTILE":
            raise ParseError("unexpected '|-' in formula list", pos)
    if not tokens:
        return ()
    out = []
    for part, sep_pos in _split_on(tokens, "COMMA"):
        if not part:
            where = sep_pos if sep_pos is not None else 0
            raise ParseError("empty formula in list", where)
        out.append(_parse_tokens(part))
    return dedup_formulas(out)


def parse_argument(text):
    """Parse ``"g1, ..., gm |- d1, ..., dn"``; either side may be empty."""
    tokens = [t for t in _tokenize(text) if t[0] != "END"]
    splits = [i for i, t in enumerate(tokens) if t[0] == "TURNSTILE"]
    if not splits:
        raise ParseError("argument must contain '|-'")
    if len(splits) > 1:
        raise ParseError("argument contains more than one '|-'", tokens[splits[1]][2])
    i = splits[0]
    return Argument(
        _parse_side(tokens[:i]),
        _parse_side(tokens[i + 1 :]),
    )


def _parse_side(tokens):
    if not tokens:
        return ()
    out = []
    for part, sep_pos in _split_on(tokens, "COMMA"):
        if not part:
            where = sep_pos if sep_pos is not None else tokens[0][2]
            raise ParseError("empty formula in argument side", where)
        out.append(_parse_tokens(part))
    return tuple(out)


# ---------------------------------------------------------------------------
# Printing.  parse(format(f)) is structurally identical to f: the printer
# recognizes the defined-constructor patterns (T, F, &) and prints them in
# sugar form, which re-expands to the same primitives.  The conditional is
# printed primitively as ~a | b, which parses back identically.
# ---------------------------------------------------------------------------

_PREC_ATOM = 5
_PREC_NOT = 4
_PREC_AND = 3
_PREC_OR = 2


def _match_and(f):
    if (
        type(f) is Not
        and type(f.child) is Or
        and type(f.child.left) is Not
        and type(f.child.right) is Not
    ):
        return f.child.left.child, f.child.right.child
    return None


def format_formula(formula):
    """Minimal-parenthesis ASCII rendering."""
    text, _ = _render(formula)
    return text


def _render(formula):
    # Iterative post-order rendering; returns (text, precedence) per node.
    results = {}
    stack = [(formula, False)]
    while stack:
        node, processed = stack.pop()
        if id(node) in results:
            continue
        if node == TOP:
            results[id(node)] = ("T", _PREC_ATOM)
            continue
        if node == BOTTOM:
            results[id(node)] = ("F", _PREC_ATOM)
            continue
        if type(node) is Atom:
            results[id(node)] = (node.name, _PREC_ATOM)
            continue
        conj = _match_and(node)
        if not processed:
            stack.append((node, True))
            if conj is not None:
                stack.append((conj[0], False))
                stack.append((conj[1], False))
            elif type(node) is Not:
                stack.append((node.child, False))
            else:
                stack.append((node.left, False))
                stack.append((node.right, False))
            continue
        if conj is not None:
            lt, lp = results[id(conj[0])]
            rt, rp = results[id(conj[1])]
            left = lt if lp >= _PREC_AND else f"({lt})"
            right = rt if rp > _PREC_AND else f"({rt})"
            results[id(node)] = (f"{left} & {right}", _PREC_AND)
        elif type(node) is Not:
            ct, cp = results[id(node.child)]
            child = ct if cp >= _PREC_NOT else f"({ct})"
            results[id(node)] = (f"~{child}", _PREC_NOT)
        else:
            lt, lp = results[id(node.left)]
            rt, rp = results[id(node.right)]
            left = lt if lp >= _PREC_OR else f"({lt})"
            right = rt if rp > _PREC_OR else f"({rt})"
            results[id(node)] = (f"{left} | {right}", _PREC_OR)
    return results[id(formula)]


def format_formula_list(formulas):
    return ", ".join(format_formula(f) for f in formulas)


def format_argument(argument):
    left = format_formula_list(argument.premises)
    right = format_formula_list(argument.conclusions)
    return f"{left} |- {right}".strip()
