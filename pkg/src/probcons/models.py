"""Finite probability models over state descriptions.

A model fixes an atom tuple and assigns an exact rational mass to each
state description index; the event algebra is the full power set of
states.  Models are built from LP witnesses and verified independently:
:func:`verify_counterexample` recomputes every probability by direct
truth-table evaluation (never through the LP machinery) and checks the
defining membership conditions of the counterexample notion.  Every
invalid verdict in the package passes through that gate.
"""

import re
from dataclasses import dataclass

from .errors import CertificateError, ParseError
from .formula import big_conj, big_disj, Implies
from .rational import ONE, ZERO, format_rational, parse_rational, rat
from .semantics import StateDescription, eval_formula


@dataclass(frozen=True)
class ProbModel:
    atom_list: tuple
    masses: dict  # state index -> positive mass; zero entries dropped

    def __init__(self, atom_list, masses):
        atom_list = tuple(atom_list)
        size = 1 << len(atom_list)
        clean = {}
        total = ZERO
        for index in sorted(masses):
            m = rat(masses[index])
            if not 0 <= index < size:
                raise CertificateError(f"state index {index} out of range")
            if m < 0:
                raise CertificateError("negative mass")
            if m > 0:
                clean[index] = m
                total += m
        if total != ONE:
            raise CertificateError(
                f"masses sum to {format_rational(total)}, expected 1"
            )
        object.__setattr__(self, "atom_list", atom_list)
        object.__setattr__(self, "masses", clean)

    def __eq__(self, other):
        if not isinstance(other, ProbModel):
            return NotImplemented
        return self.atom_list == other.atom_list and self.masses == other.masses

    def __hash__(self):
        return hash((self.atom_list, tuple(sorted(self.masses.items()))))

    def probability(self, formula):
        """p(formula): mass of the denotation, by per-state evaluation."""
        total = ZERO
        for index, mass in self.masses.items():
            if eval_formula(formula, StateDescription(self.atom_list, index)):
                total += mass
        return total

    def support(self):
        return tuple(sorted(self.masses))

    def state_label(self, index):
        return "".join(
            a for i, a in enumerate(self.atom_list) if (index >> i) & 1
        )

    def to_json_dict(self):
        return {
            "atoms": list(self.atom_list),
            "masses": [
                {"state": self.state_label(i), "mass": format_rational(m)}
                for i, m in sorted(self.masses.items())
            ],
        }

    def __str__(self):
        parts = ", ".join(
            f"{self.state_label(i) or '(none)'}: {format_rational(m)}"
            for i, m in sorted(self.masses.items())
        )
        return f"<ProbModel over {{{', '.join(self.atom_list)}}} {parts}>"


def from_witness(witness, atom_list):
    """Model from a full simplex point (one mass per state index)."""
    atom_list = tuple(atom_list)
    size = 1 << len(atom_list)
    if len(witness) != size:
        raise CertificateError(
            f"witness has {len(witness)} entries, expected {size}"
        )
    return ProbModel(atom_list, {i: w for i, w in enumerate(witness) if w != 0})


def point_mass(atom_list, index):
    return ProbModel(atom_list, {index: ONE})


def model_from_json_dict(data):
    """Inverse of :meth:`ProbModel.to_json_dict`."""
    try:
        atom_list = tuple(data["atoms"])
        entries = data["masses"]
    except (KeyError, TypeError):
        raise ParseError("model JSON must have 'atoms' and 'masses'") from None
    pattern = re.compile(
        "^" + "".join(f"({re.escape(a)})?" for a in atom_list) + "$"
    )
    masses = {}
    for entry in entries:
        m = pattern.match(entry["state"])
        if not m:
            raise ParseError(f"state label {entry['state']!r} does not match atoms")
        index = 0
        for i in range(len(atom_list)):
            if m.group(i + 1):
                index |= 1 << i
        masses[index] = masses.get(index, ZERO) + parse_rational(entry["mass"])
    return ProbModel(atom_list, masses)


def verify_counterexample(model, argument, upset, kind):
    """Does the model witness invalidity under the given notion?

    Recomputes all probabilities from the masses with independent
    arithmetic and checks the defining membership conditions:

    - material: the probability of conj(premises) -> disj(conclusions)
      falls outside the upset;
    - preservation: every premise probability is in the upset and every
      conclusion probability is outside it;
    - symmetric: every premise probability is in the upset and every
      conclusion probability is in its mirror image.
    """
    if kind == "material":
        rolled = Implies(big_conj(argument.premises), big_disj(argument.conclusions))
        return not upset.contains(model.probability(rolled))
    if kind == "preservation":
        return all(
            upset.contains(model.probability(g)) for g in argument.premises
        ) and all(
            not upset.contains(model.probability(d)) for d in argument.conclusions
        )
    if kind == "symmetric":
        low = upset.mirror()
        return all(
            upset.contains(model.probability(g)) for g in argument.premises
        ) and all(
            low.contains(model.probability(d)) for d in argument.conclusions
        )
    raise ValueError(f"unknown counterexample notion {kind!r}")
