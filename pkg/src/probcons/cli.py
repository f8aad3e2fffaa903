"""Command-line front end.

Subcommands: check, maxsat, counterexample, classify, compare, fixtures,
probe.  Exit codes: 0 = query answered (valid and invalid alike), 2 =
usage or parse error, 3 = resource cap exceeded.  Arguments can be read
from stdin (one per line) by passing ``-`` or omitting the positional.

All probabilities print as exact rationals; human output adds a decimal
approximation in parentheses.  Identical queries produce byte-identical
output.
"""

import argparse
import json
import sys

from . import analysis
from .consequence import (
    CLASSICAL_KINDS,
    PROBABILISTIC_KINDS,
    CounterexampleModel,
    decide,
    maxsat_with_witness,
)
from .errors import (
    AtomCapError,
    CertificateError,
    EnumerationCapError,
    ParseError,
    ProbconsError,
)
from .formula import format_argument, parse_argument, parse_formula_list
from .models import model_from_json_dict, verify_counterexample
from .rational import format_rational
from .semantics import MAX_ATOM_CAP
from .upset import ONE_ONLY, POSITIVE, format_upset, parse_upset

USAGE_ERROR = 2
RESOURCE_ERROR = 3

_RELATION_ALIASES = {
    "material": "material",
    "preservation": "preservation",
    "symmetric": "symmetric",
    "classical": "classical",
    "sv": "sv",
    "supervaluational": "sv",
    "sub": "sub",
    "subvaluational": "sub",
}


def _decimal(value):
    return f"{float(value):.6g}"


def _rat_human(value):
    return f"{format_rational(value)} ({_decimal(value)})"


def _model_json(model):
    return model.to_json_dict()


def _model_human(model, indent="  "):
    lines = []
    for index, mass in sorted(model.masses.items()):
        label = model.state_label(index) or "(all false)"
        lines.append(f"{indent}state {label}: {_rat_human(mass)}")
    return lines


def _certificate_json(verdict):
    cert = verdict.certificate
    if isinstance(cert, CounterexampleModel):
        return {"type": "counterexample", "model": _model_json(cert.model)}
    detail = cert.detail
    if detail is not None and not isinstance(detail, str):
        detail = format_rational(detail)
    return {"type": "validity", "kind": cert.kind, "detail": detail}


def _verdict_json(verdict, argument):
    out = {
        "argument": format_argument(argument),
        "relation": verdict.relation,
        "valid": verdict.valid,
        "certificate": _certificate_json(verdict),
    }
    out["upset"] = format_upset(verdict.upset) if verdict.upset is not None else None
    return out


def _verdict_human(verdict, argument):
    where = f" at {format_upset(verdict.upset)}" if verdict.upset is not None else ""
    head = "VALID" if verdict.valid else "INVALID"
    lines = [f"{head}: {format_argument(argument)} [{verdict.relation}{where}]"]
    cert = verdict.certificate
    if isinstance(cert, CounterexampleModel):
        lines.append("counterexample model:")
        lines.extend(_model_human(cert.model))
        for label, side in (
            ("premise", argument.premises),
            ("conclusion", argument.conclusions),
        ):
            for f in side:
                p = cert.model.probability(f)
                lines.append(f"  p({f}) = {_rat_human(p)}  [{label}]")
    else:
        detail = cert.detail
        if detail is not None and not isinstance(detail, str):
            detail = format_rational(detail)
        why = f"{cert.kind}" + (f": {detail}" if detail is not None else "")
        lines.append(f"certificate: {why}")
    return "\n".join(lines)


def _reverify(verdict, argument):
    """Round-trip the emitted model through JSON and re-verify it."""
    cert = verdict.certificate
    if not isinstance(cert, CounterexampleModel):
        return
    kind = verdict.relation
    upset = verdict.upset
    if kind in CLASSICAL_KINDS:
        # Classical verdicts verify through their probabilistic equivalents.
        kind, upset = {
            "classical": ("symmetric", ONE_ONLY),
            "sv": ("preservation", ONE_ONLY),
            "sub": ("preservation", POSITIVE),
        }[verdict.relation]
    recovered = model_from_json_dict(
        json.loads(json.dumps(_model_json(cert.model)))
    )
    if not verify_counterexample(recovered, argument, upset, kind):
        raise CertificateError("re-verification of emitted model failed")


def _iter_argument_texts(args):
    if args.argument is None or args.argument == "-":
        for line in sys.stdin:
            line = line.strip()
            if line:
                yield line
    else:
        yield args.argument


def _parse_relation(text):
    kind = _RELATION_ALIASES.get(text)
    if kind is None:
        raise ParseError(f"unknown relation {text!r}")
    return kind


def _resolve_upset(args, kind):
    if kind in PROBABILISTIC_KINDS:
        if not args.upset:
            raise ParseError(f"relation {kind!r} requires --upset")
        return parse_upset(args.upset)
    if args.upset:
        raise ParseError(f"relation {kind!r} does not take --upset")
    return None


def _cmd_check(args, out):
    kind = _parse_relation(args.relation)
    upset = _resolve_upset(args, kind)
    for text in _iter_argument_texts(args):
        argument = parse_argument(text)
        verdict = decide(argument, upset, kind, args.atom_cap)
        if args.verify:
            _reverify(verdict, argument)
        if args.format == "json":
            out(json.dumps(_verdict_json(verdict, argument)))
        else:
            out(_verdict_human(verdict, argument))
    return 0


def _cmd_counterexample(args, out):
    kind = _parse_relation(args.relation)
    upset = _resolve_upset(args, kind)
    for text in _iter_argument_texts(args):
        argument = parse_argument(text)
        verdict = decide(argument, upset, kind, args.atom_cap)
        if args.verify:
            _reverify(verdict, argument)
        if verdict.valid:
            out("VALID" if args.format == "human" else json.dumps({"valid": True}))
        elif args.format == "json":
            out(json.dumps(_model_json(verdict.model)))
        else:
            out("\n".join(_model_human(verdict.model, indent="")))
    return 0


def _cmd_maxsat(args, out):
    formulas = parse_formula_list(args.formulas)
    value, model = maxsat_with_witness(formulas, args.atom_cap)
    if args.format == "json":
        out(
            json.dumps(
                {
                    "formulas": [str(f) for f in formulas],
                    "maxsat": format_rational(value),
                    "witness": _model_json(model),
                }
            )
        )
    else:
        out(format_rational(value))
    return 0


def _cmd_classify(args, out):
    upset = parse_upset(args.upset) if args.upset else None
    if upset is None:
        raise ParseError("classify requires --upset")
    for text in _iter_argument_texts(args):
        argument = parse_argument(text)
        report = analysis.classify_preservation_invalidity(
            argument, upset, args.atom_cap
        )
        if args.format == "json":
            out(json.dumps(report.to_json_dict()))
        else:
            rules = ", ".join(report.applicable_rules) or "none"
            out(f"{format_argument(argument)} at {format_upset(upset)}")
            out(f"  applicable rules: {rules}")
            out(f"  guaranteed invalid for: {report.guaranteed_invalid_for}")
    return 0


def _cmd_compare(args, out):
    kind = _parse_relation(args.relation)
    if kind not in PROBABILISTIC_KINDS:
        raise ParseError("compare needs a probabilistic relation")
    upset_a = parse_upset(args.upset) if args.upset else None
    upset_b = parse_upset(args.upset2) if args.upset2 else None
    if upset_a is None or upset_b is None:
        raise ParseError("compare requires --upset and --upset2")
    if args.argument is None:
        arguments = analysis.incomparability_fixtures()
    else:
        arguments = tuple(
            parse_argument(text) for text in _iter_argument_texts(args)
        )
    report = analysis.compare_relations(
        arguments, upset_a, upset_b, kind, args.atom_cap
    )
    if args.format == "json":
        out(json.dumps(report.to_json_dict()))
    else:
        out(report.to_text())
    return 0


def _cmd_fixtures(args, out):
    if args.family == "pairwise":
        formulas = analysis.fixture_pairwise_inconsistent(args.m, args.atom_cap)
        payload = {"family": "pairwise", "m": args.m}
    else:
        formulas = analysis.fixture_rational_family(args.n, args.m, args.atom_cap)
        payload = {"family": "rational", "n": args.n, "m": args.m}
    if args.format == "json":
        payload["formulas"] = [str(f) for f in formulas]
        out(json.dumps(payload))
    else:
        for f in formulas:
            out(str(f))
    return 0


def _cmd_probe(args, out):
    report = analysis.probe_conjecture(
        atom_budget=args.atoms,
        denominators=range(2, args.max_denominator + 1),
        trials=args.trials,
        seed=args.seed,
        atom_cap=args.atom_cap,
    )
    if args.format == "json":
        out(json.dumps(report.to_json_dict()))
    else:
        out(report.to_text())
    return 0


def _add_common(parser, relation=True, argument=True):
    if relation:
        parser.add_argument(
            "--relation",
            required=True,
            choices=sorted(_RELATION_ALIASES),
            help="consequence relation to decide",
        )
        parser.add_argument("--upset", help='threshold set, e.g. "(7/10,1]" or "{1}"')
    parser.add_argument(
        "--format", choices=("human", "json"), default="human", help="output format"
    )
    parser.add_argument(
        "--atom-cap",
        type=int,
        default=None,
        metavar="N",
        help=f"atoms allowed per query (default 16, max {MAX_ATOM_CAP})",
    )
    parser.add_argument(
        "--verify",
        action="store_true",
        help="re-verify emitted counterexample models through the JSON round trip",
    )
    if argument:
        parser.add_argument(
            "argument",
            nargs="?",
            help="argument text 'g1, ... |- d1, ...'; '-' or absent reads stdin",
        )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="probcons",
        description="Decide probabilistic consequence relations at exact "
        "rational thresholds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide an argument and print the verdict")
    _add_common(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser(
        "counterexample", help="print the counterexample model, or VALID"
    )
    _add_common(p)
    p.set_defaults(func=_cmd_counterexample)

    p = sub.add_parser("maxsat", help="largest joint probability level of a set")
    _add_common(p, relation=False, argument=False)
    p.add_argument("formulas", help="comma-separated formulas")
    p.set_defaults(func=_cmd_maxsat)

    p = sub.add_parser(
        "classify", help="sufficient-invalidity rules for preservation"
    )
    p.add_argument("--upset", required=True)
    _add_common(p, relation=False)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("compare", help="verdicts at two upsets, with summary")
    _add_common(p)
    p.add_argument("--upset2", help="second threshold set")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("fixtures", help="generate named formula families")
    fsub = p.add_subparsers(dest="family", required=True)
    fp = fsub.add_parser("pairwise", help="m pairwise-inconsistent sentences")
    fp.add_argument("m", type=int)
    _add_common(fp, relation=False, argument=False)
    fr = fsub.add_parser("family", help="C(m,n) n-ary disjunctions, threshold n/m")
    fr.add_argument("n", type=int)
    fr.add_argument("m", type=int)
    _add_common(fr, relation=False, argument=False)
    p.set_defaults(func=_cmd_fixtures)

    p = sub.add_parser("probe", help="empirical probe of the open conjecture")
    _add_common(p, relation=False, argument=False)
    p.add_argument("--atoms", type=int, default=3)
    p.add_argument("--max-denominator", type=int, default=12)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_probe)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    def out(line):
        print(line)

    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (AtomCapError, EnumerationCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return RESOURCE_ERROR
    except CertificateError:
        raise  # engine bug: crash loudly rather than report an answer
    except ProbconsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
