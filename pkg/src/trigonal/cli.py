"""Command-line entry point: JSON in, JSON out.

Exit codes: 0 on success, 1 on malformed input, 2 when a mathematical
precondition fails (e.g. a singular curve where regularity is required).
"""

import argparse
import json
import sys

from . import curves, normal_forms, presentations
from .algebra.rational import parse_rat
from .errors import DomainError, MalformedInput
from .group_action import act
from .jsonio import (
    dumps,
    form_from_json,
    form_to_json,
    gelement_from_json,
    log_to_json,
    presentation_to_json,
    profile_to_json,
    stratum_to_json,
)

EXIT_OK, EXIT_MALFORMED, EXIT_DOMAIN = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _load_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON in {path}: {exc.msg}") from exc


def _load_form(path):
    return form_from_json(_load_json(path))


def cmd_classify(args):
    f = _load_form(args.input)
    profile = curves.l0_profile(f) if f.s else None
    out = {
        "regular": curves.is_regular(f),
        "l0": profile_to_json(profile) if profile else None,
        "stratum": None,
        "genus": None,
        "spin": None,
    }
    if not out["regular"]:
        out["error"] = {"type": "NotRegularError", "message": "not in discriminant complement"}
        return out, EXIT_DOMAIN
    stratum = curves.classify(f, check_regular=False)
    out.update(stratum=stratum_to_json(stratum), genus=stratum.genus, spin=stratum.spin_parity)
    return out, EXIT_OK


def cmd_normalize(args):
    f = _load_form(args.input)
    tag, g, log = normal_forms.normalize(f)
    return {"slice": tag.value, "form": form_to_json(g), "log": log_to_json(log)}, EXIT_OK


def cmd_orbit_equal(args):
    f1, f2 = _load_form(args.input), _load_form(args.other)
    return {"equal": normal_forms.orbit_equal(f1, f2)}, EXIT_OK


def cmd_act(args):
    f = _load_form(args.input)
    g = gelement_from_json(_load_json(args.element))
    return form_to_json(act(g, f)), EXIT_OK


def cmd_presentation(args):
    if args.family == "piK":
        if args.n is None and args.k is None:
            raise MalformedInput("presentation --family piK needs --n or --k")
        n = args.n if args.n is not None else 3 * args.k + 2
        pres = presentations.build_piK(n)
        central_k = (n - 2) // 3 if (n - 2) % 3 == 0 and n >= 5 else None
    else:
        if args.k is None:
            raise MalformedInput("presentation --family conj4k2k needs --k")
        pres = presentations.build_conjecture_4k2k(args.k)
        central_k = None
    out = presentation_to_json(pres)
    out["relation_counts"] = pres.relation_types()
    if args.abelianization:
        ab = presentations.abelianization(pres)
        out["abelianization"] = {"free_rank": ab.free_rank, "torsion": list(ab.torsion)}
    if args.central_word:
        if central_k is None:
            raise DomainError("central word is only defined for piK with n = 3k+2, k >= 1")
        word = presentations.central_word(central_k)
        out["central_word"] = {
            "length": len(word),
            "exponent_vector": presentations.exponent_vector(word, pres.n_generators),
            "word": list(word),
        }
    return out, EXIT_OK


def cmd_embed_base(args):
    f = presentations.section_embedding(args.k, args.p, args.q)
    return form_to_json(f), EXIT_OK


def cmd_dims(args):
    return list(curves.dims(args.k)), EXIT_OK


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return v


def _rational(text):
    try:
        return parse_rat(text)
    except MalformedInput as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser():
    parser = _Parser(prog="trigonal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="regularity, stratum, genus, spin parity and L0 profile")
    p.add_argument("--input", required=True, help="TrigonalForm JSON file, or - for stdin")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("normalize", help="normal form in V1/V2/V3 with the transformation log")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("orbit-equal", help="decide whether two forms lie in one orbit")
    p.add_argument("--input", required=True)
    p.add_argument("--other", required=True)
    p.set_defaults(func=cmd_orbit_equal)

    p = sub.add_parser("act", help="apply a group element to a form")
    p.add_argument("--input", required=True)
    p.add_argument("--element", required=True, help="GElement JSON file")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("presentation", help="emit a group presentation")
    p.add_argument("--family", choices=("piK", "conj4k2k"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=_positive_int)
    p.add_argument("--abelianization", action="store_true")
    p.add_argument("--central-word", action="store_true")
    p.set_defaults(func=cmd_presentation)

    p = sub.add_parser("embed-base", help="section Y^3+pY+q -> y^3 + p x^(2k+2) y + q x^(3k+3) + 1")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--p", type=_rational, required=True)
    p.add_argument("--q", type=_rational, required=True)
    p.set_defaults(func=cmd_embed_base)

    p = sub.add_parser("dims", help="stratum, Maroni locus and divisor dimensions")
    p.add_argument("--k", type=_positive_int, required=True)
    p.set_defaults(func=cmd_dims)
    return parser


def _error(kind, message):
    return {"error": {"type": kind, "message": message}}


def run(argv=None, stdout=None):
    """Execute one subcommand; returns the exit code."""
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        out, code = args.func(args)
    except _UsageError as exc:
        out, code = _error("UsageError", str(exc)), EXIT_MALFORMED
    except MalformedInput as exc:
        out, code = _error(type(exc).__name__, str(exc)), EXIT_MALFORMED
    except DomainError as exc:
        out, code = _error(type(exc).__name__, str(exc)), EXIT_DOMAIN
    stdout.write(dumps(out) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
