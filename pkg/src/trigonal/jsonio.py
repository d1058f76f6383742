"""JSON encodings of forms, group elements, logs, profiles and presentations.

Rationals are always strings ``"n"``, ``"-n"`` or ``"n/d"``.  ``dumps`` sorts
keys so identical data gives byte-identical output.
"""

import json

from .algebra.rational import format_rat, parse_rat
from .curves import TrigonalForm
from .errors import MalformedInput
from .group_action import GElement
from .normal_forms import TransformLog, TransformStep


def dumps(obj):
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def _rat(v, what):
    if isinstance(v, bool):
        raise MalformedInput(f"{what}: expected a rational string")
    if isinstance(v, int):
        return parse_rat(str(v))
    if not isinstance(v, str):
        raise MalformedInput(f"{what}: expected a rational string, got {v!r}")
    return parse_rat(v)


def _rat_list(v, what):
    if not isinstance(v, list):
        raise MalformedInput(f"{what}: expected a list")
    return [_rat(c, what) for c in v]


def _require(d, keys, what):
    if not isinstance(d, dict):
        raise MalformedInput(f"{what}: expected a JSON object")
    missing = [key for key in keys if key not in d]
    if missing:
        raise MalformedInput(f"{what}: missing {', '.join(missing)}")


def form_to_json(f):
    return {
        "k": f.k,
        "s": format_rat(f.s),
        "r": [format_rat(c) for c in f.r],
        "p": [format_rat(c) for c in f.p],
        "q": [format_rat(c) for c in f.q],
    }


def form_from_json(d):
    _require(d, ("k", "s", "r", "p", "q"), "TrigonalForm")
    k = d["k"]
    if not isinstance(k, int) or isinstance(k, bool):
        raise MalformedInput("TrigonalForm: k must be an integer")
    return TrigonalForm(
        k,
        _rat(d["s"], "s"),
        tuple(_rat_list(d["r"], "r")),
        tuple(_rat_list(d["p"], "p")),
        tuple(_rat_list(d["q"], "q")),
    )


def gelement_to_json(g):
    return {
        "a": format_rat(g.a),
        "a0": format_rat(g.a0),
        "b": format_rat(g.b),
        "bcoef": [format_rat(c) for c in g.bcoef],
    }


def gelement_from_json(d):
    _require(d, ("a", "a0", "b", "bcoef"), "GElement")
    return GElement(
        _rat(d["a"], "a"), _rat(d["a0"], "a0"), _rat(d["b"], "b"), tuple(_rat_list(d["bcoef"], "bcoef"))
    )


def log_to_json(log):
    return [{"tag": s.tag, "params": [format_rat(c) for c in s.params]} for s in log]


def log_from_json(items):
    if not isinstance(items, list):
        raise MalformedInput("TransformLog: expected a list")
    steps = []
    for item in items:
        _require(item, ("tag", "params"), "TransformStep")
        steps.append(TransformStep(item["tag"], tuple(_rat_list(item["params"], "params"))))
    return TransformLog(steps)


def profile_to_json(profile):
    return {
        "restriction": [format_rat(c) for c in profile.restriction.coeffs],
        "distinct_points": profile.distinct_points,
        "multiplicities": list(profile.multiplicities),
    }


def stratum_to_json(stratum):
    return {"kind": stratum.kind.value, "signature": list(stratum.signature)}


def presentation_to_json(pres):
    return {
        "generators": pres.n_generators,
        "family": pres.family,
        "conjectural": pres.conjectural,
        "extrapolated": pres.extrapolated,
        "relations": [[list(lhs), list(rhs)] for lhs, rhs in pres.relations],
    }


def presentation_from_json(d):
    from .presentations import Presentation

    _require(d, ("generators", "family", "conjectural", "relations"), "Presentation")
    try:
        rels = tuple((tuple(int(x) for x in lhs), tuple(int(x) for x in rhs)) for lhs, rhs in d["relations"])
    except (TypeError, ValueError) as exc:
        raise MalformedInput(f"Presentation: bad relation list ({exc})") from exc
    return Presentation(int(d["generators"]), rels, str(d["family"]), bool(d["conjectural"]),
                        bool(d.get("extrapolated", False)))
