"""Tschirnhaus-type transformations and the normal forms of the three strata.

Each elementary step is a single group element (or torus element) computed
from the current coefficients.  Pipelines record the concrete substitutions
in a :class:`TransformLog`, so replaying the log needs no recomputation.

Slices:

* ``V1``: ``s = q_{3k+2} = 1``, ``r = 0``, ``p_{2k+2} = q_{3k+1} = q_{3k+3} = 0``
* ``V2``: ``s = r_{k+1} = q_{3k+2} = 1``, ``r_0..r_k = 0``,
  ``p_{2k+1} = p_{2k+2} = q_{3k+3} = 0``
* ``V3``: ``s = 1``, ``r = 0``
"""

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import UniPoly, multiplicative_consistency
from .algebra.rational import as_rat
from .curves import StratumKind, classify, is_regular, l0_profile, l0_restriction
from .errors import InternalError, MalformedInput, NotRegularError, PreconditionError
from .group_action import GElement, TorusElement, abc_to_lmr, act, act_torus

_ZERO = Fraction(0)


class SliceTag(enum.Enum):
    V1 = "V1"
    V2 = "V2"
    V3 = "V3"


def in_slice(f, tag):
    k = f.k
    if tag is SliceTag.V1:
        return (f.s == 1 and f.q[3 * k + 2] == 1 and not any(f.r)
                and not f.p[2 * k + 2] and not f.q[3 * k + 1] and not f.q[3 * k + 3])
    if tag is SliceTag.V2:
        return (f.s == 1 and f.r[k + 1] == 1 and f.q[3 * k + 2] == 1 and not any(f.r[:k + 1])
                and not f.p[2 * k + 1] and not f.p[2 * k + 2] and not f.q[3 * k + 3])
    if tag is SliceTag.V3:
        return f.s == 1 and not any(f.r)
    raise ValueError(tag)


# --- transformation log ------------------------------------------------------

STEP_TAGS = ("YR", "YP", "XR", "XQ", "L0", "TORUS", "GSHIFT")


@dataclass(frozen=True)
class TransformStep:
    """One logged step.

    Parameters by tag (all rationals):

    * ``YR``: ``[r_circ, b_0, ..., b_{k+1}]``, the substitution ``y -> y + sum b_i x^i``
    * ``YP``: ``[c]``, ``y -> y + c x^k``
    * ``L0``: ``[c]``, ``y -> y + c x^{k+1}``
    * ``XR``, ``XQ``: ``[d]``, ``x -> x + d``
    * ``TORUS``: ``[lambda, mu, rho]``
    * ``GSHIFT``: ``[a, a0, b, b_0, ..., b_{k+1}]``
    """

    tag: str
    params: tuple

    def __post_init__(self):
        if self.tag not in STEP_TAGS:
            raise MalformedInput(f"unknown transform tag {self.tag!r}")
        object.__setattr__(self, "params", tuple(as_rat(c) for c in self.params))
        expected = {"YP": 1, "L0": 1, "XR": 1, "XQ": 1, "TORUS": 3}.get(self.tag)
        if expected is not None and len(self.params) != expected:
            raise MalformedInput(f"{self.tag} step takes {expected} parameters")
        if self.tag == "YR" and len(self.params) < 4:
            raise MalformedInput("YR step takes r_circ and k+2 shift coefficients")
        if self.tag == "GSHIFT" and len(self.params) < 6:
            raise MalformedInput("GSHIFT step takes a, a0, b and k+2 shift coefficients")

    def apply(self, f):
        k = f.k
        tag, ps = self.tag, self.params
        if tag == "TORUS":
            return act_torus(TorusElement(*ps), f, "lmr")
        if tag == "GSHIFT":
            g = GElement(ps[0], ps[1], ps[2], ps[3:])
        elif tag == "YR":
            g = GElement(1, 0, 1, ps[1:])
        elif tag == "YP":
            g = GElement.y_shift(k, UniPoly.monomial(k, ps[0]))
        elif tag == "L0":
            g = GElement.y_shift(k, UniPoly.monomial(k + 1, ps[0]))
        else:
            g = GElement.x_affine(k, 1, ps[0])
        if g.k != k:
            raise MalformedInput(f"{tag} step has shift length for k={g.k}, form has k={k}")
        return act(g, f)


@dataclass
class TransformLog:
    steps: list = field(default_factory=list)

    def append(self, step):
        self.steps.append(step)

    def replay(self, f):
        for step in self.steps:
            f = step.apply(f)
        return f

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


def _run(step, f, log):
    out = step.apply(f)
    if log is not None:
        log.append(step)
    return out


# --- elementary transformations ---------------------------------------------

def _need(cond, msg):
    if not cond:
        raise PreconditionError(msg)


def _check(cond, msg):
    if not cond:
        raise InternalError(msg)


def tschirnhaus_y_r(f, r_circ=0, log=None):
    """``y -> y - (r(x) - r_circ x^{k+1}) / (3 s)``; afterwards ``r = r_circ x^{k+1}``."""
    _need(f.s, "tschirnhaus_y_r needs s != 0")
    k = f.k
    r_circ = as_rat(r_circ)
    target = list(f.r)
    target[k + 1] -= r_circ
    shift = tuple(-c / (3 * f.s) for c in target)
    out = _run(TransformStep("YR", (r_circ,) + shift), f, log)

    _check(out.r == (_ZERO,) * (k + 1) + (r_circ,), "YR left a wrong r(x)")
    if UniPoly(target).degree < k:
        _check(out.p[2 * k + 1] == f.p[2 * k + 1] and out.p[2 * k + 2] == f.p[2 * k + 2]
               and out.q[3 * k + 2] == f.q[3 * k + 2] and out.q[3 * k + 3] == f.q[3 * k + 3],
               "YR changed a protected top coefficient")
    return out


def _shift_hypotheses(f, need_r=True):
    k = f.k
    ok = not f.q[3 * k + 3] and not f.p[2 * k + 2] and f.s and f.q[3 * k + 2]
    if need_r:
        ok = ok and f.r[k + 1]
    return bool(ok)


def tschirnhaus_y_p(f, log=None):
    """``y -> y - p_{2k+1} / (2 r_{k+1}) x^k``; afterwards ``p_{2k+1} = 0``."""
    k = f.k
    _need(_shift_hypotheses(f), "tschirnhaus_y_p needs q_{3k+3} = p_{2k+2} = 0 and s r_{k+1} q_{3k+2} != 0")
    c = -f.p[2 * k + 1] / (2 * f.r[k + 1])
    out = _run(TransformStep("YP", (c,)), f, log)
    _check(not out.p[2 * k + 1], "YP left p_{2k+1} nonzero")
    _check(_shift_hypotheses(out), "YP broke its hypotheses")
    return out


def shift_x_r(f, log=None):
    """``x -> x - r_k / ((k+1) r_{k+1})``; afterwards ``r_k = 0``."""
    k = f.k
    _need(_shift_hypotheses(f) and not f.p[2 * k + 1],
          "shift_x_r needs q_{3k+3} = p_{2k+2} = p_{2k+1} = 0 and s r_{k+1} q_{3k+2} != 0")
    d = -f.r[k] / ((k + 1) * f.r[k + 1])
    out = _run(TransformStep("XR", (d,)), f, log)
    _check(not out.r[k], "XR left r_k nonzero")
    _check(_shift_hypotheses(out) and not out.p[2 * k + 1], "XR broke its hypotheses")
    return out


def shift_x_q(f, log=None):
    """``x -> x - q_{3k+1} / ((3k+2) q_{3k+2})``; afterwards ``q_{3k+1} = 0``."""
    k = f.k
    _need(_shift_hypotheses(f, need_r=False),
          "shift_x_q needs q_{3k+3} = p_{2k+2} = 0 and s q_{3k+2} != 0")
    d = -f.q[3 * k + 1] / ((3 * k + 2) * f.q[3 * k + 2])
    out = _run(TransformStep("XQ", (d,)), f, log)
    _check(not out.q[3 * k + 1] and out.p[2 * k + 1] == f.p[2 * k + 1], "XQ postcondition failed")
    _check(_shift_hypotheses(out, need_r=False), "XQ broke its hypotheses")
    return out


def double_root_on_l0(f):
    """The double root ``-3 q_{3k+3} / (2 p_{2k+2})`` of the L0 restriction when ``r = 0``."""
    k = f.k
    return -3 * f.q[3 * k + 3] / (2 * f.p[2 * k + 2])


def split_double_root(f, log=None, check_regular=True):
    """``y -> y - 3 q_{3k+3} / (2 p_{2k+2}) x^{k+1}``: move the double L0 point to ``v = 0``."""
    k = f.k
    _need(not any(f.r), "split_double_root needs r = 0")
    _need(f.s, "split_double_root needs s != 0")
    if check_regular:
        _need(is_regular(f), "split_double_root needs a regular form")
    _need(l0_profile(f).distinct_points == 2, "split_double_root needs two points on L0")
    _need(f.p[2 * k + 2], "split_double_root needs p_{2k+2} != 0")
    c = double_root_on_l0(f)
    out = _run(TransformStep("L0", (c,)), f, log)
    _check(not out.q[3 * k + 3] and not out.p[2 * k + 2], "L0 step left a root off v = 0")
    _check(not any(out.r[:k + 1]) and out.r[k + 1], "L0 step produced a wrong r(x)")
    return out


def q_nonvanish_check(f, check_regular=True):
    """Return ``q_{3k+2} != 0``, asserting it for regular forms with a multiple L0 zero at ``v = 0``."""
    k = f.k
    nonzero = bool(f.q[3 * k + 2])
    c = l0_restriction(f)
    multiple_at_zero = f.s and not c[0] and not c[1]
    if multiple_at_zero and not nonzero and check_regular and is_regular(f):
        raise InternalError("regular form with a multiple zero at v = 0 but q_{3k+2} = 0")
    return nonzero


# --- pipelines -----------------------------------------------------------------

def _require_stratum(f, points, check_regular):
    if check_regular and not is_regular(f):
        raise NotRegularError("not in discriminant complement")
    if not f.s:
        raise NotRegularError("not in discriminant complement")
    found = l0_profile(f).distinct_points
    if found != points:
        raise PreconditionError(f"expected {points} point(s) on L0, found {found}")


def _torus_from_abc(k, a, b, c):
    return abc_to_lmr(k, TorusElement(a, b, c)).as_tuple()


def normalize_one_point(f, check_regular=True):
    """Bring a one-point form into V1; returns ``(form, log)``."""
    _require_stratum(f, 1, check_regular)
    k = f.k
    log = TransformLog()
    if any(f.r):
        f = tschirnhaus_y_r(f, 0, log)
    # a cubic with no v^2 term and a single root has that root at 0
    _check(not f.p[2 * k + 2] and not f.q[3 * k + 3], "triple L0 root not at v = 0")
    _check(q_nonvanish_check(f, check_regular=False), "q_{3k+2} vanished on a one-point form")
    if f.q[3 * k + 1]:
        f = shift_x_q(f, log)
    if f.s != 1 or f.q[3 * k + 2] != 1:
        f = _run(TransformStep("TORUS", (1 / f.s, 1 / f.q[3 * k + 2], 1)), f, log)
    _check(in_slice(f, SliceTag.V1), "one-point pipeline missed V1")
    return f, log


def normalize_two_point(f, check_regular=True):
    """Bring a two-point form to its unique representative in V2; returns ``(form, log)``."""
    _require_stratum(f, 2, check_regular)
    k = f.k
    log = TransformLog()
    # double point already at v = 0 with r = r_{k+1} x^{k+1}: the first two steps would cancel
    settled = not any(f.r[:k + 1]) and not f.p[2 * k + 2] and not f.q[3 * k + 3]
    if not settled:
        if any(f.r):
            f = tschirnhaus_y_r(f, 0, log)
        if f.q[3 * k + 3] or f.p[2 * k + 2]:
            f = split_double_root(f, log, check_regular=False)
    _check(q_nonvanish_check(f, check_regular=False), "q_{3k+2} vanished on a two-point form")
    if f.p[2 * k + 1]:
        f = tschirnhaus_y_p(f, log)
    if f.r[k]:
        f = shift_x_r(f, log)
    if any(f.r[:k + 1]):
        f = tschirnhaus_y_r(f, f.r[k + 1], log)
    if f.s != 1 or f.q[3 * k + 2] != 1 or f.r[k + 1] != 1:
        f = _run(TransformStep("TORUS", (1 / f.s, 1 / f.q[3 * k + 2], f.r[k + 1])), f, log)
    _check(in_slice(f, SliceTag.V2), "two-point pipeline missed V2")
    return f, log


def normalize_three_point(f, check_regular=True):
    """Bring a three-point form into V3 (``s = 1, r = 0``); returns ``(form, log)``."""
    _require_stratum(f, 3, check_regular)
    k = f.k
    log = TransformLog()
    if any(f.r):
        f = tschirnhaus_y_r(f, 0, log)
    if f.s != 1:
        # plain rescaling of f by 1/s, written in lambda-mu-rho coordinates
        f = _run(TransformStep("TORUS", _torus_from_abc(k, 1, 1, 1 / f.s)), f, log)
    _check(in_slice(f, SliceTag.V3), "three-point pipeline missed V3")
    return f, log


_PIPELINES = {
    StratumKind.ONE_POINT: (SliceTag.V1, normalize_one_point),
    StratumKind.TWO_POINT: (SliceTag.V2, normalize_two_point),
    StratumKind.THREE_POINT: (SliceTag.V3, normalize_three_point),
}


def normalize(f, check_regular=True):
    """Dispatch on the stratum; returns ``(slice_tag, form, log)``."""
    kind = classify(f, check_regular=check_regular).kind
    tag, pipeline = _PIPELINES[kind]
    g, log = pipeline(f, check_regular=False)
    return tag, g, log


# --- residual equivalence ----------------------------------------------------------

def _coordinate_test(pairs):
    """``pairs`` of ``(weight, c1, c2)``; zero patterns must agree, ratios must be consistent."""
    weights, ratios = [], []
    for w, c1, c2 in pairs:
        if bool(c1) != bool(c2):
            return False
        if c1:
            weights.append(w)
            ratios.append(c2 / c1)
    return multiplicative_consistency(weights, ratios)


def _same_k(f1, f2):
    if f1.k != f2.k:
        raise PreconditionError("forms have different k")


def residual_equiv_one_point(f1, f2):
    """Is there ``t`` with ``p2_i = t^(6k+4-3i) p1_i`` and ``q2_i = t^(9k+6-3i) q1_i``?"""
    _same_k(f1, f2)
    for f in (f1, f2):
        if not in_slice(f, SliceTag.V1):
            raise PreconditionError("residual_equiv_one_point needs forms in V1")
    k = f1.k
    pairs = [(6 * k + 4 - 3 * i, f1.p[i], f2.p[i]) for i in range(2 * k + 3)]
    pairs += [(9 * k + 6 - 3 * i, f1.q[i], f2.q[i]) for i in range(3 * k + 4)]
    return _coordinate_test(pairs)


def residual_action_three_point(f, a, a0, t):
    """``p(x) -> t^2 p(a x + a0)``, ``q(x) -> t^3 q(a x + a0)`` on a V3 form."""
    a, a0, t = as_rat(a), as_rat(a0), as_rat(t)
    inner = UniPoly((a0, a))
    p = f.p_poly(inner) * t**2
    q = f.q_poly(inner) * t**3
    return f.replace(p=tuple(p[i] for i in range(len(f.p))), q=tuple(q[i] for i in range(len(f.q))))


def center_three_point(f):
    """Translate ``x`` so that ``q_{3k+2} = 0`` (when ``q_{3k+3} != 0``), else ``p_{2k+1} = 0``."""
    k = f.k
    if f.q[3 * k + 3]:
        d = -f.q[3 * k + 2] / ((3 * k + 3) * f.q[3 * k + 3])
    elif f.p[2 * k + 2]:
        d = -f.p[2 * k + 1] / ((2 * k + 2) * f.p[2 * k + 2])
    else:
        raise PreconditionError("three-point form with p_{2k+2} = q_{3k+3} = 0")
    return residual_action_three_point(f, 1, d, 1)


def residual_equiv_three_point(f1, f2, check_regular=True):
    """Decide equality of orbits under ``(a, a0, t)`` for two V3 forms with three L0 points."""
    _same_k(f1, f2)
    k = f1.k
    for f in (f1, f2):
        if not in_slice(f, SliceTag.V3):
            raise PreconditionError("residual_equiv_three_point needs forms in V3")
        _require_stratum(f, 3, check_regular)
    if bool(f1.q[3 * k + 3]) != bool(f2.q[3 * k + 3]):
        return False
    g1, g2 = center_three_point(f1), center_three_point(f2)
    pairs = [((i, 2), g1.p[i], g2.p[i]) for i in range(2 * k + 3)]
    pairs += [((i, 3), g1.q[i], g2.q[i]) for i in range(3 * k + 4)]
    return _coordinate_test(pairs)


def orbit_equal(f1, f2):
    """Do ``f1`` and ``f2`` lie in the same orbit of the group times scalars?"""
    _same_k(f1, f2)
    for f in (f1, f2):
        if not is_regular(f):
            raise NotRegularError("not in discriminant complement")
    s1 = classify(f1, check_regular=False)
    s2 = classify(f2, check_regular=False)
    if s1.kind != s2.kind:
        return False
    tag, pipeline = _PIPELINES[s1.kind]
    n1, _ = pipeline(f1, check_regular=False)
    n2, _ = pipeline(f2, check_regular=False)
    if tag is SliceTag.V1:
        return residual_equiv_one_point(n1, n2)
    if tag is SliceTag.V2:
        return n1 == n2
    return residual_equiv_three_point(n1, n2, check_regular=False)
