"""Random valid inputs for the elementary transformations and their substitution oracles.

Each ``check_*`` function recomputes the substitution from the closed formula
with sympy, compares the full coefficient map against the package's output
and asserts the postconditions on the oracle's result.
"""

from fractions import Fraction

from conftest import small_rat
from oracles import form_terms, substitute
from trigonal.curves import form_from_terms, is_regular
from trigonal import normal_forms as nf


def _random_terms(rng, k, num=3, den=2):
    terms = {(i, j): small_rat(rng, num, den) for j in range(3) for i in range(3 * k + 4 - (k + 1) * j)}
    terms[(0, 3)] = small_rat(rng, num, den, nonzero=True)
    return terms


def _coeff(terms, i, j):
    return terms.get((i, j), Fraction(0))


# --- input generators ----------------------------------------------------------


def input_y_r(rng, k):
    """Any form with s != 0; half the time with deg(r - r_circ x^(k+1)) < k."""
    terms = _random_terms(rng, k)
    r_circ = small_rat(rng)
    if rng.random() < 0.5:
        terms[(k, 2)] = Fraction(0)
        terms[(k + 1, 2)] = r_circ
    return form_from_terms(k, terms), r_circ


def _shift_terms(rng, k, need_r=True):
    terms = _random_terms(rng, k)
    terms[(3 * k + 3, 0)] = Fraction(0)
    terms[(2 * k + 2, 1)] = Fraction(0)
    terms[(3 * k + 2, 0)] = small_rat(rng, nonzero=True)
    if need_r:
        terms[(k + 1, 2)] = small_rat(rng, nonzero=True)
    return terms


def input_y_p(rng, k):
    return form_from_terms(k, _shift_terms(rng, k))


def input_x_r(rng, k):
    terms = _shift_terms(rng, k)
    terms[(2 * k + 1, 1)] = Fraction(0)
    return form_from_terms(k, terms)


def input_x_q(rng, k):
    return form_from_terms(k, _shift_terms(rng, k, need_r=False))


def input_l0(rng, k):
    """Regular, ``r = 0``, L0 restriction ``s (v - alpha)^2 (v + 2 alpha)``."""
    while True:
        terms = {m: c for m, c in _random_terms(rng, k).items() if m[1] != 2}
        s = terms[(0, 3)]
        alpha = small_rat(rng, nonzero=True)
        terms[(2 * k + 2, 1)] = -3 * s * alpha**2
        terms[(3 * k + 3, 0)] = 2 * s * alpha**3
        f = form_from_terms(k, terms)
        if is_regular(f):
            return f


# --- oracle checks ---------------------------------------------------------------


def check_y_r(f, r_circ):
    k = f.k
    target = [c for c in f.r]
    target[k + 1] -= r_circ
    shift = [-c / (3 * f.s) for c in target]
    expected = substitute(f, shift=shift)
    out = nf.tschirnhaus_y_r(f, r_circ)
    assert form_terms(out) == expected
    assert all(_coeff(expected, i, 2) == 0 for i in range(k + 1))
    assert _coeff(expected, k + 1, 2) == r_circ
    if not target[k] and not target[k + 1]:
        for m in ((2 * k + 1, 1), (2 * k + 2, 1), (3 * k + 2, 0), (3 * k + 3, 0)):
            assert _coeff(expected, *m) == f.coeff(*m)
    return out


def _hypotheses_hold(terms, k, need_r=True):
    ok = (_coeff(terms, 3 * k + 3, 0) == 0 and _coeff(terms, 2 * k + 2, 1) == 0
          and _coeff(terms, 0, 3) != 0 and _coeff(terms, 3 * k + 2, 0) != 0)
    return ok and (_coeff(terms, k + 1, 2) != 0 or not need_r)


def check_y_p(f):
    k = f.k
    c = -f.p[2 * k + 1] / (2 * f.r[k + 1])
    expected = substitute(f, shift=[0] * k + [c])
    out = nf.tschirnhaus_y_p(f)
    assert form_terms(out) == expected
    assert _coeff(expected, 2 * k + 1, 1) == 0
    assert _hypotheses_hold(expected, k)
    return out


def check_x_r(f):
    """Returns the ``x^k y^2`` coefficient left by a shift with factor ``1/k`` instead of ``1/(k+1)``."""
    k = f.k
    d = -f.r[k] / ((k + 1) * f.r[k + 1])
    expected = substitute(f, a0=d)
    out = nf.shift_x_r(f)
    assert form_terms(out) == expected
    assert _coeff(expected, k, 2) == 0
    assert _hypotheses_hold(expected, k) and _coeff(expected, 2 * k + 1, 1) == 0
    one_over_k = substitute(f, a0=-f.r[k] / (k * f.r[k + 1]))
    return _coeff(one_over_k, k, 2)


def check_x_q(f):
    k = f.k
    d = -f.q[3 * k + 1] / ((3 * k + 2) * f.q[3 * k + 2])
    expected = substitute(f, a0=d)
    out = nf.shift_x_q(f)
    assert form_terms(out) == expected
    assert _coeff(expected, 3 * k + 1, 0) == 0
    assert _coeff(expected, 2 * k + 1, 1) == f.p[2 * k + 1]
    assert _hypotheses_hold(expected, k, need_r=False)
    return out


def check_l0(f):
    """Returns ``(computed r'_{k+1}, +9 s q_{3k+3} / (2 p_{2k+2}))``."""
    k = f.k
    P, Q = f.p[2 * k + 2], f.q[3 * k + 3]
    c = -3 * Q / (2 * P)
    expected = substitute(f, shift=[0] * (k + 1) + [c])
    out = nf.split_double_root(f)
    assert form_terms(out) == expected
    assert _coeff(expected, 3 * k + 3, 0) == 0 and _coeff(expected, 2 * k + 2, 1) == 0
    assert all(_coeff(expected, i, 2) == 0 for i in range(k + 1))
    r_top = _coeff(expected, k + 1, 2)
    assert r_top == -9 * f.s * Q / (2 * P) != 0
    return r_top, 9 * f.s * Q / (2 * P)


TRANSFORMS = {
    "Tschirnhaus y-shift on r": (input_y_r, lambda args: check_y_r(*args)),
    "Tschirnhaus y-shift on p": (input_y_p, check_y_p),
    "x-shift killing r_k": (input_x_r, check_x_r),
    "x-shift killing q_(3k+1)": (input_x_q, check_x_q),
    "double L0 root to v = 0": (input_l0, check_l0),
}
