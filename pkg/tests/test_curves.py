from fractions import Fraction

import pytest

from conftest import SEEDS, small_rat
from oracles import U, V, form_expr, is_regular_oracle, X, Y
import sympy as sp
from trigonal.algebra import BiPoly, UniPoly
from trigonal.curves import (
    StratumKind,
    TrigonalForm,
    chart_at_infinity,
    classify,
    dims,
    form_from_terms,
    genus,
    is_regular,
    l0_profile,
    l0_restriction,
    make_form,
    scroll_matrix,
    scroll_point,
    scroll_rank_ok,
    spin_parity,
)
from trigonal.errors import DomainError, MalformedInput, NotRegularError

u, v = BiPoly.x(), BiPoly.y()


def test_valid_form_k1():
    f = make_form(1, 1, [0, 0, 0], [0] * 5, [0, 1, 0, 0, 0, 1, 0])
    assert f == form_from_terms(1, {(0, 3): 1, (5, 0): 1, (1, 0): 1})
    assert f.coeff(5, 0) == 1 and f.coeff(9, 0) == 0


def test_wrong_lengths_rejected():
    with pytest.raises(MalformedInput, match="degree bound violation"):
        make_form(1, 1, [0, 0, 0, 0], [0] * 5, [0] * 7)


def test_monomial_outside_vk_rejected():
    with pytest.raises(DomainError, match="degree bound violation"):
        form_from_terms(1, {(0, 3): 1, (1, 3): 1})
    with pytest.raises(DomainError):
        form_from_terms(1, {(7, 0): 1})


def test_nonpositive_k_rejected():
    with pytest.raises(MalformedInput):
        TrigonalForm(0, 1, (0, 0), (0, 0, 0), (0, 0, 0, 0))


def test_e8_unfolding_ambient():
    # y^3 + x^5 plus the span of 1, x, x^2, x^3, y, yx, yx^2, yx^3 lies in V^1
    terms = {(0, 3): 1, (5, 0): 1}
    for i in range(4):
        terms[(i, 0)] = i + 1
        terms[(i, 1)] = i + 5
    f = form_from_terms(1, terms)
    assert f.to_bipoly() == BiPoly(terms)


@pytest.mark.parametrize("terms,chart", [
    ({(0, 3): 1, (6, 0): 1, (0, 0): 1}, v**3 + u**6 + 1),
    ({(0, 3): 1, (5, 0): 1, (1, 0): 1}, v**3 + u + u**5),
    ({(0, 3): 1}, v**3),
])
def test_chart_at_infinity_examples(terms, chart):
    assert chart_at_infinity(form_from_terms(1, terms)) == chart


@pytest.mark.parametrize("k", [1, 2, 3])
def test_chart_matches_symbolic_substitution(rng, k):
    for _ in range(5):
        terms = {(i, j): small_rat(rng) for j in range(4) for i in range(3 * k + 4 - (k + 1) * j)}
        f = form_from_terms(k, terms)
        expected = sp.expand(U ** (3 * k + 3) * form_expr(f).subs({X: 1 / U, Y: V / U ** (k + 1)},
                                                                     simultaneous=True))
        got = sum((sp.Rational(c.numerator, c.denominator) * U**i * V**j
                   for (i, j), c in chart_at_infinity(f).terms.items()), sp.Integer(0))
        assert sp.expand(expected - got) == 0
        assert chart_at_infinity(f).at_x(0) == l0_restriction(f)


@pytest.mark.parametrize("terms,restriction,points,mults", [
    ({(0, 3): 1, (5, 0): 1, (1, 0): 1}, (0, 0, 0, 1), 1, (3,)),
    ({(0, 3): 1, (2, 2): 1, (5, 0): 1, (1, 0): 1}, (0, 0, 1, 1), 2, (2, 1)),
    ({(0, 3): 1, (6, 0): 1, (0, 0): 1}, (1, 0, 0, 1), 3, (1, 1, 1)),
])
def test_l0_profile_examples(terms, restriction, points, mults):
    prof = l0_profile(form_from_terms(1, terms))
    assert prof.restriction == UniPoly(restriction)
    assert prof.distinct_points == points
    assert prof.multiplicities == mults


def test_l0_profile_degenerate():
    with pytest.raises(DomainError, match="degenerates on L0"):
        l0_profile(form_from_terms(1, {(6, 0): 1}))


@pytest.mark.parametrize("k,terms,expected", [
    (1, {(0, 3): 1, (5, 0): 1, (1, 0): 1}, True),
    (1, {(0, 3): 1, (5, 0): 1}, False),
    (1, {(0, 3): 1, (6, 0): 1, (0, 0): 1}, True),
    (1, {(6, 0): 1, (0, 0): 1}, False),
    # double L0 point at v = 1 with F_u vanishing there: singular at infinity
    (1, {(0, 3): 1, (4, 1): -3, (6, 0): 2, (1, 0): 1}, False),
    (1, {(0, 3): 1, (4, 1): -3, (6, 0): 2, (5, 0): 1, (1, 0): 1}, True),
])
def test_is_regular_examples(k, terms, expected):
    f = form_from_terms(k, terms)
    assert is_regular(f) is expected
    assert is_regular_oracle(f) is expected


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("points", [1, 2, 3])
def test_seeds_are_regular_in_their_stratum(k, points):
    f = SEEDS[points](k)
    assert is_regular(f)
    assert l0_profile(f).distinct_points == points


@pytest.mark.parametrize("k,terms,kind,g,sig,parity", [
    (1, {(0, 3): 1, (5, 0): 1, (1, 0): 1}, StratumKind.ONE_POINT, 4, (6,), "even"),
    (1, {(0, 3): 1, (6, 0): 1, (0, 0): 1}, StratumKind.THREE_POINT, 4, (2, 2, 2), "even"),
    (2, {(0, 3): 1, (8, 0): 1, (1, 0): 1}, StratumKind.ONE_POINT, 7, (12,), "odd"),
])
def test_classify_examples(k, terms, kind, g, sig, parity):
    st = classify(form_from_terms(k, terms))
    assert (st.kind, st.genus, st.signature, st.spin_parity) == (kind, g, sig, parity)


def test_classify_two_point_label():
    st = classify(SEEDS[2](2))
    assert st.label() == "(8,4)"


def test_classify_rejects_singular():
    with pytest.raises(NotRegularError, match="not in discriminant complement"):
        classify(form_from_terms(1, {(0, 3): 1, (5, 0): 1}))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_scroll_point_satisfies_rank_condition(rng, k):
    for _ in range(10):
        z = scroll_point(k, small_rat(rng, 5, 3), small_rat(rng, 5, 3))
        assert len(z) == 3 * k + 1
        assert scroll_rank_ok(z)


@pytest.mark.parametrize("k", [2, 3])
def test_second_block_starting_with_x_fails_rank_condition(k):
    xv, yv = Fraction(2), Fraction(3)
    z = scroll_point(k, xv, yv)
    variant = z[:2 * k + 1] + [xv] + z[2 * k + 2:]
    assert not scroll_rank_ok(variant)


def test_scroll_degenerate_and_perturbed(rng):
    assert scroll_rank_ok([1] + [0] * 6)
    z = scroll_point(2, 2, 3)
    z[3] += 1
    assert not scroll_rank_ok(z)


def test_scroll_matrix_shape():
    top, bottom = scroll_matrix(scroll_point(2, 2, 5))
    assert len(top) == len(bottom) == 5
    with pytest.raises(MalformedInput):
        scroll_matrix([1, 2, 3])


@pytest.mark.parametrize("k,expected", [(1, (7, 8, 7)), (2, (13, 13, 12)), (3, (19, 18, 17))])
def test_dims(k, expected):
    assert dims(k) == expected
    assert genus(k) == 3 * k + 1
    assert spin_parity(k) == ("even" if k % 2 else "odd")


def test_dims_rejects_bad_k():
    with pytest.raises(DomainError):
        dims(0)
