from fractions import Fraction

import pytest

from conftest import SEEDS, random_gelement, small_rat
from oracles import form_terms, substitute
from trigonal.curves import classify, form_from_terms, is_regular
from trigonal.errors import DomainError, MalformedInput
from trigonal.group_action import (
    GElement,
    TorusElement,
    abc_to_lmr,
    act,
    act_torus,
    compose,
    inverse,
    lmr_to_abc,
    lmr_weight,
    torus_translate,
)


def random_form(rng, k, num=3, den=2):
    terms = {(i, j): small_rat(rng, num, den) for j in range(3) for i in range(3 * k + 4 - (k + 1) * j)}
    terms[(0, 3)] = small_rat(rng, num, den, nonzero=True)
    return form_from_terms(k, terms)


def test_identity_action():
    f = SEEDS[1](1)
    assert act(GElement.identity(1), f) == f


def test_binomial_shift():
    f = form_from_terms(1, {(0, 3): 1})
    g = GElement(1, 0, 1, (1, 0, 0))
    assert act(g, f) == form_from_terms(1, {(0, 3): 1, (0, 2): 3, (0, 1): 3, (0, 0): 1})


def test_x_scaling():
    f = SEEDS[1](1)
    assert act(GElement.x_affine(1, 2), f) == form_from_terms(1, {(0, 3): 1, (5, 0): 32, (1, 0): 2})


@pytest.mark.parametrize("k", [1, 2, 3])
def test_act_matches_symbolic_substitution(rng, k):
    for _ in range(10):
        f, g = random_form(rng, k), random_gelement(rng, k)
        assert form_terms(act(g, f)) == substitute(f, g.a, g.a0, g.b, g.bcoef)


def test_gelement_validation():
    with pytest.raises(MalformedInput):
        GElement(0, 0, 1, (0, 0, 0))
    with pytest.raises(MalformedInput):
        GElement(1, 0, 0, (0, 0, 0))
    with pytest.raises(DomainError):
        act(GElement.identity(2), SEEDS[1](1))


def test_compose_examples(rng):
    g = random_gelement(rng, 1)
    assert compose(GElement.identity(1), g) == g
    assert compose(GElement.x_affine(1, 1, 1), GElement.x_affine(1, 1, 2)) == GElement.x_affine(1, 1, 3)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_compose_is_sequential_action_and_associative(rng, k):
    for _ in range(10):
        f = random_form(rng, k)
        g1, g2, g3 = (random_gelement(rng, k) for _ in range(3))
        assert act(compose(g1, g2), f) == act(g1, act(g2, f))
        assert compose(compose(g1, g2), g3) == compose(g1, compose(g2, g3))
        assert compose(g1, inverse(g1)) == GElement.identity(k)
        assert compose(inverse(g1), g1) == GElement.identity(k)


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("points", [1, 2, 3])
def test_action_preserves_regularity_and_stratum(rng, k, points):
    f = SEEDS[points](k)
    kind = classify(f).kind
    for _ in range(4):
        h = act(random_gelement(rng, k), f)
        assert is_regular(h)
        assert classify(h).kind is kind


def test_torus_identity_and_normalization():
    f = form_from_terms(1, {(0, 3): 3, (5, 0): 1, (1, 0): 1})
    assert act_torus(TorusElement.identity(), f) == f
    assert act_torus(TorusElement(Fraction(1, 3), 1, 1), f).s == 1


def test_lmr_weight_of_leading_monomials():
    k = 2
    assert lmr_weight(k, 0, 3) == (1, 0, 0)
    assert lmr_weight(k, 3 * k + 2, 0) == (0, 1, 0)
    assert lmr_weight(k, k + 1, 2) == (0, 0, -1)


@pytest.mark.parametrize("k,det", [(1, -1)])
def test_unimodular_k1(k, det):
    assert torus_translate(k).det() == det


@pytest.mark.parametrize("k", range(1, 11))
def test_unimodular(k):
    assert torus_translate(k).det() in (1, -1)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_abc_and_lmr_agree(rng, k):
    for _ in range(10):
        f = random_form(rng, k)
        t = TorusElement(*(small_rat(rng, 3, 2, nonzero=True) for _ in range(3)))
        assert act_torus(t, f, "lmr") == act_torus(lmr_to_abc(k, t), f, "abc")
        assert lmr_to_abc(k, abc_to_lmr(k, t)) == t


def test_abc_is_substitution():
    f = SEEDS[3](1)
    t = TorusElement(2, 3, 5)
    expected = {m: 5 * c * 2 ** m[0] * 3 ** m[1] for m, c in form_terms(f).items()}
    assert form_terms(act_torus(t, f, "abc")) == expected


def test_torus_rejects_zero_and_unknown_convention():
    with pytest.raises(MalformedInput):
        TorusElement(0, 1, 1)
    with pytest.raises(MalformedInput):
        act_torus(TorusElement.identity(), SEEDS[1](1), "xyz")
