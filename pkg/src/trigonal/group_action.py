"""The coordinate-change group acting on V^k and its maximal torus.

A :class:`GElement` is the substitution

    x -> a x + a0,    y -> b y + b_{k+1} x^{k+1} + ... + b_0,

and ``act(g, f)`` is ``f`` composed with it.  The torus acts diagonally on
monomials, either as ``x^i y^j -> a^i b^j c x^i y^j`` ("abc") or through the
``lambda, mu, rho`` coordinates ("lmr") in which the normalizations are
expressed.
"""

from dataclasses import dataclass
from fractions import Fraction

from .algebra import BiPoly, IntMatrix, UniPoly
from .algebra.rational import as_rat
from .curves import TrigonalForm, form_from_bipoly
from .errors import DomainError, InternalError, MalformedInput


@dataclass(frozen=True)
class GElement:
    a: Fraction
    a0: Fraction
    b: Fraction
    bcoef: tuple

    def __post_init__(self):
        for name in ("a", "a0", "b"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))
        object.__setattr__(self, "bcoef", tuple(as_rat(c) for c in self.bcoef))
        if not self.a or not self.b:
            raise MalformedInput("a and b must be nonzero")
        if len(self.bcoef) < 2:
            raise MalformedInput("bcoef needs k+2 >= 3 entries")

    @property
    def k(self):
        return len(self.bcoef) - 2

    @classmethod
    def identity(cls, k):
        return cls(1, 0, 1, (0,) * (k + 2))

    @classmethod
    def x_affine(cls, k, a=1, a0=0):
        return cls(a, a0, 1, (0,) * (k + 2))

    @classmethod
    def y_shift(cls, k, shift, b=1):
        """``y -> b y + shift(x)`` with ``shift`` a UniPoly of degree <= k+1."""
        if shift.degree > k + 1:
            raise DomainError("y-shift exceeds degree k+1")
        return cls(1, 0, b, tuple(shift[i] for i in range(k + 2)))

    def shift_poly(self):
        return UniPoly(self.bcoef)

    def substitution(self):
        """The pair of BiPolys substituted for ``x`` and ``y``."""
        xs = BiPoly({(1, 0): self.a, (0, 0): self.a0})
        ys = BiPoly({(0, 1): self.b}) + BiPoly.from_x_poly(self.shift_poly())
        return xs, ys


def compose(g1, g2):
    """The element acting as ``g2`` first and then ``g1``.

    ``act(compose(g1, g2), f) == act(g1, act(g2, f))``; as substitutions this is
    ``phi2 o phi1``.
    """
    if g1.k != g2.k:
        raise DomainError("group elements for different k")
    a = g1.a * g2.a
    a0 = g2.a * g1.a0 + g2.a0
    b = g1.b * g2.b
    inner = UniPoly((g1.a0, g1.a))
    shift = g1.shift_poly() * g2.b + g2.shift_poly()(inner)
    return GElement(a, a0, b, tuple(shift[i] for i in range(g1.k + 2)))


def inverse(g):
    """``compose(g, inverse(g))`` is the identity."""
    a = 1 / g.a
    a0 = -g.a0 / g.a
    b = 1 / g.b
    # y = b Y + B(x)  =>  Y = (y - B(x)) / b, with x written through the inverse affine map
    inner = UniPoly((a0, a))
    shift = -(g.shift_poly()(inner)) * b
    return GElement(a, a0, b, tuple(shift[i] for i in range(g.k + 2)))


def act(g, f):
    """Substitute ``g`` into ``f`` and read the result back in V^k."""
    if g.k != f.k:
        raise DomainError(f"group element for k={g.k} applied to a form with k={f.k}")
    xs, ys = g.substitution()
    image = f.to_bipoly().substitute(xs, ys)
    try:
        return form_from_bipoly(f.k, image)
    except DomainError as exc:
        raise InternalError(f"action left V^k: {exc}") from exc


@dataclass(frozen=True)
class TorusElement:
    """A rational point of the three-torus.

    Under the "lmr" convention the entries are ``(lambda, mu, rho)``; under
    "abc" the same three slots are read as ``(a, b, c)``.
    """

    lam: Fraction
    mu: Fraction
    rho: Fraction

    def __post_init__(self):
        for name in ("lam", "mu", "rho"):
            v = as_rat(getattr(self, name))
            if not v:
                raise MalformedInput("torus coordinates must be nonzero")
            object.__setattr__(self, name, v)

    def as_tuple(self):
        return (self.lam, self.mu, self.rho)

    @classmethod
    def identity(cls):
        return cls(1, 1, 1)


def lmr_weight(k, i, j):
    """Exponents of ``(lambda, mu, rho)`` on the monomial ``x^i y^j``."""
    return (
        6 * k + 4 - 2 * i - 2 * k * j - j,
        3 * k + 3 - i - k * j - j,
        9 * k + 6 - 3 * i - 3 * k * j - 2 * j,
    )


def abc_weight(i, j):
    return (i, j, 1)


def _monomial_value(t, weight):
    out = Fraction(1)
    for base, e in zip(t, weight):
        if e:
            out *= base**e
    return out


def act_torus(t, f, convention="lmr"):
    """Scale every coefficient of ``f`` by the torus character of its monomial."""
    if convention not in ("lmr", "abc"):
        raise MalformedInput(f"unknown torus convention {convention!r}")
    k = f.k
    vals = t.as_tuple()

    def weight(i, j):
        return lmr_weight(k, i, j) if convention == "lmr" else abc_weight(i, j)

    s = f.s * _monomial_value(vals, weight(0, 3))
    blocks = []
    for j, block in ((2, f.r), (1, f.p), (0, f.q)):
        blocks.append(tuple(c * _monomial_value(vals, weight(i, j)) if c else c
                            for i, c in enumerate(block)))
    return TrigonalForm(k, s, *blocks)


def torus_translate(k):
    """Exponent matrix taking ``(lambda, mu, rho)`` to ``(a, b, c)``.

    Row ``i`` lists the exponents of ``lambda, mu, rho`` in the ``i``-th of
    ``a, b, c``.  The matrix is unimodular for every ``k``.
    """
    if k < 1:
        raise DomainError("k must be at least 1")
    m = IntMatrix([
        [-2, -1, -3],
        [-(2 * k + 1), -(k + 1), -(3 * k + 2)],
        [6 * k + 4, 3 * k + 3, 9 * k + 6],
    ])
    d = m.det()
    if d not in (1, -1):
        raise InternalError(f"torus exponent matrix has determinant {d} for k={k}")
    return m


def _apply_exponents(matrix, t):
    return TorusElement(*(_monomial_value(t.as_tuple(), row) for row in matrix.rows))


def lmr_to_abc(k, t):
    return _apply_exponents(torus_translate(k), t)


def abc_to_lmr(k, t):
    return _apply_exponents(torus_translate(k).inverse(), t)
