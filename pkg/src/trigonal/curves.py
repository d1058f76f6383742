"""Trigonal curves on the Hirzebruch surface F_{k+1}.

A curve of class ``3 sigma_0`` is given in the affine chart ``(x, y)`` by

    f = s y^3 + r(x) y^2 + p(x) y + q(x),   deg r <= k+1, deg p <= 2k+2, deg q <= 3k+3,

i.e. by the monomials ``x^i y^j`` with ``i + (k+1) j <= 3k+3``.  The fibre at
infinity ``L0`` is ``u = 0`` in the chart ``u = 1/x, v = y / x^(k+1)``.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction

from .algebra import BiPoly, UniPoly, root_multiplicities, squarefree_part, unit_ideal_2var
from .algebra.rational import as_rat
from .algebra.unipoly import gcd
from .errors import DomainError, MalformedInput, NotRegularError

_ZERO = Fraction(0)


def block_lengths(k):
    """Lengths of the coefficient lists ``r, p, q`` for a given ``k``."""
    return k + 2, 2 * k + 3, 3 * k + 4


@dataclass(frozen=True)
class TrigonalForm:
    """Coefficient vector of ``f`` in V^k; lists run from degree 0 upward."""

    k: int
    s: Fraction
    r: tuple
    p: tuple
    q: tuple

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise MalformedInput(f"k must be a positive integer, got {self.k!r}")
        lr, lp, lq = block_lengths(self.k)
        if (len(self.r), len(self.p), len(self.q)) != (lr, lp, lq):
            raise MalformedInput(
                f"degree bound violation: expected lengths {lr}, {lp}, {lq} for k={self.k}, "
                f"got {len(self.r)}, {len(self.p)}, {len(self.q)}"
            )
        object.__setattr__(self, "s", as_rat(self.s))
        for name in ("r", "p", "q"):
            object.__setattr__(self, name, tuple(as_rat(c) for c in getattr(self, name)))

    # coefficient blocks as polynomials in x
    @property
    def r_poly(self):
        return UniPoly(self.r)

    @property
    def p_poly(self):
        return UniPoly(self.p)

    @property
    def q_poly(self):
        return UniPoly(self.q)

    def coeff(self, i, j):
        """Coefficient of ``x^i y^j`` (zero outside V^k)."""
        block = (self.q, self.p, self.r, (self.s,))[j] if 0 <= j <= 3 else ()
        return block[i] if 0 <= i < len(block) else _ZERO

    def to_bipoly(self):
        terms = {(0, 3): self.s}
        for j, block in ((2, self.r), (1, self.p), (0, self.q)):
            for i, c in enumerate(block):
                if c:
                    terms[(i, j)] = c
        return BiPoly(terms)

    def replace(self, **changes):
        data = {"k": self.k, "s": self.s, "r": self.r, "p": self.p, "q": self.q}
        data.update(changes)
        return TrigonalForm(**data)

    def __str__(self):
        return self.to_bipoly().pretty()


def make_form(k, s, r, p, q):
    return TrigonalForm(k, s, tuple(r), tuple(p), tuple(q))


def zero_form(k, s=1):
    lr, lp, lq = block_lengths(k)
    return TrigonalForm(k, s, (0,) * lr, (0,) * lp, (0,) * lq)


def form_from_terms(k, terms):
    """Build a form from ``{(i, j): coeff}``; monomials outside V^k are rejected."""
    lr, lp, lq = block_lengths(k)
    s = _ZERO
    r, p, q = [_ZERO] * lr, [_ZERO] * lp, [_ZERO] * lq
    for (i, j), c in terms.items():
        c = as_rat(c)
        if not c:
            continue
        if i < 0 or j < 0 or i + (k + 1) * j > 3 * k + 3:
            raise DomainError(f"degree bound violation: monomial x^{i} y^{j} not in V^{k}")
        if j == 3:
            s = c
        else:
            (q, p, r)[j][i] = c
    return TrigonalForm(k, s, tuple(r), tuple(p), tuple(q))


def form_from_bipoly(k, poly):
    return form_from_terms(k, poly.terms)


def chart_at_infinity(f):
    """``F(u, v) = u^(3k+3) f(1/u, v/u^(k+1))``; ``F(0, v)`` is the restriction to L0."""
    k = f.k
    terms = {(0, 3): f.s}
    for j, block, top in ((2, f.r, k + 1), (1, f.p, 2 * k + 2), (0, f.q, 3 * k + 3)):
        for i, c in enumerate(block):
            if c:
                terms[(top - i, j)] = c
    return BiPoly(terms)


def l0_restriction(f):
    """``c(v) = s v^3 + r_{k+1} v^2 + p_{2k+2} v + q_{3k+3}``."""
    k = f.k
    return UniPoly((f.q[3 * k + 3], f.p[2 * k + 2], f.r[k + 1], f.s))


@dataclass(frozen=True)
class L0Profile:
    restriction: UniPoly
    distinct_points: int
    multiplicities: tuple


def l0_profile(f):
    if not f.s:
        raise DomainError("form degenerates on L0")
    c = l0_restriction(f)
    distinct = squarefree_part(c).degree
    mults = tuple(root_multiplicities(c))
    if sum(mults) != 3 or len(mults) != distinct:
        raise AssertionError(f"inconsistent root count for {c}")
    return L0Profile(c, distinct, mults)


def affine_smooth(f):
    """No common zero of ``f, df/dx, df/dy`` in C^2."""
    F = f.to_bipoly()
    return unit_ideal_2var([F, F.diff_x(), F.diff_y()])


def smooth_along_l0(f):
    """No singular point of the curve on the fibre ``u = 0`` of the second chart."""
    F = chart_at_infinity(f)
    c = F.at_x(0)
    dv = c.derivative()
    # coefficient of u^1, as a polynomial in v
    du = UniPoly([F.coeff(1, j) for j in range(4)])
    g = gcd(gcd(c, dv), du)
    return g.degree <= 0 and not (c.is_zero() and dv.is_zero() and du.is_zero())


def is_regular(f):
    """``s != 0`` and the curve ``f = 0`` is smooth on F_{k+1}.

    The negative section ``E`` needs no check: with ``s != 0`` the curve
    misses it.
    """
    if not f.s:
        return False
    return smooth_along_l0(f) and affine_smooth(f)


class StratumKind(enum.Enum):
    ONE_POINT = "OnePoint"
    TWO_POINT = "TwoPoint"
    THREE_POINT = "ThreePoint"


_KIND_BY_POINTS = {1: StratumKind.ONE_POINT, 2: StratumKind.TWO_POINT, 3: StratumKind.THREE_POINT}


def spin_parity(k):
    """Parity of the theta characteristic ``kL|_C``: that of ``h^0 = k + 1``."""
    return "even" if (k + 1) % 2 == 0 else "odd"


def genus(k):
    return 3 * k + 1


def signature(kind, k):
    return {
        StratumKind.ONE_POINT: (6 * k,),
        StratumKind.TWO_POINT: (4 * k, 2 * k),
        StratumKind.THREE_POINT: (2 * k, 2 * k, 2 * k),
    }[kind]


@dataclass(frozen=True)
class Stratum:
    kind: StratumKind
    genus: int
    signature: tuple
    spin_parity: str

    @classmethod
    def for_points(cls, k, distinct_points):
        kind = _KIND_BY_POINTS[distinct_points]
        return cls(kind, genus(k), signature(kind, k), spin_parity(k))

    def label(self):
        return "(" + ",".join(str(m) for m in self.signature) + ")"


def classify(f, check_regular=True):
    if check_regular and not is_regular(f):
        raise NotRegularError("not in discriminant complement")
    return Stratum.for_points(f.k, l0_profile(f).distinct_points)


def scroll_point(k, x, y):
    """Affine parametrization ``(1, x, ..., x^{2k}, y, xy, ..., x^{k-1} y)`` of S_{2k,k-1}."""
    x, y = as_rat(x), as_rat(y)
    n, m = 2 * k, k - 1
    return [x**i for i in range(n + 1)] + [x**i * y for i in range(m + 1)]


def scroll_matrix(z):
    """The two-row matrix whose rank condition cuts out S_{n,m}, with ``n = 2k, m = k-1``."""
    if len(z) % 3 != 1 or len(z) < 4:
        raise MalformedInput(f"scroll coordinates must have length 3k+1, got {len(z)}")
    k = (len(z) - 1) // 3
    n, m = 2 * k, k - 1
    top = [z[i] for i in range(n)] + [z[i] for i in range(n + 1, n + m + 1)]
    bottom = [z[i] for i in range(1, n + 1)] + [z[i] for i in range(n + 2, n + m + 2)]
    return top, bottom


def scroll_rank_ok(z):
    """True iff every 2x2 minor of the scroll matrix vanishes."""
    top, bottom = scroll_matrix([as_rat(c) for c in z])
    cols = len(top)
    return all(
        top[a] * bottom[b] == top[b] * bottom[a] for a in range(cols) for b in range(a + 1, cols)
    )


def dims(k):
    """``(dim H(2g-2), dim trigonal locus of maximal Maroni invariant, dim of its divisor)``."""
    if not isinstance(k, int) or k < 1:
        raise DomainError("k must be at least 1")
    return (6 * k + 1, 5 * k + 3, 5 * k + 2)
