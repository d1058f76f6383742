"""Finite presentations of discriminant knot groups and the conjectured secondary braid groups.

Words are tuples of signed generator indices starting at 1; ``-i`` is the
inverse of ``t_i``.  A relation ``(u, w)`` reads ``u = w``.
"""

from dataclasses import dataclass

from .algebra import IntMatrix, smith_normal_form
from .algebra.rational import as_rat
from .curves import make_form
from .errors import DomainError, MalformedInput


@dataclass(frozen=True)
class Presentation:
    n_generators: int
    relations: tuple
    family: str
    conjectural: bool = False
    extrapolated: bool = False

    def __post_init__(self):
        if self.n_generators < 0:
            raise MalformedInput("negative number of generators")
        for rel in self.relations:
            for word in rel:
                for letter in word:
                    if letter == 0 or abs(letter) > self.n_generators:
                        raise MalformedInput(f"letter {letter} out of range")

    def relation_types(self):
        """Count relations by shape: braid, commutation, triangle, other."""
        counts = {"braid": 0, "commutation": 0, "triangle": 0, "other": 0}
        for lhs, rhs in self.relations:
            if len(lhs) == 3 and lhs == (lhs[0], lhs[1], lhs[0]) and rhs == (lhs[1], lhs[0], lhs[1]):
                counts["braid"] += 1
            elif len(lhs) == 2 and rhs == lhs[::-1]:
                counts["commutation"] += 1
            elif len(lhs) == 4 and rhs == lhs[1:3] + (lhs[0], lhs[1]):
                counts["triangle"] += 1
            else:
                counts["other"] += 1
        return counts


def _triangle_artin_relations(n):
    braid, commute, triangle = [], [], []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if j - i <= 2:
                braid.append(((i, j, i), (j, i, j)))
            else:
                commute.append(((i, j), (j, i)))
    for i in range(1, n - 1):
        triangle.append(((i, i + 1, i + 2, i), (i + 1, i + 2, i, i + 1)))
    return tuple(braid + commute + triangle)


def build_piK(n):
    """Presentation of ``pi^K(y^3 + x^n)`` with ``2(n-1)`` generators.

    The pattern is the published one for ``n = 3k+2``; other ``n`` get the
    same pattern and are flagged as extrapolated.
    """
    if not isinstance(n, int) or n < 2:
        raise DomainError("build_piK needs n >= 2")
    gens = 2 * (n - 1)
    return Presentation(
        gens,
        _triangle_artin_relations(gens),
        family=f"PiK_y3xn({n})",
        extrapolated=(n % 3 != 2),
    )


def build_conjecture_4k2k(k):
    """Conjectured presentation for the ``(4k, 2k)`` locus: ``6k+3`` generators."""
    if not isinstance(k, int) or k < 1:
        raise DomainError("build_conjecture_4k2k needs k >= 1")
    gens = 6 * k + 3
    return Presentation(gens, _triangle_artin_relations(gens), family=f"Conjecture4k2k({k})",
                        conjectural=True)


def central_word(k):
    """``(t_1 ... t_{6k+2})^(9k+6)``, the central element factored out for the ``(6k)`` locus."""
    if k < 1:
        raise DomainError("central_word needs k >= 1")
    return tuple(range(1, 6 * k + 3)) * (9 * k + 6)


def exponent_vector(word, n_generators):
    vec = [0] * n_generators
    for letter in word:
        vec[abs(letter) - 1] += 1 if letter > 0 else -1
    return vec


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^free_rank`` plus cyclic torsion of the listed orders."""

    free_rank: int
    torsion: tuple


def abelianization(presentation):
    n = presentation.n_generators
    rows = []
    for lhs, rhs in presentation.relations:
        a, b = exponent_vector(lhs, n), exponent_vector(rhs, n)
        rows.append([x - y for x, y in zip(a, b)])
    if not rows or n == 0:
        return AbelianGroup(n, ())
    diagonal, _, _ = smith_normal_form(IntMatrix(rows))
    rank = sum(1 for d in diagonal if d)
    return AbelianGroup(n - rank, tuple(d for d in diagonal if d > 1))


def section_embedding(k, p, q):
    """``Y^3 + p Y + q  ->  y^3 + p x^{2k+2} y + q x^{3k+3} + 1``."""
    p, q = as_rat(p), as_rat(q)
    r = (0,) * (k + 2)
    pp = (0,) * (2 * k + 2) + (p,)
    qq = (1,) + (0,) * (3 * k + 2) + (q,)
    return make_form(k, 1, r, pp, qq)


def cusp_discriminant_ok(p, q):
    """``4 p^3 + 27 q^2 != 0``: ``Y^3 + p Y + q`` has three distinct roots."""
    p, q = as_rat(p), as_rat(q)
    return 4 * p**3 + 27 * q**2 != 0
