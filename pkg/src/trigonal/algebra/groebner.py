"""Buchberger's algorithm in two variables, graded lex with ``y > x``.

Polynomials are kept with primitive integer coefficients internally (a
rational polynomial and its primitive integer multiple generate the same
ideal), which avoids the cost of ``Fraction`` arithmetic in the inner loops.
The only question answered here is whether the ideal is the unit ideal.
"""

import logging
from math import gcd

from .bipoly import BiPoly

log = logging.getLogger(__name__)


def _key(m):
    # graded lex with y > x: total degree, then y-exponent
    return (m[0] + m[1], m[1])


def _primitive(terms):
    g = 0
    for c in terms.values():
        g = gcd(g, c)
        if g == 1:
            break
    lm = max(terms, key=_key)
    if terms[lm] < 0:
        g = -g
    if g != 1:
        terms = {m: c // g for m, c in terms.items()}
    return terms, lm


def _to_integer(p):
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return {m: int(c * den) for m, c in p.terms.items()}


class _Poly:
    __slots__ = ("terms", "lm", "lc")

    def __init__(self, terms):
        self.terms, self.lm = _primitive(terms)
        self.lc = self.terms[self.lm]


def _divides(a, b):
    return a[0] <= b[0] and a[1] <= b[1]


def _lcm(a, b):
    return (max(a[0], b[0]), max(a[1], b[1]))


def _reduce(terms, basis):
    """Fully reduce ``terms`` (dict) modulo ``basis``; returns dict (maybe empty)."""
    h = dict(terms)
    done = {}
    while h:
        m = max(h, key=_key)
        c = h[m]
        for g in basis:
            if _divides(g.lm, m):
                break
        else:
            done[m] = h.pop(m)
            continue
        a, b = g.lc, c
        d = gcd(a, b)
        a //= d
        b //= d
        sx, sy = m[0] - g.lm[0], m[1] - g.lm[1]
        if a != 1:
            h = {k: v * a for k, v in h.items()}
            done = {k: v * a for k, v in done.items()}
        for (i, j), v in g.terms.items():
            k = (i + sx, j + sy)
            nv = h.get(k, 0) - b * v
            if nv:
                h[k] = nv
            else:
                h.pop(k, None)
        if a != 1 and (h or done):
            cont = 0
            for v in h.values():
                cont = gcd(cont, v)
                if cont == 1:
                    break
            if cont != 1:
                for v in done.values():
                    cont = gcd(cont, v)
                    if cont == 1:
                        break
            if cont > 1:
                h = {k: v // cont for k, v in h.items()}
                done = {k: v // cont for k, v in done.items()}
    return done


def _spoly(f, g):
    l = _lcm(f.lm, g.lm)
    fx, fy = l[0] - f.lm[0], l[1] - f.lm[1]
    gx, gy = l[0] - g.lm[0], l[1] - g.lm[1]
    d = gcd(f.lc, g.lc)
    ca, cb = g.lc // d, f.lc // d
    out = {}
    for (i, j), v in f.terms.items():
        out[(i + fx, j + fy)] = ca * v
    for (i, j), v in g.terms.items():
        k = (i + gx, j + gy)
        nv = out.get(k, 0) - cb * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def groebner_contains_one(gens):
    """Run Buchberger on integer term dicts; True as soon as a constant appears."""
    basis = []
    pairs = set()

    def add(terms):
        p = _Poly(terms)
        if p.lm == (0, 0):
            return True
        idx = len(basis)
        basis.append(p)
        for i in range(idx):
            pairs.add((i, idx))
        return False

    for t in gens:
        r = _reduce(t, basis)
        if r and add(r):
            return True

    while pairs:
        i, j = min(pairs, key=lambda ij: (_key(_lcm(basis[ij[0]].lm, basis[ij[1]].lm)), ij))
        pairs.discard((i, j))
        fi, fj = basis[i], basis[j]
        l = _lcm(fi.lm, fj.lm)
        # product criterion
        if l[0] == fi.lm[0] + fj.lm[0] and l[1] == fi.lm[1] + fj.lm[1]:
            continue
        # chain criterion
        skip = False
        for k, fk in enumerate(basis):
            if k == i or k == j or not _divides(fk.lm, l):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                skip = True
                break
        if skip:
            continue
        r = _reduce(_spoly(fi, fj), basis)
        if r and add(r):
            return True
    log.debug("groebner basis of size %d without constants", len(basis))
    return False


def unit_ideal_2var(gens):
    """True iff 1 lies in the ideal of Q[x, y] generated by the BiPolys ``gens``."""
    ints = [_to_integer(g) for g in gens if not g.is_zero()]
    if not ints:
        log.warning("unit_ideal_2var called with only zero generators")
        return False
    return groebner_contains_one(ints)


__all__ = ["unit_ideal_2var", "BiPoly"]
