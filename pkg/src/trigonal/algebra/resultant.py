"""Resultants with respect to ``y`` over the coefficient ring Q[x].

The subresultant pseudo-remainder sequence keeps every intermediate
polynomial in Q[x][y]; the divisions it performs are exact.  The result is
the Sylvester determinant with the rows of ``f`` first.
"""

from ..errors import DomainError
from .bipoly import BiPoly
from .unipoly import UniPoly

_ONE = UniPoly((1,))


def _trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _deg(p):
    return len(p) - 1


def prem(a, b):
    """Pseudo-remainder of ``a`` by ``b`` (lists of UniPoly, index = y-degree).

    ``lc(b)^(deg a - deg b + 1) * a = q * b + r``.
    """
    r = list(a)
    db = _deg(b)
    lcb = b[-1]
    e = _deg(r) - db + 1
    while r and _deg(r) >= db:
        shift = _deg(r) - db
        lcr = r[-1]
        r = [c * lcb for c in r]
        for j, bj in enumerate(b):
            r[shift + j] = r[shift + j] - lcr * bj
        _trim(r)
        e -= 1
    if e > 0:
        factor = lcb ** e
        r = [c * factor for c in r]
    return r


def resultant_y_lists(a, b):
    """Resultant of two y-polynomials with coefficients in Q[x]."""
    a, b = _trim(list(a)), _trim(list(b))
    if not a or not b:
        return UniPoly()
    da, db = _deg(a), _deg(b)
    if da == 0 and db == 0:
        return _ONE
    if db == 0:
        return b[0] ** da
    if da == 0:
        return a[0] ** db

    sign = 1
    if da < db:
        a, b = b, a
        if da % 2 and db % 2:
            sign = -sign
    g = _ONE
    h = _ONE
    while True:
        da, db = _deg(a), _deg(b)
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = prem(a, b)
        a = b
        divisor = g * h ** delta
        b = [c.exact_div(divisor) for c in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = (g ** delta).exact_div(h ** (delta - 1))
        if not b:
            return UniPoly()
        if _deg(b) == 0:
            da = _deg(a)
            if da == 0:
                res = _ONE
            elif da == 1:
                res = b[0]
            else:
                res = (b[0] ** da).exact_div(h ** (da - 1))
            return res * sign


def resultant_y(f, g):
    """Resultant of two BiPolys with respect to ``y``, as a UniPoly in ``x``.

    Both inputs must have positive degree in ``y``.
    """
    if f.degree_y() < 1 or g.degree_y() < 1:
        raise DomainError("resultant_y needs positive degree in y")
    return resultant_y_lists(f.y_coeffs(), g.y_coeffs())
