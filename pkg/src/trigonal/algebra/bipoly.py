"""Sparse polynomials in two variables over the rationals.

A :class:`BiPoly` maps exponent pairs ``(i, j)`` to the coefficient of
``x^i y^j``.  The same type is used for the chart at infinity, where the two
variables are read as ``u, v``.
"""

from fractions import Fraction

from .rational import as_rat
from .unipoly import UniPoly

_ZERO = Fraction(0)
_ONE = Fraction(1)


class BiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = c if type(c) is Fraction else as_rat(c)
                if c:
                    clean[(int(mono[0]), int(mono[1]))] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def from_x_poly(cls, p):
        return cls({(i, 0): c for i, c in enumerate(p.coeffs)})

    @classmethod
    def from_y_coeffs(cls, coeffs):
        """Build ``sum_j coeffs[j](x) * y^j`` from UniPolys in ``x``."""
        terms = {}
        for j, cj in enumerate(coeffs):
            for i, c in enumerate(cj.coeffs):
                if c:
                    terms[(i, j)] = c
        return cls._raw(terms)

    # --- queries ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, i, j):
        return self.terms.get((i, j), _ZERO)

    def degree_x(self):
        return max((i for i, _ in self.terms), default=-1)

    def degree_y(self):
        return max((j for _, j in self.terms), default=-1)

    def total_degree(self):
        return max((i + j for i, j in self.terms), default=-1)

    def y_coeffs(self):
        """Coefficients in ``y`` as a list of UniPolys in ``x`` (index = y-degree)."""
        dy = self.degree_y()
        rows = [[] for _ in range(dy + 1)]
        for (i, j), c in self.terms.items():
            row = rows[j]
            if len(row) <= i:
                row.extend([_ZERO] * (i + 1 - len(row)))
            row[i] = c
        return [UniPoly(r) for r in rows]

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == BiPoly.constant(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"BiPoly({self.pretty()})"

    def pretty(self, xvar="x", yvar="y"):
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda m: (-(m[0] + m[1]), -m[1])):
            c = self.terms[(i, j)]
            mono = "*".join(
                s for s in (
                    "" if i == 0 else (xvar if i == 1 else f"{xvar}^{i}"),
                    "" if j == 0 else (yvar if j == 1 else f"{yvar}^{j}"),
                ) if s
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"({c})*{mono}" if c.denominator != 1 else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # --- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, _ZERO) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return BiPoly()
            return BiPoly._raw({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                m = (i1 + i2, j1 + j2)
                out[m] = out.get(m, _ZERO) + c1 * c2
        return BiPoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative exponent")
        result = BiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def diff_x(self):
        return BiPoly._raw({(i - 1, j): c * i for (i, j), c in self.terms.items() if i})

    def diff_y(self):
        return BiPoly._raw({(i, j - 1): c * j for (i, j), c in self.terms.items() if j})

    def __call__(self, x, y):
        x, y = as_rat(x), as_rat(y)
        return sum((c * x**i * y**j for (i, j), c in self.terms.items()), _ZERO)

    def at_x(self, x0):
        """Specialize ``x = x0``; the result is a UniPoly in ``y``."""
        x0 = as_rat(x0)
        out = {}
        for (i, j), c in self.terms.items():
            out[j] = out.get(j, _ZERO) + c * x0**i
        dy = max(out, default=-1)
        return UniPoly([out.get(j, _ZERO) for j in range(dy + 1)])

    def at_y(self, y0):
        """Specialize ``y = y0``; the result is a UniPoly in ``x``."""
        y0 = as_rat(y0)
        out = {}
        for (i, j), c in self.terms.items():
            out[i] = out.get(i, _ZERO) + c * y0**j
        dx = max(out, default=-1)
        return UniPoly([out.get(i, _ZERO) for i in range(dx + 1)])

    def substitute(self, xsub, ysub):
        """Return ``self(xsub, ysub)`` for BiPoly substitutes."""
        dx, dy = self.degree_x(), self.degree_y()
        xp = [BiPoly.constant(1)]
        for _ in range(dx):
            xp.append(xp[-1] * xsub)
        yp = [BiPoly.constant(1)]
        for _ in range(dy):
            yp.append(yp[-1] * ysub)
        acc = {}
        for (i, j), c in self.terms.items():
            for m, cm in (xp[i] * yp[j]).terms.items():
                acc[m] = acc.get(m, _ZERO) + c * cm
        return BiPoly._raw({m: c for m, c in acc.items() if c})
