"""Dense univariate polynomials over the rationals.

Coefficients are stored low degree first; the zero polynomial is the empty
tuple, so a nonzero polynomial always has a nonzero last entry.
"""

from fractions import Fraction

from ..errors import DomainError
from .rational import as_rat

_ZERO = Fraction(0)
_ONE = Fraction(1)


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if type(c) is Fraction else as_rat(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs):
        # caller guarantees Fractions with no trailing zeros
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        return obj

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, degree, c=1):
        return cls([0] * degree + [c])

    @classmethod
    def x(cls):
        return cls((0, 1))

    # --- basic queries -------------------------------------------------

    @property
    def degree(self):
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else _ZERO

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return _ZERO

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return self.pretty()

    def pretty(self, var="x"):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mono and c == 1:
                term = mono
            elif mono and c == -1:
                term = "-" + mono
            elif mono:
                term = f"({c})*{mono}" if c.denominator != 1 else f"{c}*{mono}"
            else:
                term = str(c)
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")

    # --- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly((other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw(tuple(-c for c in self.coeffs))

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
                return UniPoly()
            return UniPoly._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative exponent")
        result = UniPoly((_ONE,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        lcb = other.lc
        if len(rem) - 1 < db:
            return UniPoly(), self
        quo = [_ZERO] * (len(rem) - db)
        bc = other.coeffs
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if not c:
                continue
            c = c / lcb
            quo[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] -= c * bc[j]
        return UniPoly(quo), UniPoly(rem[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def __call__(self, x):
        acc = _ZERO if not isinstance(x, UniPoly) else UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return UniPoly._raw(tuple(c / lc for c in self.coeffs))

    def shift(self, d):
        """Return ``p(x + d)`` (Horner-style Taylor shift)."""
        d = as_rat(d)
        out = list(self.coeffs)
        n = len(out)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                out[j] += d * out[j + 1]
        return UniPoly(out)

    def scale(self, a):
        """Return ``p(a x)``."""
        a = as_rat(a)
        out = []
        power = _ONE
        for c in self.coeffs:
            out.append(c * power)
            power *= a
        return UniPoly(out)

    def reversed(self, n):
        """Coefficients of ``x^n p(1/x)``; requires ``deg p <= n``."""
        if self.degree > n:
            raise ValueError("degree exceeds reversal length")
        padded = list(self.coeffs) + [_ZERO] * (n + 1 - len(self.coeffs))
        return UniPoly(padded[::-1])


def gcd(a, b):
    """Monic gcd; ``gcd(0, 0) = 0``."""
    while b:
        a, b = b, a % b
    return a.monic()


def squarefree_part(c):
    """Monic product of the distinct irreducible factors of ``c``."""
    if not c:
        raise DomainError("zero polynomial")
    if c.degree == 0:
        return UniPoly((_ONE,))
    return (c // gcd(c, c.derivative())).monic()


def squarefree_decomposition(c):
    """Yun's algorithm: monic ``[a1, a2, ...]`` with ``c = lc * prod a_i^i``."""
    if not c:
        raise DomainError("zero polynomial")
    c = c.monic()
    if c.degree == 0:
        return []
    out = []
    dc = c.derivative()
    g = gcd(c, dc)
    b = c // g
    d = dc // g - b.derivative()
    while b.degree > 0:
        a = gcd(b, d)
        out.append(a)
        b = b // a
        d = d // a - b.derivative()
    return out


def root_multiplicities(c):
    """Multiplicities of the distinct complex roots of ``c``, largest first."""
    mults = []
    for i, a in enumerate(squarefree_decomposition(c), start=1):
        mults.extend([i] * a.degree)
    return sorted(mults, reverse=True)
