"""Integer matrices, Smith normal form and lattice consistency of torus equations."""

from fractions import Fraction

from ..errors import MalformedInput
from .rational import as_rat


class IntMatrix:
    """An immutable rectangular matrix of Python integers."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise MalformedInput("ragged matrix")
        self.rows = rows

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m, n):
        return cls([[0] * n for _ in range(m)])

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def tolist(self):
        return [list(r) for r in self.rows]

    def transpose(self):
        return IntMatrix(zip(*self.rows)) if self.rows else IntMatrix([])

    def __matmul__(self, other):
        cols = list(zip(*other.rows))
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])

    def det(self):
        """Bareiss fraction-free determinant."""
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return 1
        a = [list(r) for r in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def inverse(self):
        """Inverse of a unimodular matrix (integer entries by the adjugate)."""
        n, m = self.shape
        d = self.det()
        if d not in (1, -1):
            raise ValueError(f"matrix is not unimodular (det {d})")
        inv = []
        for i in range(n):
            row = []
            for j in range(n):
                minor = IntMatrix(
                    [r[:i] + r[i + 1:] for k, r in enumerate(self.rows) if k != j]
                )
                row.append((-1) ** (i + j) * minor.det() * d)
            inv.append(row)
        return IntMatrix(inv)


def smith_normal_form(matrix):
    """Return ``(diagonal, left, right)`` with ``left @ M @ right = diag(diagonal)``.

    ``diagonal`` has ``min(rows, cols)`` nonnegative entries, each dividing
    the next; ``left`` and ``right`` are unimodular.
    """
    if not isinstance(matrix, IntMatrix):
        matrix = IntMatrix(matrix)
    m, n = matrix.shape
    a = [list(r) for r in matrix.rows]
    left = [[int(i == j) for j in range(m)] for i in range(m)]
    right = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in right:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def add_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        for r in right:
            r[dst] += q * r[src]

    for t in range(min(m, n)):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            changed = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        changed = True
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        changed = True
            if changed:
                cands = [(abs(a[i][t]), i, "r") for i in range(t + 1, m) if a[i][t]]
                cands += [(abs(a[t][j]), j, "c") for j in range(t + 1, n) if a[t][j]]
                _, idx, kind = min(cands)
                if kind == "r":
                    swap_rows(t, idx)
                else:
                    swap_cols(t, idx)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]

    diagonal = [a[i][i] for i in range(min(m, n))]
    return diagonal, IntMatrix(left), IntMatrix(right)


def kernel_lattice(weights):
    """Integer basis of ``{c : sum_j c_j * weights[j] = 0}`` (rows of the left transform)."""
    w = IntMatrix(weights)
    diagonal, left, _ = smith_normal_form(w)
    rank = sum(1 for d in diagonal if d)
    return [list(left.rows[i]) for i in range(rank, len(weights))]


def _as_vectors(weights):
    out = []
    for w in weights:
        if isinstance(w, int):
            out.append([w])
        else:
            out.append([int(v) for v in w])
    if out and any(len(v) != len(out[0]) for v in out):
        raise MalformedInput("weight vectors of different lengths")
    return out


def multiplicative_consistency(weights, ratios):
    """Is there a complex torus point ``t`` with ``t**weights[j] == ratios[j]`` for all ``j``?

    ``weights`` are integer vectors (plain ints are read as 1-vectors) and
    ``ratios`` nonzero rationals.  Such a ``t`` exists exactly when every
    integer relation among the weights is matched by the ratios, because the
    multiplicative group of the complex numbers is divisible.
    """
    if len(weights) != len(ratios):
        raise MalformedInput("weights and ratios differ in length")
    if not weights:
        return True
    ratios = [as_rat(r) for r in ratios]
    if any(not r for r in ratios):
        raise MalformedInput("ratios must be nonzero")
    vectors = _as_vectors(weights)
    for c in kernel_lattice(vectors):
        prod = Fraction(1)
        for cj, rj in zip(c, ratios):
            if cj:
                prod *= rj ** cj
        if prod != 1:
            return False
    return True
