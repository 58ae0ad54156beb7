"""Truncated power series with exact coefficients, and exact linear algebra.

A ``QSeries`` knows the largest exponent to which it is valid and refuses to
hand out coefficients beyond it.  Binary operations take the minimum of the
two validity bounds, so a silent loss of precision cannot happen.
Coefficients are ints, Fractions, or quadratic irrationals; the arithmetic is
generic over all three.

``RatMatrix`` provides the exact row reduction, kernel, and characteristic
polynomial computations used for basis echelonization and Hecke matrices.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import TruncationError, UsageError
from .numeric import QuadExt, rat


class QSeries:
    """A power series known exactly up to and including exponent ``prec``."""

    __slots__ = ("prec", "coeffs")

    def __init__(self, coeffs, prec: int | None = None):
        coeffs = list(coeffs)
        if prec is None:
            prec = len(coeffs) - 1
        if prec < 0:
            raise UsageError("a series needs at least its constant term")
        if len(coeffs) < prec + 1:
            coeffs.extend([0] * (prec + 1 - len(coeffs)))
        object.__setattr__(self, "prec", prec)
        object.__setattr__(self, "coeffs", coeffs[: prec + 1])

    def __setattr__(self, *args):  # pragma: no cover - immutability guard
        raise AttributeError("QSeries values are immutable")

    @classmethod
    def zero(cls, prec: int) -> "QSeries":
        return cls([0] * (prec + 1), prec)

    @classmethod
    def one(cls, prec: int) -> "QSeries":
        return cls([1] + [0] * prec, prec)

    def coefficient(self, n: int):
        if n < 0:
            return 0
        if n > self.prec:
            raise TruncationError(
                f"coefficient {n} requested from a series valid to {self.prec}",
                required=n,
            )
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def valuation(self) -> int | None:
        """Exponent of the first nonzero coefficient, or None for zero series."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def truncate(self, prec: int) -> "QSeries":
        if prec > self.prec:
            raise TruncationError(
                f"cannot extend a series valid to {self.prec} out to {prec}",
                required=prec,
            )
        return QSeries(self.coeffs[: prec + 1], prec)

    def shift(self, j: int) -> "QSeries":
        """Multiply by q**j (j >= 0); validity grows with the shift."""
        if j < 0:
            raise UsageError("negative shifts are not supported")
        return QSeries([0] * j + self.coeffs, self.prec + j)

    # -- arithmetic -----------------------------------------------------

    def _binop(self, other, op):
        if isinstance(other, QSeries):
            n = min(self.prec, other.prec)
            return QSeries([op(self.coeffs[i], other.coeffs[i]) for i in range(n + 1)], n)
        if isinstance(other, (int, Fraction, QuadExt)):
            coeffs = list(self.coeffs)
            coeffs[0] = op(coeffs[0], other)
            return QSeries(coeffs, self.prec)
        return NotImplemented

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return QSeries([-c for c in self.coeffs], self.prec)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadExt)):
            return QSeries([c * other for c in self.coeffs], self.prec)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.prec, other.prec)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(min(len(a) - 1, n) + 1):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(min(len(b) - 1, n - i) + 1):
                bj = b[j]
                if bj != 0:
                    out[i + j] += ai * bj
        return QSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QSeries":
        if e < 0:
            raise UsageError("negative powers: use inverse() explicitly")
        out = QSeries.one(self.prec)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "QSeries":
        """Multiplicative inverse; requires an invertible constant term."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise UsageError("series with zero constant term has no inverse")
        inv0 = Fraction(1) / c0 if not isinstance(c0, QuadExt) else 1 / c0
        out = [inv0] + [0] * self.prec
        for n in range(1, self.prec + 1):
            acc = 0
            for i in range(1, n + 1):
                if self.coeffs[i] != 0 and out[n - i] != 0:
                    acc += self.coeffs[i] * out[n - i]
            out[n] = -acc * inv0
        return QSeries(out, self.prec)

    # -- comparison -----------------------------------------------------

    def agrees_with(self, other: "QSeries", upto: int | None = None) -> bool:
        n = min(self.prec, other.prec)
        if upto is not None:
            if upto > n:
                raise TruncationError("agreement requested beyond common validity", required=upto)
            n = upto
        return all(self.coeffs[i] == other.coeffs[i] for i in range(n + 1))

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.prec == other.prec and self.agrees_with(other)

    def __hash__(self):
        return hash((self.prec, tuple(self.coeffs)))

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.prec > 5 else ""
        return f"QSeries([{shown}{tail}], prec={self.prec})"


# ---------------------------------------------------------------------------
# exact matrices over the rationals
# ---------------------------------------------------------------------------

class RatMatrix:
    """A dense matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = [[rat(x) for x in row] for row in entries]
        if entries and any(len(row) != len(entries[0]) for row in entries):
            raise UsageError("ragged rows in matrix input")
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", len(entries[0]) if entries else 0)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, *args):  # pragma: no cover - immutability guard
        raise AttributeError("RatMatrix values are immutable")

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.entries))

    def __repr__(self):
        return f"RatMatrix({self.entries!r})"

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise UsageError("matrix dimensions do not match")
        return RatMatrix(
            [
                [
                    sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                    for j in range(other.cols)
                ]
                for i in range(self.rows)
            ]
        )

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise UsageError("matrix dimensions do not match")
        return RatMatrix(
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def scale(self, c) -> "RatMatrix":
        c = rat(c)
        return RatMatrix([[x * c for x in row] for row in self.entries])

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise UsageError("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), Fraction(0))

    # -- elimination -----------------------------------------------------

    def rref(self) -> tuple["RatMatrix", tuple[int, ...]]:
        """Reduced row echelon form and the tuple of pivot columns."""
        m = [row[:] for row in self.entries]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pivot_row = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            pv = m[r][c]
            m[r] = [x / pv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return RatMatrix(m), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> list[list[Fraction]]:
        """Exact basis of the right kernel (one vector per free column)."""
        red, pivots = self.rref()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            v = [Fraction(0)] * self.cols
            v[free] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -red.entries[r][free]
            basis.append(v)
        return basis

    def charpoly(self) -> list[Fraction]:
        """Monic characteristic polynomial det(xI - M), coefficients low to high."""
        if self.rows != self.cols:
            raise UsageError("characteristic polynomial of a non-square matrix")
        n = self.rows
        coeffs = [Fraction(0)] * (n + 1)
        coeffs[n] = Fraction(1)
        m = RatMatrix.identity(n)
        for k in range(1, n + 1):
            m = self @ m
            ck = -m.trace() / k
            coeffs[n - k] = ck
            m = m + RatMatrix.identity(n).scale(ck)
        return coeffs

    def solve(self, rhs: list) -> list[Fraction]:
        """Solve ``self @ x = rhs`` exactly; raises if inconsistent or ambiguous."""
        aug = RatMatrix([row + [rat(rhs[i])] for i, row in enumerate(self.entries)])
        red, pivots = aug.rref()
        if self.cols in pivots:
            raise UsageError("inconsistent linear system")
        if len(pivots) < self.cols:
            raise UsageError("underdetermined linear system")
        x = [Fraction(0)] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = red.entries[r][self.cols]
        return x


def poly_eval_matrix(coeffs: list[Fraction], m: RatMatrix) -> RatMatrix:
    """Evaluate a polynomial (low-to-high coefficients) at a square matrix."""
    out = RatMatrix([[0] * m.cols for _ in range(m.rows)])
    power = RatMatrix.identity(m.rows)
    for c in coeffs:
        if c != 0:
            out = out + power.scale(c)
        power = power @ m
    return out
