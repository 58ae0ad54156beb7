"""Level-one elliptic modular forms with exact q-expansions.

Cusp form bases are built from monomials in the discriminant form and the
two Eisenstein generators, then row reduced to a staircase basis.  Hecke
operators act directly on coefficients, and eigenforms are extracted from
the exact characteristic polynomial of the prime-2 Hecke matrix; quadratic
eigenvalue fields are handled symbolically, anything of higher degree is
refused.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DimensionMismatchError,
    InconsistencyError,
    TruncationError,
    UnsupportedFieldError,
    UsageError,
)
from .numeric import QuadExt, bernoulli_number, is_prime, sigma, sqrt_rational
from .qseries import QSeries, RatMatrix


def dim_modular_forms(weight: int) -> int:
    """Dimension of the full space of level-one modular forms."""
    if weight < 0 or weight % 2:
        return 0
    if weight % 12 == 2:
        return weight // 12
    return weight // 12 + 1


def dim_cusp_forms(weight: int) -> int:
    """Dimension of the level-one cusp space."""
    if weight < 12 or weight % 2:
        return 0
    return dim_modular_forms(weight) - 1


class EllipticForm:
    """A modular form of even weight for the full modular group."""

    __slots__ = ("weight", "series")

    def __init__(self, weight: int, series: QSeries):
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "series", series)

    def __setattr__(self, *args):  # pragma: no cover - immutability guard
        raise AttributeError("EllipticForm values are immutable")

    @property
    def prec(self) -> int:
        return self.series.prec

    def a(self, n: int):
        """Fourier coefficient at q**n."""
        return self.series.coefficient(n)

    def is_cusp_form(self) -> bool:
        return self.a(0) == 0

    def __eq__(self, other):
        if not isinstance(other, EllipticForm):
            return NotImplemented
        return self.weight == other.weight and self.series == other.series

    def __hash__(self):
        return hash((self.weight, self.series))

    def __repr__(self):
        return f"EllipticForm(weight={self.weight}, prec={self.prec})"


class EllipticEigenform(EllipticForm):
    """A normalized Hecke eigenform; coefficients may be quadratic irrationals.

    ``field_disc`` is None for rational eigenforms and the squarefree radicand
    of the coefficient field otherwise.
    """

    __slots__ = ("field_disc",)

    def __init__(self, weight: int, series: QSeries, field_disc: int | None = None):
        if series.coefficient(1) != 1:
            raise UsageError("eigenforms must be normalized with leading coefficient 1")
        super().__init__(weight, series)
        object.__setattr__(self, "field_disc", field_disc)

    def __repr__(self):
        tag = "rational" if self.field_disc is None else f"Q(sqrt({self.field_disc}))"
        return f"EllipticEigenform(weight={self.weight}, prec={self.prec}, field={tag})"


def eisenstein(weight: int, prec: int) -> EllipticForm:
    """Normalized Eisenstein series of even weight >= 4."""
    if weight % 2 or weight < 4:
        raise UsageError(f"no Eisenstein series of weight {weight} here")
    factor = Fraction(-2 * weight) / bernoulli_number(weight)
    coeffs = [Fraction(1)] + [factor * sigma(weight - 1, n) for n in range(1, prec + 1)]
    ints = [int(c) if c.denominator == 1 else c for c in coeffs]
    return EllipticForm(weight, QSeries(ints, prec))


def _eta_power24(prec: int) -> QSeries:
    # cube of the eta q-expansion (without the q**(1/8)) via the classical
    # triangular-number identity, then three squarings
    cube = [0] * (prec + 1)
    k = 0
    while k * (k + 1) // 2 <= prec:
        cube[k * (k + 1) // 2] = (-1) ** k * (2 * k + 1)
        k += 1
    s = QSeries(cube, prec)
    for _ in range(3):
        s = s * s
    return s


def delta(prec: int) -> EllipticForm:
    """The weight-12 discriminant cusp form, from its eta-product expansion."""
    if prec < 1:
        raise UsageError("the discriminant form needs validity to at least q**1")
    return EllipticForm(12, _eta_power24(prec - 1).shift(1))


def _monomial_exponents(weight: int) -> list[tuple[int, int, int]]:
    """All (a, b, c) with 12a + 4b + 6c = weight and a >= 1."""
    out = []
    for a in range(1, weight // 12 + 1):
        rem = weight - 12 * a
        for c in range(rem // 6 + 1):
            if (rem - 6 * c) % 4 == 0:
                out.append((a, (rem - 6 * c) // 4, c))
    return out


def cusp_basis(weight: int, prec: int) -> list[EllipticForm]:
    """Echelonized exact basis of the level-one cusp space."""
    expected = dim_cusp_forms(weight)
    if expected == 0:
        return []
    if prec < expected + 1:
        raise TruncationError(
            f"weight {weight} needs validity to q**{expected + 1}", required=expected + 1
        )
    d = delta(prec).series
    e4 = eisenstein(4, prec).series
    e6 = eisenstein(6, prec).series
    rows = []
    for a, b, c in _monomial_exponents(weight):
        s = d**a * e4**b * e6**c
        rows.append([s.coefficient(n) for n in range(1, prec + 1)])
    red, pivots = RatMatrix(rows).rref()
    if len(pivots) != expected:
        raise DimensionMismatchError(
            f"cusp space of weight {weight}: got rank {len(pivots)}, expected {expected}"
        )
    basis = []
    for r in range(expected):
        coeffs = [0] + red.entries[r]
        basis.append(EllipticForm(weight, QSeries(coeffs, prec)))
    return basis


def hecke_Tp(f: EllipticForm, p: int) -> EllipticForm:
    """Prime Hecke operator on coefficients; output valid to prec // p."""
    if not is_prime(p):
        raise UsageError(f"{p} is not prime")
    out_prec = f.prec // p
    if out_prec < 1:
        raise TruncationError(
            f"applying T({p}) needs input validity >= {p}", required=p
        )
    pk = p ** (f.weight - 1)
    coeffs = []
    for n in range(out_prec + 1):
        c = f.a(p * n)
        if n % p == 0:
            c = c + pk * f.a(n // p)
        coeffs.append(c)
    return EllipticForm(f.weight, QSeries(coeffs, out_prec))


def hecke_matrix(weight: int, p: int, prec: int) -> RatMatrix:
    """Matrix of T(p) on the echelonized cusp basis, fully verified."""
    basis = cusp_basis(weight, prec)
    d = len(basis)
    if d == 0:
        return RatMatrix([])
    if prec // p < d:
        raise TruncationError(
            f"T({p}) matrix on weight {weight} needs validity >= {p * d}", required=p * d
        )
    cols = []
    for f in basis:
        tf = hecke_Tp(f, p)
        # staircase basis: coordinate i is the coefficient at q**(i+1)
        coords = [tf.a(i + 1) for i in range(d)]
        recombined = QSeries.zero(tf.prec)
        for x, b in zip(coords, basis):
            recombined = recombined + x * b.series.truncate(tf.prec)
        if recombined != tf.series:
            raise InconsistencyError(
                f"T({p}) does not stabilize the computed weight-{weight} cusp basis"
            )
        cols.append(coords)
    return RatMatrix([[cols[j][i] for j in range(d)] for i in range(d)])


def _quadratic_roots(c0: Fraction, c1: Fraction):
    """Roots of x**2 + c1 x + c0, exact; rational pair or conjugate QuadExt pair."""
    disc = c1 * c1 - 4 * c0
    if disc < 0:
        raise UnsupportedFieldError("complex eigenvalues cannot occur for these operators")
    root = sqrt_rational(disc)
    return (-c1 + root) / 2, (-c1 - root) / 2


def eigenforms(weight: int, prec: int) -> list[EllipticEigenform]:
    """Simultaneous normalized eigenbasis of the level-one cusp space.

    Spaces of dimension two are split through the exact characteristic
    polynomial of the prime-2 Hecke matrix; eigenvalue fields of degree
    three or more raise ``UnsupportedFieldError``.
    """
    basis = cusp_basis(weight, prec)
    d = len(basis)
    if d == 0:
        return []
    if d == 1:
        return [EllipticEigenform(weight, basis[0].series)]
    if d > 2:
        raise UnsupportedFieldError(
            f"weight {weight} has a {d}-dimensional cusp space; "
            "eigenvalue fields beyond degree 2 are not supported"
        )
    m = hecke_matrix(weight, 2, prec)
    poly = m.charpoly()
    lam1, lam2 = _quadratic_roots(poly[0], poly[1])
    out = []
    m12 = m.entries[0][1]
    m21 = m.entries[1][0]
    for lam in (lam1, lam2):
        if m12 != 0:
            v = (m12, lam - m.entries[0][0])
        elif m21 != 0:
            v = (lam - m.entries[1][1], m21)
        else:
            v = (1, 0) if lam == m.entries[0][0] else (0, 1)
        series = v[0] * basis[0].series + v[1] * basis[1].series
        lead = series.coefficient(1)
        if lead == 0:
            raise InconsistencyError("eigenvector with vanishing leading coefficient")
        series = series * (1 / lead if isinstance(lead, QuadExt) else Fraction(1) / lead)
        disc = lam.d if isinstance(lam, QuadExt) and lam.b != 0 else None
        form = EllipticEigenform(weight, series, field_disc=disc)
        _verify_eigenform(form, 2)
        out.append(form)
    return out


def _verify_eigenform(f: EllipticEigenform, p: int) -> None:
    tf = hecke_Tp(f, p)
    expected = f.series.truncate(tf.prec) * f.a(p)
    if expected != tf.series:
        raise InconsistencyError(
            f"claimed eigenform of weight {f.weight} is not a T({p}) eigenvector"
        )


def eigenform_field_poly(weight: int, prec: int) -> list[Fraction]:
    """Characteristic polynomial of T(2) on the cusp space (low to high)."""
    return hecke_matrix(weight, 2, prec).charpoly()
