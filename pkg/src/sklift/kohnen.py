"""Half-integral weight cusp forms on Gamma0(4) and the plus space.

The full space of weight (2k-1)/2 forms is spanned by monomials in the unary
theta series and the odd-divisor weight-2 form.  The plus space is carved out
exactly as the kernel of the coefficient constraints, cross-checked against
the dimension of the corresponding integral-weight cusp space, and carries
the square-index Hecke action whose eigenvalues match the integral-weight
prime eigenvalues (that matching is how the two sides are glued together).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .elliptic import EllipticEigenform, dim_cusp_forms, eigenforms
from .errors import (
    DimensionMismatchError,
    InconsistencyError,
    NotAnEigenformError,
    TruncationError,
    UnsupportedFieldError,
    UsageError,
)
from .numeric import QuadExt, is_prime, kronecker_symbol, sigma, sqrt_rational
from .qseries import QSeries, RatMatrix


def theta_series(prec: int) -> QSeries:
    """The unary theta series 1 + 2*sum(q**(n*n))."""
    coeffs = [0] * (prec + 1)
    coeffs[0] = 1
    n = 1
    while n * n <= prec:
        coeffs[n * n] = 2
        n += 1
    return QSeries(coeffs, prec)


def odd_sigma_series(prec: int) -> QSeries:
    """The weight-2 generator: sum of sigma_1(n) q**n over odd n."""
    coeffs = [0] * (prec + 1)
    for n in range(1, prec + 1, 2):
        coeffs[n] = sigma(1, n)
    return QSeries(coeffs, prec)


def _powers(base: QSeries, exps: list[int]) -> dict[int, QSeries]:
    out = {}
    for e in sorted(set(exps)):
        out[e] = base**e
    return out


def halfint_generators(k: int, prec: int) -> list[QSeries]:
    """Monomial spanning set of the weight (2k-1)/2 space on Gamma0(4)."""
    if k % 2:
        raise UsageError("only even weights occur on this lift chain")
    wnum = 2 * k - 1
    theta = theta_series(prec)
    f2 = odd_sigma_series(prec)
    bmax = wnum // 4
    theta_pows = _powers(theta, [wnum - 4 * b for b in range(bmax + 1)])
    f2_pows = _powers(f2, list(range(bmax + 1)))
    return [theta_pows[wnum - 4 * b] * f2_pows[b] for b in range(bmax + 1)]


class HalfIntForm:
    """A form of half-integral weight (2k-1)/2 on Gamma0(4)."""

    __slots__ = ("k", "series")

    def __init__(self, k: int, series: QSeries):
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "series", series)

    def __setattr__(self, *args):  # pragma: no cover - immutability guard
        raise AttributeError("forms are immutable")

    @property
    def prec(self) -> int:
        return self.series.prec

    @property
    def weight_numerator(self) -> int:
        return 2 * self.k - 1

    def c(self, n: int):
        """Coefficient at q**n."""
        return self.series.coefficient(n)

    def __eq__(self, other):
        if not isinstance(other, HalfIntForm):
            return NotImplemented
        return self.k == other.k and self.series == other.series

    def __hash__(self):
        return hash((self.k, self.series))


class PlusSpaceForm(HalfIntForm):
    """A cuspidal plus-space form: support only on exponents 0, 3 mod 4."""

    __slots__ = ()

    def __init__(self, k: int, series: QSeries):
        super().__init__(k, series)
        bad = [n for n in range(series.prec + 1) if not _plus_supported(n)]
        for n in bad:
            if series.coefficient(n) != 0:
                raise InconsistencyError(
                    f"plus-space support violated at exponent {n}"
                )

    def __repr__(self):
        return f"PlusSpaceForm(k={self.k}, prec={self.prec})"


def _plus_supported(n: int) -> bool:
    # cuspidal plus condition for even k: nothing at n = 0 or n = 1, 2 mod 4
    return n > 0 and n % 4 in (0, 3)


def _primitive_row(row):
    """Scale a rational vector to coprime integers with positive leading entry."""
    den = 1
    for x in row:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in row]
    g = 0
    for x in ints:
        g = math.gcd(g, abs(x))
    if g:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x != 0), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return ints


def plus_space_basis(
    k: int, prec: int, constraint_bound: int | None = None
) -> list[PlusSpaceForm]:
    """Exact basis of the cuspidal plus space of weight (2k-1)/2.

    The kernel of the support constraints (constant term zero, nothing in the
    residue classes 1 and 2 mod 4 up to ``constraint_bound``) is computed
    inside the monomial span; the resulting dimension must match the
    integral-weight cusp dimension, otherwise the constraint bound was too
    small or a convention is wrong, and we refuse loudly.
    """
    if k % 2:
        raise UsageError("odd weights do not occur on this lift chain")
    bound = constraint_bound if constraint_bound is not None else 4 * k
    if bound > prec:
        raise TruncationError(
            f"constraint bound {bound} exceeds series validity {prec}", required=bound
        )
    gens = halfint_generators(k, prec)
    positions = [0] + [n for n in range(1, bound + 1) if n % 4 in (1, 2)]
    constraint = RatMatrix([[g.coefficient(n) for g in gens] for n in positions])
    kernel = constraint.kernel()
    expected = dim_cusp_forms(2 * k - 2)
    if len(kernel) != expected:
        raise DimensionMismatchError(
            f"plus space at k={k}: kernel dimension {len(kernel)}, expected {expected} "
            f"(constraint bound {bound} too small, or conventions wrong)"
        )
    if not kernel:
        return []
    # echelonize over a window of coefficients that does not depend on the
    # requested validity, carrying the monomial coordinates along, so the
    # normalized basis is identical for every truncation
    rows = []
    for v in kernel:
        head = [
            sum(x * g.coefficient(n) for x, g in zip(v, gens))
            for n in range(bound + 1)
        ]
        rows.append(head + list(v))
    red, pivots = RatMatrix(rows).rref()
    if any(pc > bound for pc in pivots[:expected]):
        raise DimensionMismatchError(
            f"plus space at k={k}: echelon pivots escape the constraint window"
        )
    out = []
    for r in range(expected):
        coords = _primitive_row(red.entries[r][bound + 1 :])
        series = QSeries.zero(prec)
        for x, g in zip(coords, gens):
            if x:
                series = series + x * g
        lead = series.coefficient(series.valuation())
        if lead < 0:
            series = -series
        # full-validity support recheck, not just up to the constraint bound
        out.append(PlusSpaceForm(k, series))
    return out


def plus_hecke(g: PlusSpaceForm, p: int) -> PlusSpaceForm:
    """Square-index Hecke operator on the plus space; output valid to prec // p**2.

    On coefficients with plus-supported exponent n: c(n) picks up c(p*p*n), a
    Kronecker-twisted p**(k-2) c(n) term, and p**(2k-3) c(n/p**2); exponents
    outside the support stay zero (at odd p that restriction is automatic, at
    p = 2 it is what keeps the operator on the plus space).  The sign
    convention (symbol evaluated at -n for the even weights used here) is
    pinned by the requirement that eigenvalues match prime eigenvalues on the
    integral-weight side, and is frozen: see the conventions section of the
    README.
    """
    if not is_prime(p):
        raise UsageError(f"{p} is not prime")
    out_prec = g.prec // (p * p)
    if out_prec < 1:
        raise TruncationError(
            f"applying the square-index operator at {p} needs validity >= {p * p}",
            required=p * p,
        )
    k = g.k
    mid = p ** (k - 2)
    big = p ** (2 * k - 3)
    coeffs = [0] * (out_prec + 1)
    for n in range(1, out_prec + 1):
        if not _plus_supported(n):
            continue
        c = g.c(p * p * n) + mid * kronecker_symbol(-n, p) * g.c(n)
        if n % (p * p) == 0:
            c = c + big * g.c(n // (p * p))
        coeffs[n] = c
    return PlusSpaceForm(k, QSeries(coeffs, out_prec))


def _pivot_positions(basis: list[PlusSpaceForm]) -> list[int]:
    pivots = []
    for g in basis:
        val = g.series.valuation()
        if val is None:
            raise UsageError("zero form in plus-space basis")
        pivots.append(val)
    if len(set(pivots)) != len(pivots):
        raise InconsistencyError("plus-space basis is not in staircase form")
    return pivots


def plus_hecke_matrix(basis: list[PlusSpaceForm], p: int) -> RatMatrix:
    """Matrix of the square-index operator at p on a staircase basis, verified."""
    d = len(basis)
    pivots = _pivot_positions(basis)
    cols = []
    for g in basis:
        tg = plus_hecke(g, p)
        if tg.prec < max(pivots):
            raise TruncationError(
                f"basis validity too small to express the image at p={p}",
                required=(p * p) * max(pivots),
            )
        coords = []
        for i, pos in enumerate(pivots):
            lead = basis[i].c(pos)
            coords.append(Fraction(tg.c(pos), 1) / lead)
        recombined = QSeries.zero(tg.prec)
        for x, b in zip(coords, basis):
            recombined = recombined + x * b.series.truncate(tg.prec)
        if recombined != tg.series:
            raise InconsistencyError(
                f"square-index operator at {p} does not stabilize the plus space basis"
            )
        cols.append(coords)
    return RatMatrix([[cols[j][i] for j in range(d)] for i in range(d)])


def plus_eigenforms(k: int, prec: int, constraint_bound: int | None = None):
    """Eigenbasis of the plus space under the index-4 operator.

    Returns a list of ``(form, eigenvalue)`` pairs; for two-dimensional
    spaces the eigenvalues are exact conjugate quadratic irrationals.
    """
    basis = plus_space_basis(k, prec, constraint_bound)
    if not basis:
        return []
    if len(basis) == 1:
        g = basis[0]
        lam = _eigenvalue_on(g, 2)
        return [(g, lam)]
    if len(basis) > 2:
        raise UnsupportedFieldError(
            f"plus space at k={k} has dimension {len(basis)}; fields beyond degree 2 unsupported"
        )
    m = plus_hecke_matrix(basis, 2)
    poly = m.charpoly()
    disc = poly[1] * poly[1] - 4 * poly[0]
    if disc < 0:
        raise UnsupportedFieldError("complex eigenvalues cannot occur here")
    root = sqrt_rational(disc)
    out = []
    for sign in (1, -1):
        lam = (-poly[1] + sign * root) / 2
        if m.entries[0][1] != 0:
            v = (m.entries[0][1], lam - m.entries[0][0])
        elif m.entries[1][0] != 0:
            v = (lam - m.entries[1][1], m.entries[1][0])
        else:
            v = (1, 0) if lam == m.entries[0][0] else (0, 1)
        series = v[0] * basis[0].series + v[1] * basis[1].series
        val = series.valuation()
        lead = series.coefficient(val)
        series = series * (1 / lead if isinstance(lead, QuadExt) else Fraction(1) / lead)
        form = PlusSpaceForm(k, series)
        check = _eigenvalue_on(form, 2)
        if check != lam:
            raise InconsistencyError("plus-space eigenvector failed verification")
        out.append((form, lam))
    return out


def _eigenvalue_on(g: PlusSpaceForm, p: int):
    """Eigenvalue of the square-index operator at p, verified at every coefficient."""
    tg = plus_hecke(g, p)
    val = g.series.valuation()
    if val is None or val > tg.prec:
        raise NotAnEigenformError("no usable probe coefficient", witness=val)
    lam = _divide(tg.c(val), g.c(val))
    for n in range(tg.prec + 1):
        if tg.c(n) != lam * g.c(n):
            raise NotAnEigenformError(
                f"plus-space form is not an eigenform at p={p}", witness=n
            )
    return lam


def _divide(a, b):
    if isinstance(a, QuadExt) or isinstance(b, QuadExt):
        return a / b
    return Fraction(a) / Fraction(b)


def shimura_match(
    g: PlusSpaceForm, candidates: list[EllipticEigenform] | None = None, prec: int = 16
) -> EllipticEigenform:
    """The integral-weight eigenform whose prime-2 eigenvalue matches ``g``.

    ``g`` must be an eigenform of the index-4 operator; the correspondence is
    realized purely through eigenvalue matching, and a missing match is an
    internal error because the two spaces are isomorphic.
    """
    lam = _eigenvalue_on(g, 2)
    if candidates is None:
        candidates = eigenforms(2 * g.k - 2, prec)
    for f in candidates:
        if f.a(2) == lam:
            return f
    raise InconsistencyError(
        f"no weight-{2 * g.k - 2} eigenform with prime-2 eigenvalue {lam}"
    )
