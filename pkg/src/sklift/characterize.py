"""Eigenvalue-level analysis of degree-2 Hecke eigenforms.

Everything here works from a pair of local eigenvalues (prime and prime
square) at one prime.  The local spectral parameters are recovered exactly,
the record is classified as lifted-type versus unimodular-type, the single
prime criteria and the exact eigenvalue identity are evaluated, the full
prime-power eigenvalue sequence is generated from the degree-4 local data,
and the growth bounds and sign behavior of that sequence are scanned.

No floating point: every inequality involving sqrt(p) is settled by sign
splitting and squaring.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InconsistencyError, UsageError
from .numeric import (
    HalfPower,
    QuadExt,
    abs_within,
    cmp_sqrt_multiple,
    format_value,
    fpow,
    is_prime,
    rat,
    sqrt_rational,
    value_sign,
)

SK_TYPE = "saito-kurokawa"
RAMANUJAN_TYPE = "ramanujan"
NEITHER_TYPE = "neither"

COND_PRIME_THRESHOLD = "prime-threshold"
COND_PRIME_SQUARE_THRESHOLD = "prime-square-threshold"
COND_EIGENVALUE_IDENTITY = "eigenvalue-identity"


def _simplify(x):
    if isinstance(x, QuadExt) and x.b == 0:
        return x.a
    return x


@dataclass(frozen=True)
class EigenvalueRecord:
    """Local eigenvalue data (prime and prime-square) of one eigenform."""

    weight: int
    p: int
    mu_p: object
    mu_p2: object

    def __post_init__(self):
        if self.weight % 2 or self.weight < 10:
            raise UsageError(f"weight must be even and >= 10, got {self.weight}")
        if not is_prime(self.p):
            raise UsageError(f"{self.p} is not prime")
        object.__setattr__(self, "mu_p", _simplify(_as_value(self.mu_p)))
        object.__setattr__(self, "mu_p2", _simplify(_as_value(self.mu_p2)))

    def to_json_dict(self) -> dict:
        return {
            "weight": self.weight,
            "p": self.p,
            "mu_p": format_exact(self.mu_p),
            "mu_p2": format_exact(self.mu_p2),
        }


def _as_value(x):
    if isinstance(x, QuadExt):
        return x
    return rat(x)


def format_exact(x) -> str:
    if isinstance(x, QuadExt):
        raise UsageError("record files carry rational values only")
    return str(rat(x))


def parse_exact(text) -> Fraction:
    """Parse a decimal/fraction string; floats are rejected to stay exact."""
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"not an exact rational: {text!r}") from exc
    raise UsageError(f"exact values must be integers or strings, got {type(text).__name__}")


def load_records(path) -> list[EigenvalueRecord]:
    """Read newline-delimited JSON records; errors carry the line number."""
    records = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                data = json.loads(line)
                rec = EigenvalueRecord(
                    weight=int(data["weight"]),
                    p=int(data["p"]),
                    mu_p=parse_exact(data["mu_p"]),
                    mu_p2=parse_exact(data["mu_p2"]),
                )
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise UsageError(f"{path}:{lineno}: bad record ({exc})") from exc
            records.append(rec)
    return records


# ---------------------------------------------------------------------------
# record constructors
# ---------------------------------------------------------------------------

def sk_record(weight: int, p: int, a_p) -> EigenvalueRecord:
    """The eigenvalue record of the lift of an elliptic eigenform.

    The prime eigenvalue is p**(k-1) + p**(k-2) + a(p); eliminating the
    second spectral parameter gives the prime-square value
    a(p)**2 + (p**(k-1)+p**(k-2)) a(p) + p**(2k-2).
    """
    k = weight
    a_p = _as_value(a_p)
    t = p ** (k - 1) + p ** (k - 2)
    return EigenvalueRecord(k, p, t + a_p, a_p * a_p + t * a_p + Fraction(p) ** (2 * k - 2))


def record_from_pair(weight: int, p: int, x, y) -> EigenvalueRecord:
    """Record with prescribed spectral traces x, y (rational or in Q(sqrt p)).

    mu_p = p**(k-3/2) (x + y) and
    mu_p2 = p**(2k-3) (x**2 + x y + y**2 - 2 - 1/p), handled exactly.
    """
    k = weight
    x, y = _as_value(x), _as_value(y)
    sqrt_p = QuadExt(0, 1, p)
    mu_p = fpow(p, k - 2) * (x + y) * sqrt_p
    mu_p2 = fpow(p, 2 * k - 3) * (x * x + x * y + y * y - 2 - Fraction(1, p))
    return EigenvalueRecord(k, p, mu_p, mu_p2)


def sk_trace(p: int) -> QuadExt:
    """The lifted-type spectral trace sqrt(p) + 1/sqrt(p)."""
    return QuadExt(0, Fraction(p + 1, p), p)


# ---------------------------------------------------------------------------
# spectral parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SatakeParams:
    """The unordered spectral trace pair {x, y} of a record, exactly.

    The pair is carried through its elementary symmetric data: the rescaled
    trace ``w`` (so x + y = w*sqrt(p)) and the product ``c = x*y``, together
    with the discriminant of the quadratic they satisfy.  ``x`` and ``y``
    are filled in explicitly whenever they live in a single quadratic field;
    otherwise the classification rests on the exact sign certificates alone.
    """

    weight: int
    p: int
    trace_scaled: object  # w with x + y = w * sqrt(p)
    pair_product: object  # c = x * y
    discriminant: object  # (x - y)**2
    classification: str
    x: object | None
    y: object | None

    def reconstruct(self) -> EigenvalueRecord:
        """Invert the construction: the (mu_p, mu_p2) this data came from."""
        k, p = self.weight, self.p
        w, c = self.trace_scaled, self.pair_product
        u_sq = p * w * w
        v = u_sq - c - 2 - Fraction(1, p)
        mu_p = _simplify(fpow(p, k - 1) * w)
        mu_p2 = _simplify(fpow(p, 2 * k - 3) * v)
        return EigenvalueRecord(k, p, mu_p, mu_p2)

    def to_json_dict(self) -> dict:
        return {
            "classification": self.classification,
            "trace_over_sqrt_p": format_value(self.trace_scaled),
            "pair_product": format_value(self.pair_product),
            "discriminant": format_value(self.discriminant),
            "x": None if self.x is None else format_value(self.x),
            "y": None if self.y is None else format_value(self.y),
        }


def solve_satake(rec: EigenvalueRecord) -> SatakeParams:
    """Recover the spectral trace pair of a record and classify it.

    {x, y} are the roots of Z**2 - u Z + c with u = mu_p / p**(k-3/2) and
    c = u**2 - v - 2 - 1/p, v = mu_p2 / p**(2k-3).  Lifted type means
    sqrt(p) + 1/sqrt(p) is a member of the pair; unimodular type means both
    members are real and in [-2, 2].  Records fitting neither certificate
    cannot come from an eigenform and are tagged accordingly.
    """
    k, p = rec.weight, rec.p
    w = _simplify(rec.mu_p / fpow(p, k - 1))
    v = _simplify(rec.mu_p2 / fpow(p, 2 * k - 3))
    u_sq = _simplify(p * w * w)
    c = _simplify(u_sq - v - 2 - Fraction(1, p))
    disc = _simplify(u_sq - 4 * c)

    # membership of the lifted trace in the pair, evaluated inside Q(sqrt d)
    z0_sq = Fraction((p + 1) ** 2, p)
    q_at_z0 = _simplify(z0_sq - (p + 1) * w + c)
    if value_sign(q_at_z0) == 0:
        classification = SK_TYPE
    else:
        real_pair = value_sign(disc) >= 0
        inside = (
            value_sign(16 - u_sq) >= 0
            and cmp_sqrt_multiple(4 + c, 2 * w, p) >= 0
            and cmp_sqrt_multiple(4 + c, -2 * w, p) >= 0
        )
        classification = RAMANUJAN_TYPE if (real_pair and inside) else NEITHER_TYPE

    x, y = _explicit_pair(p, w, c, disc, classification)
    return SatakeParams(k, p, w, c, disc, classification, x, y)


def _explicit_pair(p, w, c, disc, classification):
    """Exact x, y when they live in one quadratic field; (None, None) otherwise."""
    in_sqrt_p = not isinstance(w, QuadExt) or w.d == p
    if classification == SK_TYPE:
        x = sk_trace(p)
        if in_sqrt_p:
            u = w * QuadExt(0, 1, p)
            return x, _simplify(u - x)
        return x, None
    if isinstance(disc, QuadExt) and disc.b != 0:
        return None, None
    disc = disc.a if isinstance(disc, QuadExt) else disc
    if disc < 0 or not in_sqrt_p:
        return None, None
    u = _simplify((w if isinstance(w, QuadExt) else QuadExt(0, w, p)) * QuadExt(0, 1, p))
    root = sqrt_rational(disc)
    if not isinstance(u, QuadExt):  # trace sum is rational
        if not isinstance(root, QuadExt):
            return _simplify((u + root) / 2), _simplify((u - root) / 2)
        return (
            _simplify(QuadExt(u / 2, root.b / 2, root.d)),
            _simplify(QuadExt(u / 2, -root.b / 2, root.d)),
        )
    # trace sum is a pure rational multiple of sqrt(p)
    if not isinstance(root, QuadExt):
        return (
            _simplify(QuadExt(root / 2, u.b / 2, p)),
            _simplify(QuadExt(-root / 2, u.b / 2, p)),
        )
    if root.d == p:
        return (
            _simplify(QuadExt(0, (u.b + root.b) / 2, p)),
            _simplify(QuadExt(0, (u.b - root.b) / 2, p)),
        )
    return None, None


# ---------------------------------------------------------------------------
# the single-prime criteria
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Theorem41Certificate:
    """Outcome of the single-prime eigenvalue criteria on one record.

    ``verdict`` follows the exact eigenvalue identity; the two threshold
    conditions are evaluated alongside it, and a record where a threshold
    fires without the identity is flagged inconsistent (no eigenform can
    produce such data).
    """

    record: EigenvalueRecord
    verdict: str
    conditions_fired: tuple
    inconsistent: bool
    satake: SatakeParams

    def to_json_dict(self) -> dict:
        return {
            "weight": self.record.weight,
            "p": self.record.p,
            "verdict": self.verdict,
            "conditions_fired": list(self.conditions_fired),
            "inconsistent": self.inconsistent,
            "satake": self.satake.to_json_dict(),
        }


def theorem41(rec: EigenvalueRecord) -> Theorem41Certificate:
    """Evaluate the single-prime criteria exactly.

    Conditions: the prime eigenvalue exceeds 4 p**(k-3/2); the prime-square
    eigenvalue exceeds 10 p**(2k-3); the identity
    mu(p**2) = mu(p)**2 - (p**(k-1)+p**(k-2)) mu(p) + p**(2k-2).
    """
    k, p = rec.weight, rec.p
    fired = []
    cond_ii = cmp_sqrt_multiple(rec.mu_p, 4 * fpow(p, k - 2), p) > 0
    if cond_ii:
        fired.append(COND_PRIME_THRESHOLD)
    cond_iv = value_sign(rec.mu_p2 - 10 * fpow(p, 2 * k - 3)) > 0
    if cond_iv:
        fired.append(COND_PRIME_SQUARE_THRESHOLD)
    t = p ** (k - 1) + p ** (k - 2)
    identity_gap = rec.mu_p * rec.mu_p - t * rec.mu_p + fpow(p, 2 * k - 2) - rec.mu_p2
    cond_vii = value_sign(identity_gap) == 0
    if cond_vii:
        fired.append(COND_EIGENVALUE_IDENTITY)
    satake = solve_satake(rec)
    if cond_vii != (satake.classification == SK_TYPE):
        raise InconsistencyError(
            "eigenvalue identity and spectral membership disagree; "
            "this is an internal error"
        )
    verdict = SK_TYPE if cond_vii else f"not-{SK_TYPE}"
    inconsistent = (cond_ii or cond_iv) and not cond_vii
    return Theorem41Certificate(rec, verdict, tuple(fired), inconsistent, satake)


# ---------------------------------------------------------------------------
# the prime-power eigenvalue sequence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpinEulerData:
    """Coefficients of the degree-4 local factor generating mu(p**r).

    e1 and e2 come straight from the record; e3 and e4 are forced by the
    similitude pairing of spectral parameters at scale p**(2k-3).
    """

    e1: object
    e2: object
    e3: object
    e4: object


def spin_euler_data(rec: EigenvalueRecord) -> SpinEulerData:
    k, p = rec.weight, rec.p
    e1 = rec.mu_p
    e2 = _simplify(rec.mu_p * rec.mu_p - rec.mu_p2 - fpow(p, 2 * k - 4))
    e3 = _simplify(fpow(p, 2 * k - 3) * rec.mu_p)
    e4 = fpow(p, 4 * k - 6)
    return SpinEulerData(e1, e2, e3, e4)


def mu_sequence(rec: EigenvalueRecord, rmax: int) -> list:
    """mu(p**r) for r = 0..rmax from the degree-4 local data, exactly.

    The sequence is the expansion of
    (1 - p**(2k-4) X**2) / (1 - e1 X + e2 X**2 - e3 X**3 + e4 X**4);
    the r = 1, 2 values must reproduce the record itself and are asserted to.
    """
    if rmax < 0:
        raise UsageError("the scan depth must be nonnegative")
    k, p = rec.weight, rec.p
    ed = spin_euler_data(rec)
    numerator = {0: Fraction(1), 2: -fpow(p, 2 * k - 4)}
    seq: list = []
    for r in range(rmax + 1):
        val = numerator.get(r, Fraction(0))
        if r >= 1:
            val = val + ed.e1 * seq[r - 1]
        if r >= 2:
            val = val - ed.e2 * seq[r - 2]
        if r >= 3:
            val = val + ed.e3 * seq[r - 3]
        if r >= 4:
            val = val - ed.e4 * seq[r - 4]
        seq.append(_simplify(val))
    if rmax >= 1 and value_sign(seq[1] - rec.mu_p) != 0:
        raise InconsistencyError("prime-power sequence fails to reproduce mu(p)")
    if rmax >= 2 and value_sign(seq[2] - rec.mu_p2) != 0:
        raise InconsistencyError("prime-power sequence fails to reproduce mu(p**2)")
    return seq


@dataclass(frozen=True)
class GrowthReport:
    """First failures (if any) of the two exact growth bounds up to ``rmax``.

    The sharp bound is (C(r+3,3) + C(r+1,3)/p) p**(r(k-3/2)); the weak bound
    is (3/2) C(r+3,3) p**(r(k-3/2)).  ``None`` means the bound held
    throughout the scan window.
    """

    rmax: int
    first_sharp_violation: int | None
    first_weak_violation: int | None

    @property
    def ok(self) -> bool:
        return self.first_sharp_violation is None and self.first_weak_violation is None

    def to_json_dict(self) -> dict:
        return {
            "scan_depth": self.rmax,
            "first_sharp_violation": self.first_sharp_violation,
            "first_weak_violation": self.first_weak_violation,
        }


def growth_check(rec: EigenvalueRecord, rmax: int) -> GrowthReport:
    """Exact scan of |mu(p**r)| against both growth bounds for r <= rmax."""
    k, p = rec.weight, rec.p
    seq = mu_sequence(rec, rmax)
    first_sharp = first_weak = None
    for r, mu in enumerate(seq):
        h = HalfPower(p, r * (2 * k - 3))
        sharp = Fraction(math.comb(r + 3, 3)) + Fraction(math.comb(r + 1, 3), p)
        weak = Fraction(3, 2) * math.comb(r + 3, 3)
        if first_sharp is None and not abs_within(mu, sharp, h):
            first_sharp = r
        if first_weak is None and not abs_within(mu, weak, h):
            first_weak = r
        if first_sharp is not None and first_weak is not None:
            break
    return GrowthReport(rmax, first_sharp, first_weak)


@dataclass(frozen=True)
class PositivityReport:
    """Signs of mu(p**r) for r <= rmax and the positions of sign changes."""

    rmax: int
    signs: tuple
    all_positive: bool
    sign_changes: tuple

    def to_json_dict(self) -> dict:
        return {
            "scan_depth": self.rmax,
            "all_positive": self.all_positive,
            "sign_changes": list(self.sign_changes),
            "signs": list(self.signs),
        }


def positivity_scan(rec: EigenvalueRecord, rmax: int) -> PositivityReport:
    """Exact signs of the prime-power eigenvalue sequence."""
    seq = mu_sequence(rec, rmax)
    signs = tuple(value_sign(mu) for mu in seq)
    changes = []
    last = 0
    for r, s in enumerate(signs):
        if s == 0:
            continue
        if last and s != last:
            changes.append(r)
        last = s
    return PositivityReport(rmax, signs, all(s > 0 for s in signs), tuple(changes))
