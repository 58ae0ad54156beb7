"""Exact arithmetic foundation.

Rationals are ``fractions.Fraction`` (always in lowest terms, positive
denominator).  On top of that this module provides real quadratic
irrationals ``a + b*sqrt(d)``, exact half-integral prime powers ``p**(e/2)``,
sign/ordering decisions for expressions involving a single square root
(resolved by sign splitting and squaring, never by floating point), and the
elementary number-theoretic functions the rest of the package needs.

All values are immutable and all functions are pure.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def rat(x) -> Fraction:
    """Coerce an int/str/Fraction to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point input is not accepted; pass int, str or Fraction")
    return Fraction(x)


# ---------------------------------------------------------------------------
# elementary number theory
# ---------------------------------------------------------------------------

def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond any input used here."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    x, c = 2, 1
    while True:
        y, d = x, 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        x, c = 2, c + 1


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` as a dict prime -> exponent."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    q = 7
    while q * q <= n and q < 10_000:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return out


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of ``n >= 1``."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def sigma(power: int, n: int) -> int:
    """Divisor sum sigma_power(n)."""
    return sum(d**power for d in divisors(n))


def squarefree_core(n: int) -> tuple[int, int]:
    """Write ``n = s*s*d`` with ``d`` squarefree; returns ``(s, d)``."""
    if n < 1:
        raise ValueError("squarefree_core expects a positive integer")
    s, d = 1, 1
    for p, e in factorize(n).items():
        s *= p ** (e // 2)
        if e % 2:
            d *= p
    return s, d


def bernoulli_number(n: int) -> Fraction:
    """Bernoulli number B_n (B_1 = -1/2 convention), by the defining recurrence."""
    bs = [Fraction(1)]
    for m in range(1, n + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * bs[j]
        bs.append(-acc / (m + 1))
    return bs[n]


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a|n) for n != 0, extending the Jacobi symbol."""
    if n == 0:
        raise ValueError("kronecker symbol is undefined for n = 0")
    result = 1
    if n < 0:
        if a < 0:
            result = -1
        n = -n
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


# ---------------------------------------------------------------------------
# quadratic irrationals
# ---------------------------------------------------------------------------

_SQUAREFREE_SEEN: set[int] = set()


def _check_squarefree(d: int) -> int:
    if d in _SQUAREFREE_SEEN:
        return d
    if d < 2:
        raise ValueError("the adjoined radicand must be a squarefree integer >= 2")
    _, core = squarefree_core(d)
    if core != d:
        raise ValueError(f"{d} is not squarefree")
    _SQUAREFREE_SEEN.add(d)
    return d


def _sgn(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


class QuadExt:
    """An element ``a + b*sqrt(d)`` of a real quadratic field, exact.

    ``d`` is a fixed squarefree integer >= 2.  Elements with ``b == 0`` behave
    like plain rationals and mix freely with ints and Fractions; elements of
    two genuinely different fields refuse to combine.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        a, b = rat(a), rat(b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", _check_squarefree(d) if b != 0 else int(d))

    def __setattr__(self, *args):  # pragma: no cover - immutability guard
        raise AttributeError("QuadExt values are immutable")

    # -- structure -----------------------------------------------------

    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return self.a

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    # -- coercion ------------------------------------------------------

    def _coerce(self, other):
        """Return ``(a, b)`` of ``other`` viewed inside this field, or None."""
        if isinstance(other, QuadExt):
            if other.b == 0:
                return other.a, Fraction(0)
            if self.b == 0 or other.d == self.d:
                return other.a, other.b
            return None
        if isinstance(other, (int, Fraction)):
            return rat(other), Fraction(0)
        return None

    def _field(self, other) -> int:
        if isinstance(other, QuadExt) and other.b != 0:
            return other.d
        return self.d

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        return QuadExt(self.a + co[0], self.b + co[1], self._field(other))

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        return QuadExt(self.a - co[0], self.b - co[1], self._field(other))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        d = self._field(other)
        oa, ob = co
        return QuadExt(self.a * oa + self.b * ob * d, self.a * ob + self.b * oa, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        d = self._field(other)
        oa, ob = co
        nrm = oa * oa - ob * ob * d
        if nrm == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        inv = QuadExt(oa / nrm, -ob / nrm, d)
        return self * inv

    def __rtruediv__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        return QuadExt(co[0], co[1], self.d) / self

    def __pow__(self, e: int):
        if e < 0:
            return 1 / self**(-e)
        out = QuadExt(1, 0, self.d)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- order and equality ----------------------------------------------

    def sign(self) -> int:
        """Exact sign, decided by squaring when the two terms compete."""
        a, b = self.a, self.b
        if b == 0:
            return _sgn(a)
        if a == 0:
            return _sgn(b)
        if (a > 0) == (b > 0):
            return _sgn(a)
        # a and b*sqrt(d) have opposite signs; |a| vs |b|sqrt(d) via squares.
        t = a * a - b * b * self.d
        return _sgn(a) if t > 0 else _sgn(b)  # t == 0 impossible for squarefree d

    def _diff_sign(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        return QuadExt(self.a - co[0], self.b - co[1], self._field(other)).sign()

    def __eq__(self, other):
        s = self._diff_sign(other)
        if s is NotImplemented:
            return NotImplemented
        return s == 0

    def __lt__(self, other):
        s = self._diff_sign(other)
        if s is NotImplemented:
            return NotImplemented
        return s < 0

    def __le__(self, other):
        s = self._diff_sign(other)
        if s is NotImplemented:
            return NotImplemented
        return s <= 0

    def __gt__(self, other):
        s = self._diff_sign(other)
        if s is NotImplemented:
            return NotImplemented
        return s > 0

    def __ge__(self, other):
        s = self._diff_sign(other)
        if s is NotImplemented:
            return NotImplemented
        return s >= 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt({self.d})"
        op = "+" if self.b > 0 else "-"
        return f"{self.a} {op} {abs(self.b)}*sqrt({self.d})"


def sqrt_rational(x: Fraction):
    """Exact square root of a nonnegative rational: Fraction or QuadExt."""
    x = rat(x)
    if x < 0:
        raise ValueError("sqrt of a negative rational is not real")
    if x == 0:
        return Fraction(0)
    s, d = squarefree_core(x.numerator * x.denominator)
    root = Fraction(s, x.denominator)
    if d == 1:
        return root
    return QuadExt(0, root, d)


# ---------------------------------------------------------------------------
# exact comparisons against c * p**(e/2)
# ---------------------------------------------------------------------------

class HalfPower:
    """``p**(e/2)`` exactly, for a prime ``p`` and an integer exponent numerator ``e``."""

    __slots__ = ("p", "e")

    def __init__(self, p: int, e: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "e", int(e))

    def __setattr__(self, *args):  # pragma: no cover - immutability guard
        raise AttributeError("HalfPower values are immutable")

    def as_exact(self):
        """The value as a Fraction (even e) or QuadExt (odd e)."""
        if self.e % 2 == 0:
            return fpow(self.p, self.e // 2)
        return QuadExt(0, fpow(self.p, (self.e - 1) // 2), self.p)

    def __repr__(self):
        return f"{self.p}^({self.e}/2)"


def fpow(base: int, e: int) -> Fraction:
    """Exact integer power with negative exponents allowed."""
    if e >= 0:
        return Fraction(base**e)
    return Fraction(1, base**(-e))


def value_sign(x) -> int:
    """Sign of a Fraction/int/QuadExt."""
    if isinstance(x, QuadExt):
        return x.sign()
    return _sgn(x)


def value_cmp(x, y) -> int:
    """Sign of ``x - y`` for rational/QuadExt operands of a common field."""
    return value_sign(x - y)


def cmp_sqrt_multiple(x, t, p: int) -> int:
    """Sign of ``x - t*sqrt(p)`` with ``t`` of any sign, exactly.

    ``x`` and ``t`` may be rational or live in a common real quadratic field;
    when that field is the one generated by sqrt(p) the difference is formed
    directly, otherwise the comparison is resolved by sign analysis followed
    by squaring.
    """
    def _in_sqrt_p_field(v):
        return not isinstance(v, QuadExt) or v.b == 0 or v.d == p

    if _in_sqrt_p_field(x) and _in_sqrt_p_field(t):
        diff = x - t * QuadExt(0, 1, p)
        return value_sign(diff)
    sx = value_sign(x)
    st = value_sign(t)
    if st == 0:
        return sx
    if sx == 0:
        return -st
    if sx != st:
        return sx
    return value_sign(x * x - t * t * p) * sx


def cmp_halfpower(x, c, h: HalfPower) -> int:
    """Ordering of ``x`` versus ``c * h`` with ``c >= 0``: returns -1, 0 or 1."""
    c = rat(c)
    if c < 0:
        raise ValueError("the half-power scale must be nonnegative")
    if h.e % 2 == 0:
        return value_cmp(x, c * fpow(h.p, h.e // 2))
    return cmp_sqrt_multiple(x, c * fpow(h.p, (h.e - 1) // 2), h.p)


def abs_within(x, c, h: HalfPower) -> bool:
    """Exact test of ``|x| <= c * h``."""
    c = rat(c)
    if h.e % 2 == 0:
        bound = c * fpow(h.p, h.e // 2)
        return value_cmp(x, bound) <= 0 and value_cmp(-x, bound) <= 0
    t = c * fpow(h.p, (h.e - 1) // 2)
    return cmp_sqrt_multiple(x, t, h.p) <= 0 and cmp_sqrt_multiple(-x, t, h.p) <= 0


def format_value(x) -> str:
    """Readable exact rendering of a Fraction or QuadExt."""
    if isinstance(x, QuadExt):
        return repr(x)
    return str(rat(x))
