"""Weight-k, index-1 cuspidal Jacobi forms as discriminant-indexed tables.

For index 1 a coefficient c(n, r) depends only on 4n - r*r (the parity of r
is forced by the discriminant mod 4), so the whole form is stored as a map
from positive discriminants to exact values.  No two-variable expansion is
ever materialized; the table is exactly what the degree-2 lift consumes.
"""

from __future__ import annotations

from .errors import TruncationError, UsageError
from .kohnen import PlusSpaceForm, _plus_supported
from .qseries import QSeries


class JacobiForm:
    """An index-1 cuspidal Jacobi form, keyed by discriminant 4n - r*r."""

    __slots__ = ("weight", "max_disc", "by_disc")

    index = 1

    def __init__(self, weight: int, by_disc: dict[int, object], max_disc: int):
        for disc in by_disc:
            if disc <= 0 or disc % 4 not in (0, 3):
                raise UsageError(f"impossible index-1 discriminant {disc}")
            if disc > max_disc:
                raise UsageError(f"table entry {disc} beyond claimed range {max_disc}")
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "max_disc", max_disc)
        object.__setattr__(
            self, "by_disc", {d: v for d, v in by_disc.items() if v != 0}
        )

    def __setattr__(self, *args):  # pragma: no cover - immutability guard
        raise AttributeError("JacobiForm values are immutable")

    def coeff(self, n: int, r: int):
        """c(n, r), zero outside the cuspidal support 4n - r*r > 0."""
        disc = 4 * n - r * r
        if disc <= 0:
            return 0
        if disc > self.max_disc:
            raise TruncationError(
                f"coefficient at discriminant {disc} beyond tabulated range "
                f"{self.max_disc}",
                required=disc,
            )
        return self.by_disc.get(disc, 0)

    def coeff_disc(self, disc: int):
        """Coefficient read directly off the discriminant key."""
        if disc <= 0:
            return 0
        if disc > self.max_disc:
            raise TruncationError(
                f"discriminant {disc} beyond tabulated range {self.max_disc}",
                required=disc,
            )
        return self.by_disc.get(disc, 0)

    def __eq__(self, other):
        if not isinstance(other, JacobiForm):
            return NotImplemented
        return (
            self.weight == other.weight
            and self.max_disc == other.max_disc
            and self.by_disc == other.by_disc
        )

    def __hash__(self):
        return hash((self.weight, self.max_disc, tuple(sorted(self.by_disc.items()))))

    def __repr__(self):
        return (
            f"JacobiForm(weight={self.weight}, index=1, "
            f"discs<={self.max_disc}, nonzero={len(self.by_disc)})"
        )


def ez_lift(g: PlusSpaceForm) -> JacobiForm:
    """Index-1 Jacobi form with c(n, r) equal to the plus-space coefficient at 4n - r*r.

    The map is a plain re-indexing of coefficient data; it is a bijection on
    everything the rest of the chain reads.
    """
    by_disc = {}
    for disc in range(1, g.prec + 1):
        if _plus_supported(disc):
            v = g.c(disc)
            if v != 0:
                by_disc[disc] = v
    return JacobiForm(g.k, by_disc, g.prec)


def plus_form_from_jacobi(phi: JacobiForm) -> PlusSpaceForm:
    """Read the discriminant-indexed data back as a plus-space expansion."""
    coeffs = [0] * (phi.max_disc + 1)
    for disc, v in phi.by_disc.items():
        coeffs[disc] = v
    return PlusSpaceForm(phi.weight, QSeries(coeffs, phi.max_disc))
