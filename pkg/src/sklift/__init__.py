"""Exact-arithmetic Saito-Kurokawa lifts and their eigenvalue characterizations."""

__version__ = "0.1.0"

from .numeric import HalfPower, QuadExt, Rational, cmp_halfpower, kronecker_symbol
from .qseries import QSeries, RatMatrix
from .elliptic import (
    EllipticEigenform,
    EllipticForm,
    cusp_basis,
    delta,
    dim_cusp_forms,
    eigenforms,
    eisenstein,
    hecke_Tp,
)
from .kohnen import (
    PlusSpaceForm,
    plus_eigenforms,
    plus_hecke,
    plus_space_basis,
    shimura_match,
    theta_series,
)
from .jacobi import JacobiForm, ez_lift
from .siegel import (
    HeckeDoubleCoset,
    SiegelFourierTable,
    SiegelIndex,
    check_maass_p_space,
    check_maass_space,
    coset_decomposition_Tp,
    hecke_eigenvalue,
    hecke_operator,
    maass_lift,
    reduce_index,
)
from .characterize import (
    EigenvalueRecord,
    SatakeParams,
    SpinEulerData,
    growth_check,
    mu_sequence,
    positivity_scan,
    record_from_pair,
    sk_record,
    solve_satake,
    theorem41,
)

__all__ = [name for name in dir() if not name.startswith("_")]
