"""Exact computation of the degrees of the divisors of special cubic
fourfolds in the space of all cubics.

Two independent engines produce the numbers:

* a modular one: the vector-valued Eisenstein series of weight 5 for the dual
  Weil representation of an order-3 discriminant form, Rankin-Cohen brackets
  giving a weight-11 basis, a two-constraint solve, and the contraction to
  the scalar degree series with constant term -2;
* an intersection-theoretic one: Chern/Segre classes of the bundles whose
  projectivizations parametrize singular cubics (over P^5) and cubics
  containing a plane (over Gr(3,6)).

The first degrees are deg(C_6) = 192, deg(C_8) = 3402, deg(C_12) = 196272.
"""

from .exactmath import (
    Cyclotomic,
    IntegralityError,
    Rational,
    bernoulli_number,
    bernoulli_poly,
    chi_minus3,
    gauss_sum,
    jacobi_symbol,
    p_valuation,
)
from .qseries import (
    InconsistentSystemError,
    QSeries,
    SingularSystemError,
    solve_linear_combination,
)
from .fqm import (
    DiscriminantForm,
    EvenLattice,
    Mp2Element,
    WeilRep,
    discriminant_form,
    gauss_milgram_check,
    heegner_index,
    w_prime_form,
)
from .vvmf import (
    HeegnerSeries,
    VectorForm,
    assemble_theta,
    basis_weight11,
    dim_formula,
    fit_alpha_beta,
    is_cuspidal,
    numeric_modularity_check,
    rankin_cohen,
    solve_psi,
)
from .eisenstein import (
    alpha_series,
    beta_series,
    eisenstein_chi,
    eisenstein_level1,
    theta_series_rank10,
    vv_eisenstein,
)
from . import schubert

__version__ = "0.1.0"


def theta_degrees(prec: int = 30) -> HeegnerSeries:
    """The full modular pipeline at the given precision (integer q-steps)."""
    return assemble_theta(solve_psi(prec))
