"""Numerics for harmonic function spaces on the unit ball of R^n and the
upper half-space: kernels, mixed norms, coefficient multipliers, distance
functionals, and desk-scale verification suites for the identities and
inequalities that govern them.

Conventions used throughout: the sphere carries the probability measure
(sigma(S^{n-1}) = 1), the ball measure is r^{n-1} dr dsigma, both Poisson
kernels are normalized to unit mass, and explicit bases exist for n in
{2, 3}.
"""

from .quadrature import (BallRule, DecayFit, EvaluationError, RadialRule,
                         SphereRule, ball_rule, ball_rule_from_json,
                         ball_rule_to_json, fit_decay_exponent,
                         integrate_radial, integrate_sphere, radial_rule,
                         sphere_rule, zonal_rule)
from .spharm import (HarmonicBasis, basis_eval, dim_harmonics, gegenbauer,
                     zonal, zonal_matrix)
from .kernels import (BallPoint, HalfSpacePoint, ZonalBallFunction,
                      bergman_coefficients, bergman_q_ball,
                      bergman_q_ball_closed, bergman_q_halfspace,
                      extremal_fmy, extremal_fmy_zonal, poisson_ball,
                      poisson_ball_series, poisson_halfspace)
from .harmonic import (CoefficientField, HarmonicFunction, convolve,
                       convolved_poisson, fractional_derivative,
                       pairing_identity_check)
from .norms import (NormResult, SpaceSpec, embedding_check, halfspace_norm,
                    radial_mean, space_norm)
from .multipliers import (MultiplierCertificate, MultiplierProblem,
                          UnsupportedConfigurationError, apply_multiplier,
                          associated_g, mt_functional, ns_functional,
                          verify_multiplier_theorem, verify_young_proposition)
from .distance import (DistanceEstimate, SublevelSet, decompose,
                       distance_bound_check, s2_integral, t2_integral)
from .reports import CaseResult, VerificationReport, export_report, read_report

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
