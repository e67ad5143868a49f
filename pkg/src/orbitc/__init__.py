"""Executable coadjoint-orbit calculus for the unitary-Heisenberg group.

Subpackages: exact weight combinatorics (``weights``), skew-Hermitian
matrix primitives with a self-contained Jacobi eigensolver
(``matrixcore``), orbit parameters and the coadjoint action
(``coadjoint``), exact inverse spectral constructions
(``inverse_spectral``), the orbit-space convergence calculus
(``orbit_topology``), scalar Fock-space matrix coefficients
(``fock_coeffs``), and the invariant sphere measure (``sphere_measure``).
"""

from .coadjoint import (CharacterOrbit, Functional, GenericOrbit,
                        GroupElement, IntermediateOrbit, base_functional,
                        coadjoint_act, functional_distance,
                        orbit_point_generic, orbit_point_intermediate,
                        param_from_json, param_to_json, stabilizer_member,
                        v_r)
from .fock_coeffs import (bessel_sphere_target, diag_coeff, dim_homog,
                          fock_inner_numeric, hermite_fn, limit_gap,
                          sigma_action, sub_laplacian_diag, w_action_matrix,
                          zeta)
from .inverse_spectral import (ArrowheadSolution, InterlacingError,
                               RankOneSolution, build_arrowhead,
                               build_rank_one, sum_identity_sides,
                               update_interlacing_verdict)
from .matrixcore import (arrowhead, cross, eig_hermitian, haar_unitary,
                         j_diag, rank_one_update, spectrum_skew)
from .orbit_topology import (DescriptorError, LimitReport,
                             SequenceDescriptor, WitnessError,
                             center_invariant, enumerate_limit_orbits,
                             homeomorphism_check, is_limit_orbit,
                             rep_side_limit, spectral_invariant_sublaplacian,
                             verify_convergence, witness_points)
from .sphere_measure import (SpherePoint, ball_integral_check,
                             haar_unitary_integral, jacobian_analytic,
                             jacobian_numeric, psi, sphere_integral)
from .weights import (DominantWeight, WeightVector, dominant_tuples,
                      gt_patterns, gt_weights, interlaces_down, pieri_down,
                      pieri_up, precsim, schur_eval, weyl_dim)

__version__ = '0.1.0'
