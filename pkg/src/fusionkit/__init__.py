"""Exact fusion rings, pointed braided data and the N-Ising families."""

__version__ = "0.1.0"

from .roots import RootOfUnity, parse_root
from .groups import FiniteAbelianGroup, TableGroup, order_two_complement
from .ring import (FusionRing, MalformedRingError, ValidationReport, deligne_product,
                   is_isomorphism, load_ring, pointed_ring, save_ring, trivial_ring,
                   validate_ring)
from .dims import Dimensions, DimensionError, ExactDim, cd_set, fp_dims
from .subrings import (GTYReport, Grading, GradingError, Lattice, Subring, adjoint_subring,
                       gty_structure, invertibles, is_grading, stabilizer_decomposition,
                       subring_generated, subring_lattice, universal_grading)
from .isomorphism import canonical_order, ring_isomorphic
from .pointed import (CenterType, CyclicBraiding, CyclicCocycle, QuadraticForm,
                      classify_center, cocycle_defects, enumerate_braidings,
                      enumerate_quadratic_forms, hexagon_defects, is_quadratic, omega_eval,
                      premetric_equivalent, quadratic_from_xi, radical, split_svect_factor)
from .nising import (InducedBraiding, IsingPairing, NIsingSpec, TwistStatus, build_cm,
                     build_ising, build_nising, cad_cpt_check, degeneracy_criterion, induced_center,
                     ising_pairing, self_dual_noninvertibles, squared_braiding_table,
                     twist_obstruction, verify_fact_cm, verify_nofact, verify_prime)
from .structure import (Decomposition, NotDecomposable, cyclic_extension_identify,
                        decompose_gty, exact_factorization_check, fermionic_moore_read_ring)
