"""Free resolutions of monomial ideals.

The full simplex-indexed resolution of a monomial ideal, two pruned
variants obtained by discarding labels with a divisibility witness, the
contracting homotopy that explains the pruning, and exact verification
of everything over the rationals.
"""

from .algebra import (EMPTY_SEQ, IndexSeq, Monomial, ModuleElement,
                      ModuleTerm, Polynomial, VarContext, ZERO_ELEMENT,
                      element_from, lcm_of, one_monomial)
from .division import DivisionResult, divide, is_groebner, normal_form, s_pair
from .errors import (CapacityError, ContextError, DegreeError, DuplicateError,
                     LabelError, NotASubcomplexError, NotGroebnerError,
                     ParseError, SdrInvariantError, ZeroElementError)
from .homotopy import (SDR, SplittingMap, TransferMap, build_sdr, f_map,
                       generic_homotopy, iota_index, phi_map, psi,
                       psi_characterization, psi_element)
from .orders import BaseOrder, SchreyerOrder, TaylorOrder, leading_term
from .reduction import (EliminationReport, build_lyubeznik,
                        chain_criterion_eliminate, chain_elimination_route,
                        drop_witness, extract_subcomplex, lyubeznik_filter,
                        schreyer_syzygy, taylor_syzygy)
from .serialize import (IdealInput, complex_from_dict, complex_to_dict,
                        dumps_complex, loads_complex, parse_ideal)
from .taylor import FreeComplex, build_taylor, delta_set
from .verify import (ExactnessReport, betti_numbers, check_d_squared,
                     check_exactness, lattice_multidegrees, strand,
                     strand_homology)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
