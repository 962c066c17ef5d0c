"""Access structures from uniform polymatroids: compatibility, minimal
authorized vectors, hierarchy classification, linear representations and
ideal secret sharing over GF(p)."""

from .access import AccessStructure, IncompatibleError, build_gamma, is_authorized, is_connected
from .compat import DeltaFamily, is_compatible
from .core import UniportError
from .enumeration import build_table, conjecture_scan, enumerate_deltas, enumerate_signatures
from .hierarchy import classify, compute_relation, hierarchy, max_chain_length
from .polymatroid import UniformPolymatroid, enumerate_bases
from .represent import BetaNotFound, build_eta2_explicit, build_representation, find_beta, verify_port
from .scheme import assign_vectors, build_scheme, distribute, privacy_check, reconstruct, verify_scheme

__version__ = "0.1.0"
