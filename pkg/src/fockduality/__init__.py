"""Exact verification of fermion Fock-space dualities.

The Fock space of k fermion kinds over a d-dimensional single-fermion
space carries two commuting actions: a number-conserving orthogonal or
symplectic algebra transforming the single-fermion states, and a
number-non-conserving algebra built from kind-pair bilinears.  This
package constructs both in exact arithmetic, decomposes the space into
joint highest-weight constituents, and mechanically verifies the duality
pairings (including the O(d) group refinement, the Pin group extension,
and the particle-hole conjugations of atomic and nuclear shells).
"""

__version__ = "1.0.0"

from .amplitude import Amp, as_amp
from .params import (DomainError, ModelParams, ResourceLimitError,
                     ORTHOGONAL, SYMPLECTIC, default_mode_limit)
from .sparse import SparseOperator, apply_terms, CREATE, ANNIHILATE
from .kernels import BACKEND
from .young import (FramePair, enumerate_pairs, weyl_dimension,
                    DUALITIES, SP_SP, O_O, GROUP_O_O, O_PIN)
from .oracle import DualityReport, joint_highest_weight_vectors, verify_duality

__all__ = [
    "Amp", "as_amp", "DomainError", "ModelParams", "ResourceLimitError",
    "ORTHOGONAL", "SYMPLECTIC", "default_mode_limit",
    "SparseOperator", "apply_terms", "CREATE", "ANNIHILATE", "BACKEND",
    "FramePair", "enumerate_pairs", "weyl_dimension",
    "DUALITIES", "SP_SP", "O_O", "GROUP_O_O", "O_PIN",
    "DualityReport", "joint_highest_weight_vectors", "verify_duality",
    "__version__",
]
