"""Model parameters and the fixed mode layout of the Fock basis.

Single-fermion states are labelled p = -Omega..Omega (0 omitted for even d),
fermion kinds tau = 1..k.  Bit layout is kind-major: bit = (tau-1)*d + rank(p)
with rank enumerating p in ascending order.  Basis states are occupation
bitmasks; the vacuum is 0.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

ORTHOGONAL = "orthogonal"
SYMPLECTIC = "symplectic"

DENSE_LIMIT = 16  # matrices materialized only up to 2**16 columns


class DomainError(ValueError):
    """Invalid labels or parameters."""


class ResourceLimitError(RuntimeError):
    """Requested computation exceeds the configured mode limit."""


def default_mode_limit():
    return int(os.environ.get("FOCK_MODE_LIMIT", "20"))


@dataclass(frozen=True)
class ModeIndex:
    p: int
    tau: int
    bit: int


@dataclass(frozen=True)
class ModelParams:
    d: int
    k: int
    family: str = ORTHOGONAL
    mode_limit: int = field(default_factory=default_mode_limit)

    def __post_init__(self):
        if self.d < 1 or self.k < 1:
            raise DomainError("d and k must be positive")
        if self.family not in (ORTHOGONAL, SYMPLECTIC):
            raise DomainError(f"unknown family {self.family!r}")
        if self.family == SYMPLECTIC and self.d % 2:
            raise DomainError("symplectic family requires even d")
        if self.d * self.k > self.mode_limit:
            raise ResourceLimitError(
                f"d*k = {self.d * self.k} exceeds mode limit {self.mode_limit}")

    @property
    def omega(self):
        return self.d // 2

    @property
    def n_modes(self):
        return self.d * self.k

    @property
    def dim(self):
        return 1 << self.n_modes

    @property
    def p_labels(self):
        """All p labels in ascending order."""
        om = self.omega
        if self.d % 2:
            return tuple(range(-om, om + 1))
        return tuple(p for p in range(-om, om + 1) if p != 0)

    def p_rank(self, p):
        om = self.omega
        if self.d % 2:
            if not -om <= p <= om:
                raise DomainError(f"orbital label {p} out of range")
            return p + om
        if p == 0 or not -om <= p <= om:
            raise DomainError(f"orbital label {p} out of range")
        return p + om if p < 0 else p + om - 1

    def mode_index(self, p, tau):
        """Bijective (p, tau) -> bit mapping."""
        if not 1 <= tau <= self.k:
            raise DomainError(f"kind label {tau} out of range")
        return ModeIndex(p, tau, (tau - 1) * self.d + self.p_rank(p))

    def mode_of_bit(self, bit):
        if not 0 <= bit < self.n_modes:
            raise DomainError(f"bit {bit} out of range")
        tau = bit // self.d + 1
        rank = bit % self.d
        return ModeIndex(self.p_labels[rank], tau, bit)

    def kind_bits(self, tau):
        """Bits belonging to kind tau, ascending."""
        base = (tau - 1) * self.d
        return range(base, base + self.d)

    def require_dense(self):
        if self.n_modes > DENSE_LIMIT:
            raise ResourceLimitError(
                f"d*k = {self.n_modes} > {DENSE_LIMIT}: only streaming "
                "operator application is available at this size")
