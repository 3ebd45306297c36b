"""Fermionic field operators and an exact sparse operator algebra.

Basis states are occupation bitmasks; a state is the product of creation
operators over its occupied bits in ascending order applied to the vacuum.
The Jordan-Wigner sign of a field operator counts occupied modes at
strictly lower bit index.

Operators are stored column-sparse.  Exact operators hold Amp values and,
when every entry is a small Gaussian integer, additionally a CSC encoding
consumed by the compiled kernels.  Float-mode operators hold complex values
and compare with tolerance 1e-9.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .amplitude import Amp, as_amp
from .params import DomainError, ResourceLimitError, DENSE_LIMIT

FLOAT_TOL = 1e-9
_ENCODE_MAX = 1 << 30

CREATE = "c"
ANNIHILATE = "a"


def apply_field(op, bit, state):
    """Apply a single field operator to a basis state.

    Returns (sign, new_state) or None when the state is killed.
    """
    mask = 1 << bit
    occupied = state & mask
    if op == CREATE:
        if occupied:
            return None
    elif op == ANNIHILATE:
        if not occupied:
            return None
    else:
        raise DomainError(f"unknown field operator kind {op!r}")
    sign = -1 if (state & (mask - 1)).bit_count() % 2 else 1
    return sign, state ^ mask


def apply_monomial(monomial, state):
    """Apply a product of field operators (leftmost factor applied last)."""
    sign = 1
    for op, bit in reversed(monomial):
        res = apply_field(op, bit, state)
        if res is None:
            return None
        s, state = res
        sign *= s
    return sign, state


def apply_terms(terms, vec, exact=True):
    """Stream a formal operator sum through a sparse vector {state: value}.

    Usable beyond the dense-matrix limit; values are Amps (exact) or
    complex (float mode).
    """
    out = {}
    for coeff, monomial in terms:
        for state, val in vec.items():
            res = apply_monomial(monomial, state)
            if res is None:
                continue
            sign, new_state = res
            contrib = coeff * sign * val
            acc = out.get(new_state)
            out[new_state] = contrib if acc is None else acc + contrib
    if exact:
        return {s: v for s, v in out.items() if not as_amp(v).is_zero()}
    return {s: v for s, v in out.items() if abs(v) > FLOAT_TOL}


class SparseOperator:
    """Exact (or float-mode) sparse linear map on the Fock space."""

    __slots__ = ("dim", "exact", "_cols", "_csc")

    def __init__(self, dim, cols=None, exact=True, csc=None):
        if dim > (1 << DENSE_LIMIT):
            raise ResourceLimitError(
                f"operator dimension {dim} exceeds the dense limit")
        self.dim = dim
        self.exact = exact
        self._cols = cols
        self._csc = csc
        if cols is None and csc is None:
            self._cols = {}

    # -- constructors -------------------------------------------------

    @classmethod
    def identity(cls, dim, exact=True):
        one = Amp(1) if exact else complex(1)
        return cls(dim, {j: {j: one} for j in range(dim)}, exact=exact)

    @classmethod
    def zero(cls, dim, exact=True):
        return cls(dim, {}, exact=exact)

    @classmethod
    def from_terms(cls, dim, terms, exact=True):
        """Matrix of a formal sum of field-operator monomials.

        terms: iterable of (coeff, monomial); monomial is a tuple of
        (kind, bit) pairs in operator order (leftmost applied last).
        """
        terms = [(as_amp(c) if exact else complex(c), tuple(m))
                 for c, m in terms]
        cols = {}
        for col in range(dim):
            acc = {}
            for coeff, monomial in terms:
                res = apply_monomial(monomial, col)
                if res is None:
                    continue
                sign, row = res
                contrib = coeff * sign
                prev = acc.get(row)
                acc[row] = contrib if prev is None else prev + contrib
            if exact:
                acc = {r: v for r, v in acc.items() if not v.is_zero()}
            else:
                acc = {r: v for r, v in acc.items() if abs(v) > FLOAT_TOL}
            if acc:
                cols[col] = acc
        return cls(dim, cols, exact=exact)

    @classmethod
    def from_entries(cls, dim, entries, exact=True):
        """Build from an iterable of (row, col, value)."""
        cols = {}
        for row, col, val in entries:
            val = as_amp(val) if exact else complex(val)
            colmap = cols.setdefault(col, {})
            prev = colmap.get(row)
            colmap[row] = val if prev is None else prev + val
        for col in list(cols):
            colmap = cols[col]
            if exact:
                cols[col] = {r: v for r, v in colmap.items() if not v.is_zero()}
            else:
                cols[col] = {r: v for r, v in colmap.items() if abs(v) > FLOAT_TOL}
            if not cols[col]:
                del cols[col]
        return cls(dim, cols, exact=exact)

    # -- representations ----------------------------------------------

    @property
    def cols(self):
        if self._cols is None:
            indptr, indices, re, im = self._csc
            cols = {}
            for col in range(self.dim):
                s, e = indptr[col], indptr[col + 1]
                if s == e:
                    continue
                cols[col] = {int(indices[t]): Amp(int(re[t]), int(im[t]))
                             for t in range(s, e)}
            self._cols = cols
        return self._cols

    @property
    def csc(self):
        """CSC encoding with int64 Gaussian-integer data, or None."""
        if self._csc is None and self._cols is not None:
            self._csc = self._encode()
        return self._csc

    def _encode(self):
        if not self.exact:
            return None
        indptr = np.zeros(self.dim + 1, dtype=np.int64)
        indices = []
        re = []
        im = []
        for col in range(self.dim):
            colmap = self._cols.get(col)
            if colmap:
                for row in sorted(colmap):
                    v = colmap[row]
                    if not v.is_gaussian_int():
                        return None
                    if abs(v.a) > _ENCODE_MAX or abs(v.b) > _ENCODE_MAX:
                        return None
                    indices.append(row)
                    re.append(v.a)
                    im.append(v.b)
            indptr[col + 1] = len(indices)
        return (indptr, np.array(indices, dtype=np.int64),
                np.array(re, dtype=np.int64), np.array(im, dtype=np.int64))

    def nnz(self):
        if self._cols is not None:
            return sum(len(c) for c in self._cols.values())
        return len(self._csc[1])

    def entries(self):
        """Yield (row, col, value) sorted by (col, row)."""
        for col in sorted(self.cols):
            colmap = self.cols[col]
            for row in sorted(colmap):
                yield row, col, colmap[row]

    def to_float(self):
        if not self.exact:
            return self
        cols = {c: {r: v.to_complex() for r, v in colmap.items()}
                for c, colmap in self.cols.items()}
        return SparseOperator(self.dim, cols, exact=False)

    # -- algebra ------------------------------------------------------

    def _check_dim(self, other):
        if self.dim != other.dim:
            raise DomainError("operator dimension mismatch")

    def __matmul__(self, other):
        self._check_dim(other)
        if self.exact and other.exact:
            a, b = self.csc, other.csc
            if a is not None and b is not None:
                out = kernels.csc_matmul(self.dim, *a, *b)
                return SparseOperator(self.dim, None, exact=True, csc=out)
            return self._matmul_generic(other, exact=True)
        return self.to_float()._matmul_generic(other.to_float(), exact=False)

    def _matmul_generic(self, other, exact):
        cols = {}
        acols = self.cols
        for col, bcol in other.cols.items():
            acc = {}
            for r, v in bcol.items():
                arcol = acols.get(r)
                if not arcol:
                    continue
                for row, w in arcol.items():
                    contrib = w * v
                    prev = acc.get(row)
                    acc[row] = contrib if prev is None else prev + contrib
            if exact:
                acc = {r: v for r, v in acc.items() if not v.is_zero()}
            else:
                acc = {r: v for r, v in acc.items() if abs(v) > FLOAT_TOL}
            if acc:
                cols[col] = acc
        return SparseOperator(self.dim, cols, exact=exact)

    def lincomb(self, ca, other, cb):
        """ca*self + cb*other."""
        self._check_dim(other)
        if self.exact and other.exact:
            ca, cb = as_amp(ca), as_amp(cb)
            a, b = self.csc, other.csc
            if a is not None and b is not None and \
                    ca.is_gaussian_int() and cb.is_gaussian_int():
                out = kernels.csc_lincomb(self.dim, ca.a, ca.b, *a,
                                          cb.a, cb.b, *b)
                return SparseOperator(self.dim, None, exact=True, csc=out)
            return self._lincomb_generic(ca, other, cb, exact=True)
        return self.to_float()._lincomb_generic(
            complex(ca), other.to_float(), complex(cb), exact=False)

    def _lincomb_generic(self, ca, other, cb, exact):
        cols = {}
        for col in set(self.cols) | set(other.cols):
            acc = {}
            for r, v in self.cols.get(col, {}).items():
                acc[r] = ca * v
            for r, v in other.cols.get(col, {}).items():
                contrib = cb * v
                prev = acc.get(r)
                acc[r] = contrib if prev is None else prev + contrib
            if exact:
                acc = {r: v for r, v in acc.items() if not v.is_zero()}
            else:
                acc = {r: v for r, v in acc.items() if abs(v) > FLOAT_TOL}
            if acc:
                cols[col] = acc
        return SparseOperator(self.dim, cols, exact=exact)

    def __add__(self, other):
        return self.lincomb(1, other, 1)

    def __sub__(self, other):
        return self.lincomb(1, other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        if self.exact:
            c = as_amp(c)
            if c.is_zero():
                return SparseOperator.zero(self.dim)
            cols = {col: {r: c * v for r, v in colmap.items()}
                    for col, colmap in self.cols.items()}
            return SparseOperator(self.dim, cols, exact=True)
        c = complex(c)
        cols = {col: {r: c * v for r, v in colmap.items()}
                for col, colmap in self.cols.items()}
        return SparseOperator(self.dim, cols, exact=False)

    def commutator(self, other):
        ab = self @ other
        ba = other @ self
        return ab.lincomb(1, ba, -1)

    def anticommutator(self, other):
        ab = self @ other
        ba = other @ self
        return ab.lincomb(1, ba, 1)

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        if self.exact:
            if self._csc is not None:
                return len(self._csc[1]) == 0
            return not self._cols
        return all(abs(v) <= FLOAT_TOL
                   for colmap in self.cols.values() for v in colmap.values())

    def __eq__(self, other):
        if not isinstance(other, SparseOperator):
            return NotImplemented
        if self.dim != other.dim:
            return False
        if self.exact and other.exact:
            return self.lincomb(1, other, -1).is_zero()
        diff = self.to_float()._lincomb_generic(
            1, other.to_float(), -1, exact=False)
        return diff.is_zero()

    def __hash__(self):
        raise TypeError("SparseOperator is unhashable")

    # -- application --------------------------------------------------

    def matvec(self, vec):
        """Apply to a sparse vector {state: value}."""
        out = {}
        for col, val in vec.items():
            colmap = self.cols.get(col)
            if not colmap:
                continue
            for row, w in colmap.items():
                contrib = w * val
                prev = out.get(row)
                out[row] = contrib if prev is None else prev + contrib
        if self.exact:
            return {r: v for r, v in out.items() if not as_amp(v).is_zero()}
        return {r: v for r, v in out.items() if abs(v) > FLOAT_TOL}

    def __repr__(self):
        mode = "exact" if self.exact else "float"
        return f"<SparseOperator dim={self.dim} nnz={self.nnz()} {mode}>"
