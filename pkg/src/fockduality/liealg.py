"""Orthogonal and symplectic Lie algebra representations on the Fock space.

Two commuting families act on the same space of k fermion kinds over a
d-dimensional single-fermion space:

* the number-conserving representation of o(d) or sp(d), with every kind
  transformed in parallel, and
* the number-non-conserving representation of o(2k) or sp(2k), built from
  kind-pair creation and annihilation bilinears.

Both algebras are spanned by matrices ebar(p, q) = e_pq - s_p s_q e_{-q,-p},
where s_p = 1 (orthogonal) or sgn p (symplectic) and labels run over
-Omega..Omega without 0 for even dimension.  The basis is the set with
p + q > 0 (orthogonal) or p + q >= 0 (symplectic), a Borel subalgebra has
p >= q, and raising elements have p > q.
"""

from __future__ import annotations

from fractions import Fraction

from .amplitude import Amp
from .params import DomainError, ModelParams, ORTHOGONAL, SYMPLECTIC
from .sparse import SparseOperator, CREATE, ANNIHILATE


def sign_factor(p, family):
    if family == ORTHOGONAL:
        return 1
    return 1 if p > 0 else -1


# -- label bookkeeping on a defining space of dimension n -------------

def _labels(n):
    om = n // 2
    if n % 2:
        return tuple(range(-om, om + 1))
    return tuple(p for p in range(-om, om + 1) if p != 0)


def basis_labels(n, family):
    """(p, q) pairs spanning the algebra on an n-dimensional space."""
    labels = _labels(n)
    if family == ORTHOGONAL:
        return [(p, q) for p in labels for q in labels if p + q > 0]
    return [(p, q) for p in labels for q in labels if p + q >= 0]

def raising_labels(n, family):
    return [(p, q) for p, q in basis_labels(n, family) if p > q]


def cartan_labels(n):
    return [(p, p) for p in range(1, n // 2 + 1)]


def ebar_matrix(n, family, p, q):
    """ebar(p, q) as a sparse matrix {(row, col): int} on the defining space."""
    labels = _labels(n)
    if p not in labels or q not in labels:
        raise DomainError(f"labels ({p}, {q}) out of range for dimension {n}")
    mat = {(p, q): 1}
    s = sign_factor(p, family) * sign_factor(q, family)
    key = (-q, -p)
    mat[key] = mat.get(key, 0) - s
    return {key: v for key, v in mat.items() if v}


def matrix_commutator(m1, m2):
    """Commutator of two {(row, col): coeff} matrices."""
    out = {}
    for (r1, c1), v1 in m1.items():
        for (r2, c2), v2 in m2.items():
            if c1 == r2:
                key = (r1, c2)
                out[key] = out.get(key, 0) + v1 * v2
            if c2 == r1:
                key = (r2, c1)
                out[key] = out.get(key, 0) - v2 * v1
    return {key: v for key, v in out.items() if v}


def expand_in_ebar(n, family, mat):
    """Coefficients {(p, q): Fraction} of a matrix in the ebar basis.

    Raises DomainError when the matrix is outside the algebra.
    """
    coeffs = {}
    for p, q in basis_labels(n, family):
        v = Fraction(mat.get((p, q), 0))
        if p + q == 0:
            v /= 2
        if v:
            coeffs[(p, q)] = v
    check = {}
    for (p, q), c in coeffs.items():
        for key, v in ebar_matrix(n, family, p, q).items():
            check[key] = check.get(key, 0) + c * v
    check = {key: v for key, v in check.items() if v}
    if check != {key: Fraction(v) for key, v in mat.items() if v}:
        raise DomainError("matrix is not in the Lie algebra")
    return coeffs


# -- number-conserving representation of o(d) / sp(d) -----------------

def con_of_matrix(params: ModelParams, mat):
    """Image of a single-fermion matrix: sum of a+_p <p|x|q> a_q over kinds."""
    terms = []
    for (p, q), v in mat.items():
        for tau in range(1, params.k + 1):
            bp = params.mode_index(p, tau).bit
            bq = params.mode_index(q, tau).bit
            terms.append((v, ((CREATE, bp), (ANNIHILATE, bq))))
    return SparseOperator.from_terms(params.dim, terms)


def con_image(params: ModelParams, p, q):
    """Fock-space image of ebar(p, q) of o(d) or sp(d)."""
    return con_of_matrix(params, ebar_matrix(params.d, params.family, p, q))


def dside_cartan_weight(params: ModelParams, state):
    """Eigenvalue tuple of the o(d)/sp(d) Cartan images, p = 1..Omega."""
    weights = []
    for p in range(1, params.omega + 1):
        w = 0
        for tau in range(1, params.k + 1):
            w += (state >> params.mode_index(p, tau).bit) & 1
            w -= (state >> params.mode_index(-p, tau).bit) & 1
        weights.append(Fraction(w))
    return tuple(weights)


# -- number-non-conserving representation of o(2k) / sp(2k) -----------

def ncon_image(params: ModelParams, t, u):
    """Fock-space image of ebar(t, u) of o(2k) or sp(2k), labels +-1..+-k."""
    labels = _labels(2 * params.k)
    if t not in labels or u not in labels:
        raise DomainError(f"kind-pair labels ({t}, {u}) out of range")
    if t < 0 and u < 0:
        # ebar(t, u) = -S_t S_u ebar(-u, -t); both signs negative, product 1
        return -ncon_image(params, -u, -t)
    terms = []
    if t > 0 and u > 0:
        for p in params.p_labels:
            bt = params.mode_index(p, t).bit
            bu = params.mode_index(p, u).bit
            terms.append((-1, ((CREATE, bt), (ANNIHILATE, bu))))
        op = SparseOperator.from_terms(params.dim, terms)
        if t == u:
            half_d = Amp(params.d, 0, 0, 0, 2)
            return op.lincomb(1, SparseOperator.identity(params.dim), half_d)
        return op
    if t > 0 and u < 0:
        # pair annihilation: sum_p s_p a_{-p,t} a_{p,-u}
        for p in params.p_labels:
            s = sign_factor(p, params.family)
            b1 = params.mode_index(-p, t).bit
            b2 = params.mode_index(p, -u).bit
            terms.append((s, ((ANNIHILATE, b1), (ANNIHILATE, b2))))
    else:
        # pair creation: sum_p s_p a+_{p,-t} a+_{-p,u}
        for p in params.p_labels:
            s = sign_factor(p, params.family)
            b1 = params.mode_index(p, -t).bit
            b2 = params.mode_index(-p, u).bit
            terms.append((s, ((CREATE, b1), (CREATE, b2))))
    return SparseOperator.from_terms(params.dim, terms)


def kside_hom_image(params: ModelParams, t, u):
    """Homomorphic Fock-space image of ebar(t, u) on the kind-pair side.

    The generator presentation ncon_image realizes the algebra only up to
    the automorphism that transposes the block with both labels positive;
    composing with that transposition yields a map obeying
    [image(x), image(y)] = image([x, y]) exactly.
    """
    if t > 0 and u > 0:
        return ncon_image(params, u, t)
    return ncon_image(params, t, u)


def ncon_of_matrix(params: ModelParams, mat):
    """Homomorphic image of a matrix on the 2k-dimensional kind space."""
    coeffs = expand_in_ebar(2 * params.k, params.family, mat)
    op = SparseOperator.zero(params.dim)
    for (t, u), c in coeffs.items():
        op = op.lincomb(1, kside_hom_image(params, t, u), Amp.from_fraction(c))
    return op


def kside_cartan_weight(params: ModelParams, state):
    """Eigenvalue tuple of the o(2k)/sp(2k) Cartan images, tau = 1..k."""
    weights = []
    for tau in range(1, params.k + 1):
        n_tau = 0
        for bit in params.kind_bits(tau):
            n_tau += (state >> bit) & 1
        weights.append(Fraction(params.d, 2) - n_tau)
    return tuple(weights)


def dside_raising_images(params: ModelParams):
    return [con_image(params, p, q)
            for p, q in raising_labels(params.d, params.family)]


def kside_raising_images(params: ModelParams):
    """Raising operators of the kind-pair algebra.

    These are the homomorphic images of the basis elements with t > u:
    kind movers toward lower kind labels plus the pair annihilators.
    """
    return [kside_hom_image(params, t, u)
            for t, u in raising_labels(2 * params.k, params.family)]


def dside_basis_images(params: ModelParams):
    return [con_image(params, p, q)
            for p, q in basis_labels(params.d, params.family)]


def kside_basis_images(params: ModelParams):
    return [ncon_image(params, t, u)
            for t, u in basis_labels(2 * params.k, params.family)]
