"""Lifted point transformations, the reflection, and the Pin generator.

A transformation g of the single-fermion space acts on the Fock space by
transforming every creation operator in the product that builds a basis
state.  The reflection r generates the orthogonal group together with its
Lie algebra.  The distinguished field operator s = a+_1 - a_1 of the
one-state problem lifts to the operator sigma, the image of a reflection
generating Pin(2k) over Spin(2k).

Two single-fermion bases are in play: the delta basis, in which the
bilinear form is the identity and sigma is a product of field-operator
differences, and the form basis with <b|pq> = s_p delta_{p,-q}, reached
through the unitary change t, in which the frame combinatorics applies.
"""

from __future__ import annotations

from .amplitude import Amp, as_amp, i_power, ONE, SQRT_HALF, I_UNIT
from .params import DomainError, ModelParams
from .sparse import SparseOperator, apply_field, CREATE, ANNIHILATE


# -- point transformations and their Fock lift ------------------------

def reflection_matrix(params: ModelParams):
    """The det = -1 orthogonal reflection r on the single-fermion space."""
    mat = {}
    if params.d % 2:
        for p in params.p_labels:
            mat[(p, p)] = Amp(-1) if p == 0 else ONE
    else:
        for p in params.p_labels:
            if p in (1, -1):
                mat[(-p, p)] = ONE
            else:
                mat[(p, p)] = ONE
    return mat


def basis_change_matrix(params: ModelParams):
    """The unitary t carrying the delta basis to the form basis."""
    mat = {}
    for p in params.p_labels:
        if p == 0:
            mat[(0, 0)] = ONE
        elif p > 0:
            mat[(p, p)] = SQRT_HALF
            mat[(-p, p)] = SQRT_HALF * I_UNIT
        else:
            mat[(-p, p)] = SQRT_HALF
            mat[(p, p)] = -(SQRT_HALF * I_UNIT)
    return mat


def conjugate_transpose(mat):
    return {(q, p): as_amp(v).conjugate() for (p, q), v in mat.items()}


def lift_point_transform(params: ModelParams, mat):
    """Matrix of the Fock-space module action of a single-fermion map.

    mat: {(p_out, p_in): amplitude}, applied in parallel to every kind.
    """
    by_col = {}
    for (p_out, p_in), v in mat.items():
        by_col.setdefault(p_in, []).append((p_out, as_amp(v)))
    cols = {}
    for state in range(params.dim):
        bits = [b for b in range(params.n_modes) if (state >> b) & 1]
        vec = {0: ONE}
        for bit in reversed(bits):
            mode = params.mode_of_bit(bit)
            new = {}
            for p_out, amp in by_col.get(mode.p, ()):
                out_bit = params.mode_index(p_out, mode.tau).bit
                for s, val in vec.items():
                    res = apply_field(CREATE, out_bit, s)
                    if res is None:
                        continue
                    sign, s2 = res
                    contrib = amp * sign * val
                    prev = new.get(s2)
                    new[s2] = contrib if prev is None else prev + contrib
            vec = {s: v for s, v in new.items() if not v.is_zero()}
        if vec:
            cols[state] = vec
    return SparseOperator(params.dim, cols)


def reflection_lift(params: ModelParams):
    return lift_point_transform(params, reflection_matrix(params))


# -- Pin group elements -----------------------------------------------

def letter_operator(params: ModelParams, letter):
    """Fock image of a reflection in Pin(2k).

    letter: list of (coeff, (kind, tau)) describing a field operator of
    the one-state problem with square -1; its image is i**Omega times the
    product of its copies over p = Omega down through -Omega.
    """
    op = SparseOperator.identity(params.dim).scale(i_power(params.omega))
    for p in reversed(params.p_labels):
        terms = []
        for coeff, (kind, tau) in letter:
            bit = params.mode_index(p, tau).bit
            terms.append((as_amp(coeff), ((kind, bit),)))
        op = op @ SparseOperator.from_terms(params.dim, terms)
    return op


def pin_word_operator(params: ModelParams, word):
    """Image of a product of reflections, first letter leftmost."""
    op = SparseOperator.identity(params.dim)
    for letter in word:
        op = op @ letter_operator(params, letter)
    return op


def sigma_letter(tau=1):
    """The distinguished reflection s = a+_tau - a_tau."""
    return [(1, (CREATE, tau)), (-1, (ANNIHILATE, tau))]


def sigma_delta(params: ModelParams, tau=1):
    """sigma in the delta basis: i**Omega times the product of s copies."""
    return letter_operator(params, sigma_letter(tau))


def sigma_form_basis(params: ModelParams, tau=1):
    """sigma expressed in the form basis, by conjugation with lift(t)."""
    t = basis_change_matrix(params)
    lift_t = lift_point_transform(params, t)
    lift_t_inv = lift_point_transform(params, conjugate_transpose(t))
    return lift_t_inv @ sigma_delta(params, tau) @ lift_t


def pushthrough_operator(dim, creation_map, vacuum_vec):
    """Operator X defined by X a+_b = coeff * f X and the image of the vacuum.

    creation_map: bit -> (coeff, (kind, bit')) giving the field operator f
    that replaces a+_b when X is pushed through it.  Columns are computed
    by transforming the creation string of each basis state and applying
    it to vacuum_vec, a {state: Amp} dict.
    """
    cols = {}
    for state in range(dim):
        bits = [b for b in range(dim.bit_length() - 1) if (state >> b) & 1]
        coeff = ONE
        vec = dict(vacuum_vec)
        for b in bits:
            c, _ = creation_map(b)
            coeff = coeff * c
        for b in reversed(bits):
            _, (kind, b2) = creation_map(b)
            new = {}
            for s, v in vec.items():
                res = apply_field(kind, b2, s)
                if res is None:
                    continue
                sign, s2 = res
                contrib = v * sign
                prev = new.get(s2)
                new[s2] = contrib if prev is None else prev + contrib
            vec = new
        col = {s: coeff * v for s, v in vec.items() if not v.is_zero()}
        col = {s: v for s, v in col.items() if not v.is_zero()}
        if col:
            cols[state] = col
    return SparseOperator(dim, cols)


def sigma_pushthrough(params: ModelParams, tau=1):
    """Form-basis sigma built directly from its push-through relations."""
    par = Amp((-1) ** params.d)

    def creation_map(bit):
        mode = params.mode_of_bit(bit)
        if mode.tau == tau:
            return par, (ANNIHILATE, params.mode_index(-mode.p, tau).bit)
        return par, (CREATE, bit)

    mono = tuple((CREATE, params.mode_index(p, tau).bit)
                 for p in reversed(params.p_labels))
    state = 0
    sign = 1
    for kind, b in reversed(mono):
        s, state = apply_field(kind, b, state)
        sign *= s
    vacuum = {state: Amp(sign * (-1) ** params.omega)}
    return pushthrough_operator(params.dim, creation_map, vacuum)


# -- identity batteries ------------------------------------------------

def rho_of_minus_one(params: ModelParams):
    """Image of the central -1: exp(i pi sum_p [a+_{p1}, a_{p1}]).

    The exponent is diagonal with integer eigenvalues, so the
    exponential is evaluated exactly on the eigenbasis.
    """
    entries = []
    for state in range(params.dim):
        val = 0
        for bit in params.kind_bits(1):
            val += 2 * ((state >> bit) & 1) - 1
        entries.append((state, state, i_power(2 * val)))
    return SparseOperator.from_entries(params.dim, entries)


def _creation_chain(params: ModelParams, tau):
    """prod_{p=Omega}^{-Omega} a+_{p,tau} applied to the vacuum."""
    state = 0
    sign = 1
    for p in params.p_labels:
        s, state = apply_field(CREATE, params.mode_index(p, tau).bit, state)
        sign *= s
    return state, sign


def sigma_vacuum_checks(params: ModelParams):
    """Vacuum images of sigma in the delta and the form basis."""
    state, sign = _creation_chain(params, 1)
    delta_expect = {state: i_power(params.omega) * sign}
    form_expect = {state: Amp(sign * (-1) ** params.omega)}
    return {
        "sigmaDeltaVacuum":
            sigma_delta(params).cols.get(0, {}) == delta_expect,
        "sigmaFormVacuum":
            sigma_form_basis(params).cols.get(0, {}) == form_expect,
    }


def special_orthogonal_examples(params: ModelParams):
    """Exact form-preserving point transformations with known determinant.

    Returns a list of (matrix, det) pairs: the reflection, a pair sign
    flip (det 1), their product, and for Omega >= 2 a level swap.
    """
    r = reflection_matrix(params)
    out = [(r, -1)]
    if params.omega >= 1:
        flip = {}
        for p in params.p_labels:
            flip[(p, p)] = Amp(-1) if p in (1, -1) else ONE
        out.append((flip, 1))
        prod = {}
        for (a, b), v in r.items():
            w = flip.get((b, b))
            if w is not None:
                prod[(a, b)] = v * w
        out.append((prod, -1))
    if params.omega >= 2:
        swap = {}
        for p in params.p_labels:
            if abs(p) == 1:
                swap[(2 * p, p)] = ONE
            elif abs(p) == 2:
                swap[(p // 2, p)] = ONE
            else:
                swap[(p, p)] = ONE
        out.append((swap, 1))
    return out


def sigma_coset_checks(params: ModelParams):
    """sigma commutes with det 1 lifts and anticommutes with det -1 lifts."""
    sigma = sigma_form_basis(params)
    for mat, det in special_orthogonal_examples(params):
        g = lift_point_transform(params, mat)
        if det == 1:
            if not sigma.commutator(g).is_zero():
                return False
        else:
            if not sigma.anticommutator(g).is_zero():
                return False
    return True


# -- diagram states ---------------------------------------------------

def diagram_levels(params: ModelParams, partition):
    """Assign partition rows to levels p = Omega downward, top row first."""
    levels = []
    labels = list(reversed(params.p_labels))
    if len(partition) > len(labels):
        raise DomainError("diagram has more rows than single-fermion states")
    for i, length in enumerate(partition):
        levels.append((labels[i], int(length)))
    return levels


def lowered_levels(params: ModelParams, partition):
    """Same rows with the bottom one moved a level down."""
    levels = diagram_levels(params, partition)
    if not levels:
        raise DomainError("cannot lower the empty diagram")
    labels = list(reversed(params.p_labels))
    depth = len(levels)
    if depth >= len(labels):
        raise DomainError("no level below the bottom row")
    p, length = levels[-1]
    return levels[:-1] + [(labels[depth], length)]


def phi_state(params: ModelParams, levels):
    """The vector built by creating one fermion per diagram cell.

    levels: list of (p, row_length) in reading order (top row first);
    cell (p, tau) contributes a+ at mode (p, tau), applied so that the
    first cell in reading order acts last.  Returns {state: Amp}.
    """
    cells = [(p, tau) for p, length in levels for tau in range(1, length + 1)]
    state = 0
    sign = 1
    for p, tau in reversed(cells):
        res = apply_field(CREATE, params.mode_index(p, tau).bit, state)
        if res is None:
            raise DomainError("diagram repeats a cell")
        s, state = res
        sign *= s
    return {state: Amp(sign)}
