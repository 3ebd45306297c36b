"""Joint highest-weight oracle and duality verification.

The Fock space is partitioned into joint weight blocks of the two Cartan
actions.  Within each block, the joint highest-weight vectors are the
nullspace of the stacked raising operators of both algebras, computed with
exact rational elimination.  A duality decomposition is confirmed by
matching the resulting weight multiset against the frame enumeration and
by the dimension bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import liealg, pinops, young
from .amplitude import Amp
from .params import ModelParams, ORTHOGONAL, SYMPLECTIC
from .sparse import SparseOperator


def rational_nullspace(rows, ncols):
    """Nullspace basis of a rational matrix given as sparse rows.

    rows: iterable of {col: Fraction}; returns a list of dense Fraction
    lists of length ncols.
    """
    mat = [dict(r) for r in rows if r]
    pivots = {}
    for row in mat:
        while row:
            col = min(row)
            if col in pivots:
                piv = pivots[col]
                factor = row[col]
                for c, v in piv.items():
                    acc = row.get(c, Fraction(0)) - factor * v
                    if acc:
                        row[c] = acc
                    else:
                        row.pop(c, None)
            else:
                inv = 1 / row[col]
                pivots[col] = {c: v * inv for c, v in row.items()}
                break
    # back substitution to reduced form
    for col in sorted(pivots, reverse=True):
        row = pivots[col]
        for c2 in [c for c in row if c != col and c in pivots]:
            factor = row[c2]
            for c, v in pivots[c2].items():
                acc = row.get(c, Fraction(0)) - factor * v
                if acc:
                    row[c] = acc
                else:
                    row.pop(c, None)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for col, row in pivots.items():
            vec[col] = -row.get(f, Fraction(0))
        basis.append(vec)
    return basis


def weight_blocks(params: ModelParams):
    """Group the basis states by their joint Cartan weights."""
    blocks = {}
    for state in range(params.dim):
        key = (liealg.dside_cartan_weight(params, state),
               liealg.kside_cartan_weight(params, state))
        blocks.setdefault(key, []).append(state)
    return blocks


def _real_fraction(amp):
    (re, im), (r2, i2) = amp.rational_parts()
    if im or r2 or i2:
        raise ValueError("raising operator entry is not rational")
    return re


def joint_highest_weight_vectors(params: ModelParams):
    """All joint highest-weight vectors, keyed by (d-weight, k-weight).

    Each vector is a {state: Fraction} dict annihilated by every raising
    operator of both algebras and of the stated joint weight.
    """
    raising = (liealg.dside_raising_images(params)
               + liealg.kside_raising_images(params))
    raising_cols = [op.cols for op in raising]
    result = {}
    for key, states in weight_blocks(params).items():
        index = {s: i for i, s in enumerate(states)}
        rows = {}
        for oi, cols in enumerate(raising_cols):
            for s in states:
                col = cols.get(s)
                if not col:
                    continue
                for target, amp in col.items():
                    rows.setdefault((oi, target), {})[index[s]] = \
                        _real_fraction(amp)
        basis = rational_nullspace(rows.values(), len(states))
        if basis:
            result[key] = [
                {states[i]: v for i, v in enumerate(vec) if v}
                for vec in basis]
    return result


@dataclass
class DualityReport:
    duality: str
    d: int
    k: int
    pairs: list
    dimension_sum: int
    checks: dict = field(default_factory=dict)

    @property
    def all_pass(self):
        return all(self.checks.values())


def family_of(duality):
    return SYMPLECTIC if duality == young.SP_SP else ORTHOGONAL


def expected_joint_multiset(pairs):
    counts = {}
    for p in pairs:
        for jw in p.joint_weights():
            counts[jw] = counts.get(jw, 0) + 1
    return counts


def observed_joint_multiset(hw_vectors):
    return {key: len(vecs) for key, vecs in hw_vectors.items()}


def check_commutant(params: ModelParams):
    """Every d-side basis image commutes with every k-side basis image."""
    dside = liealg.dside_basis_images(params)
    kside = liealg.kside_basis_images(params)
    return all(a.commutator(b).is_zero() for a in dside for b in kside)


def check_closure(params: ModelParams):
    """Both maps are Lie algebra homomorphisms on their basis elements."""
    n, fam = params.d, params.family
    dbasis = liealg.basis_labels(n, fam)
    dims = {pq: liealg.con_image(params, *pq) for pq in dbasis}
    for pq1 in dbasis:
        for pq2 in dbasis:
            m = liealg.matrix_commutator(
                liealg.ebar_matrix(n, fam, *pq1),
                liealg.ebar_matrix(n, fam, *pq2))
            if dims[pq1].commutator(dims[pq2]) != liealg.con_of_matrix(params, m):
                return False
    n2 = 2 * params.k
    kbasis = liealg.basis_labels(n2, fam)
    kims = {tu: liealg.kside_hom_image(params, *tu) for tu in kbasis}
    for tu1 in kbasis:
        for tu2 in kbasis:
            m = liealg.matrix_commutator(
                liealg.ebar_matrix(n2, fam, *tu1),
                liealg.ebar_matrix(n2, fam, *tu2))
            if kims[tu1].commutator(kims[tu2]) != liealg.ncon_of_matrix(params, m):
                return False
    return True


def _amp_vector(vec):
    return {s: Amp.from_fraction(v) for s, v in vec.items()}


def _is_multiple(got, target):
    """Return the scalar c with got == c * target, or None."""
    if not got or not target:
        return None
    if set(got) != set(target):
        return None
    s0 = next(iter(target))
    ratio = got[s0] / target[s0]
    for s, v in target.items():
        if got[s] != ratio * v:
            return None
    return ratio


def check_group_module_action(duality, params: ModelParams, pairs, hw):
    """Eigenvalue and swap behavior of r (O(d) case) or sigma (Pin case).

    A highest-weight vector is fixed by the group generator when the
    group diagram is shallower than half the row bound, negated when it
    is deeper, and the two split constituents are exchanged (with scalars
    compounding to the generator's square) when the depth is critical.
    """
    if duality == young.GROUP_O_O:
        op = pinops.reflection_lift(params)
        square = Amp(1)
    else:
        op = pinops.sigma_form_basis(params)
        square = Amp(1) if params.d % 2 == 0 else Amp(-1)
    for pair in pairs:
        if duality == young.GROUP_O_O:
            depth = len(pair.d_label)
            bound = params.d
            split = pair.d_weights if len(pair.d_weights) == 2 else None
            joints = pair.joint_weights()
        else:
            depth = sum(1 for row in pair.k_label if row > 0)
            bound = 2 * params.k
            split = pair.k_weights if len(pair.k_weights) == 2 else None
            joints = pair.joint_weights()
        if split is None:
            expect = Amp(1) if 2 * depth < bound else Amp(-1)
            for jw in joints:
                for vec in hw.get(jw, ()):
                    v = _amp_vector(vec)
                    if _is_multiple(op.matvec(v), v) != expect:
                        return False
        else:
            jw_plus, jw_minus = joints[0], joints[1]
            vp = hw.get(jw_plus, ())
            vm = hw.get(jw_minus, ())
            if len(vp) != 1 or len(vm) != 1:
                return False
            v1 = _amp_vector(vp[0])
            v2 = _amp_vector(vm[0])
            c1 = _is_multiple(op.matvec(v1), v2)
            c2 = _is_multiple(op.matvec(v2), v1)
            if c1 is None or c2 is None or c1 * c2 != square:
                return False
    return True


def check_sigma_sign_formula(params: ModelParams):
    """Action of sigma on diagram states: sign and associated diagram."""
    sigma = pinops.sigma_form_basis(params)
    d = params.d
    for lam in young._lambda_partitions(d, params.k):
        if not young.column_rule_holds(lam, d):
            continue
        bar = young.associate(lam, d)
        sign = (-1) ** (sum(lam) * d + len(lam) * (d - len(lam))
                        + params.omega)
        phi = pinops.phi_state(params, pinops.diagram_levels(params, lam))
        phibar = pinops.phi_state(params, pinops.diagram_levels(params, bar))
        expect = {s: v * sign for s, v in phibar.items()}
        if sigma.matvec(phi) != expect:
            return False
    return True


def verify_duality(duality, d, k, with_commutant=True, with_closure=False,
                   mode_limit=None):
    """Verify one duality decomposition mechanically.

    Checks: the two algebra actions commute, the joint highest-weight
    multiset matches the frame enumeration with multiplicity one per
    irreducible constituent, and the Weyl dimensions tile the Fock space.
    """
    kwargs = {} if mode_limit is None else {"mode_limit": mode_limit}
    params = ModelParams(d, k, family_of(duality), **kwargs)
    pairs = young.enumerate_pairs(duality, d, k)
    report = DualityReport(duality, d, k, pairs, young.dimension_sum(pairs))
    report.checks["dimensionSum"] = \
        report.dimension_sum == 2 ** (d * k)
    if with_commutant:
        report.checks["commutant"] = check_commutant(params)
    if with_closure:
        report.checks["closure"] = check_closure(params)
    hw = joint_highest_weight_vectors(params)
    report.checks["jointHighestWeights"] = \
        observed_joint_multiset(hw) == expected_joint_multiset(pairs)
    if duality in (young.GROUP_O_O, young.O_PIN):
        report.checks["groupModuleAction"] = \
            check_group_module_action(duality, params, pairs, hw)
    if duality == young.O_PIN:
        report.checks["sigmaSignFormula"] = check_sigma_sign_formula(params)
        sigma = pinops.sigma_form_basis(params)
        sq = Amp(1) if d % 2 == 0 else Amp(-1)
        ident = SparseOperator.identity(params.dim)
        report.checks["sigmaSquare"] = (sigma @ sigma) == ident.scale(sq)
    return report
