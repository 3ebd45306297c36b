"""Particle-hole conjugation operators for atomic and nuclear shells.

A single-l shell of spin-1/2 fermions is the k = 2 (spin) or k = 4 (spin
and isospin) system over the 2l+1 orbital states.  The physical operators
carry the phases a+_{m} = i**(l+|m|+1) a+_{p=m} that turn the Wigner
metric into the standard form, so everything here is expressed through
the form-basis engine.

Constructed operators: the per-kind reflections sigma_tau, the orbital
conjugation C1, the spin flip F and Racah's conjugation C2 = F C1, the
quasispin vector Q with C3 = exp(i pi Q_y) built exactly from commuting
two-mode blocks, the per-j conjugations on the j = l +- 1/2 subshells,
and Bell's conjugation for the k = 4 nucleon shell.  Operators whose
couplings leave the exact ring (l >= 2) fall back to complex floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import sqrt

from .amplitude import Amp, i_power, sqrt_int, ONE
from .params import DomainError, ModelParams, ORTHOGONAL
from .pinops import pushthrough_operator, sigma_pushthrough
from .sparse import (SparseOperator, apply_field, apply_terms, FLOAT_TOL,
                     CREATE, ANNIHILATE)

HALF = Fraction(1, 2)


def shell_model(l, k=2, mode_limit=None):
    """Engine parameters for a single-l shell with k fermion kinds."""
    kwargs = {} if mode_limit is None else {"mode_limit": mode_limit}
    return ModelParams(2 * l + 1, k, ORTHOGONAL, **kwargs)


def spin_of_kind(tau):
    """m_s of kind tau: odd kinds spin up, even kinds spin down."""
    return HALF if tau % 2 else -HALF


def isospin_of_kind(tau):
    """m_t of kind tau in the k = 4 shell: kinds 1, 2 up, kinds 3, 4 down."""
    return HALF if tau <= 2 else -HALF


def kind_of(params, ms, mt=HALF):
    tau = (1 if ms == HALF else 2) + (0 if mt == HALF else 2)
    if tau > params.k:
        raise DomainError("kind labels exceed the number of kinds")
    return tau


def orbital_phase(l, ml):
    """i**(l+|ml|+1) relating physical and form-basis operators."""
    return i_power(l + abs(ml) + 1)


def _sqrt_fraction(fr):
    """sqrt of a non-negative Fraction as an Amp, or None outside the ring."""
    fr = Fraction(fr)
    if fr < 0:
        raise DomainError("negative radicand")
    root = sqrt_int(fr.numerator * fr.denominator)
    if root is None:
        return None
    return root * Amp(1, 0, 0, 0, fr.denominator)


def _as_complex(c):
    return c.to_complex() if isinstance(c, Amp) else complex(c)


def _from_terms(params, terms, exact_coeffs):
    """Build an operator, exact when every coefficient is in the ring."""
    if all(c is not None for c in exact_coeffs):
        return SparseOperator.from_terms(
            params.dim, [(c, m) for c, (_, m) in zip(exact_coeffs, terms)])
    return SparseOperator.from_terms(params.dim, terms, exact=False)


# -- one-body vectors -------------------------------------------------

def number_operator(params):
    terms = [(1, ((CREATE, b), (ANNIHILATE, b)))
             for b in range(params.n_modes)]
    return SparseOperator.from_terms(params.dim, terms)


def orbital_angular_momentum(params, l):
    """(Lz, L+, L-) acting on ml, summed over kinds."""
    lz_terms = []
    for ml in range(-l, l + 1):
        for tau in range(1, params.k + 1):
            b = params.mode_index(ml, tau).bit
            lz_terms.append((ml, ((CREATE, b), (ANNIHILATE, b))))
    lz = SparseOperator.from_terms(params.dim, lz_terms)
    raw = []
    exact = []
    for ml in range(-l, l):
        # physical phases contribute i**(|ml+1|-|ml|) to the p-basis matrix
        # element; the coupling sqrt((l-ml)(l+ml+1)) may leave the ring
        root = sqrt_int((l - ml) * (l + ml + 1))
        phase = orbital_phase(l, ml + 1) * orbital_phase(l, ml).conjugate()
        for tau in range(1, params.k + 1):
            b_to = params.mode_index(ml + 1, tau).bit
            b_from = params.mode_index(ml, tau).bit
            mono = ((CREATE, b_to), (ANNIHILATE, b_from))
            raw.append((sqrt((l - ml) * (l + ml + 1)) * phase.to_complex(),
                        mono))
            exact.append(None if root is None else root * phase)
    lp = _from_terms(params, raw, exact)
    lm = _adjoint_ladder(params, lp)
    return lz, lp, lm


def _adjoint_ladder(params, op):
    """Conjugate transpose of a ladder operator."""
    entries = [(c, r, v.conjugate()) for r, c, v in op.entries()]
    return SparseOperator.from_entries(params.dim, entries, exact=op.exact)


def _kind_pair_vector(params, pairs):
    """(Jz, J+, J-) for a spin-like label living on kind pairs.

    pairs: list of (tau_up, tau_down).
    """
    dim = params.dim
    z_terms = []
    p_terms = []
    for up, down in pairs:
        for p in params.p_labels:
            bu = params.mode_index(p, up).bit
            bd = params.mode_index(p, down).bit
            z_terms.append((Amp(1, 0, 0, 0, 2), ((CREATE, bu), (ANNIHILATE, bu))))
            z_terms.append((Amp(-1, 0, 0, 0, 2), ((CREATE, bd), (ANNIHILATE, bd))))
            p_terms.append((1, ((CREATE, bu), (ANNIHILATE, bd))))
    jz = SparseOperator.from_terms(dim, z_terms)
    jp = SparseOperator.from_terms(dim, p_terms)
    jm = _adjoint_ladder(params, jp)
    return jz, jp, jm


def total_spin(params):
    if params.k == 2:
        pairs = [(1, 2)]
    else:
        pairs = [(1, 2), (3, 4)]
    return _kind_pair_vector(params, pairs)


def total_isospin(params):
    if params.k != 4:
        raise DomainError("isospin requires the k = 4 shell")
    return _kind_pair_vector(params, [(1, 3), (2, 4)])


# -- conjugation operators --------------------------------------------

def spin_flip(params, sectors=((1, 2),)):
    """The spin flip F: fixes the vacuum, a+_up -> a+_down, a+_down -> -a+_up.

    This is the rotation by pi about the spin y axis in the orientation
    that composes with the orbital conjugation to the quasispin rotation.
    """
    swap = {}
    sign = {}
    for up, down in sectors:
        for p in params.p_labels:
            bu = params.mode_index(p, up).bit
            bd = params.mode_index(p, down).bit
            swap[bu], swap[bd] = bd, bu
            sign[bu], sign[bd] = ONE, Amp(-1)

    def creation_map(bit):
        if bit in swap:
            return sign[bit], (CREATE, swap[bit])
        return ONE, (CREATE, bit)

    return pushthrough_operator(params.dim, creation_map, {0: ONE})


def isospin_flip(params):
    return spin_flip(params, sectors=((1, 3), (2, 4)))


def orbital_conjugation(params, sector=(1, 2)):
    """C1 = sigma_down sigma_up for one spin sector."""
    up, down = sector
    return sigma_pushthrough(params, down) @ sigma_pushthrough(params, up)


def racah_conjugation(params, sector=(1, 2)):
    """C2 = F C1: commutes with both L and S."""
    return spin_flip(params, sectors=(sector,)) \
        @ orbital_conjugation(params, sector)


def bell_conjugation(params):
    """Particle-hole conjugation of the k = 4 nucleon shell.

    The product of the spin-sector conjugations of both isospin sectors,
    with an isospin flip appended so the result commutes with the total
    isospin as well.
    """
    if params.k != 4:
        raise DomainError("this conjugation requires the k = 4 shell")
    return isospin_flip(params) \
        @ racah_conjugation(params, (1, 2)) @ racah_conjugation(params, (3, 4))


# -- quasispin --------------------------------------------------------

def quasispin(params, l, sector=(1, 2)):
    """(Qz, Q+, Q-): the pair quasispin of one spin sector.

    In the form basis, the physical phases reduce the pair couplings
    (-1)**(l+ml) to an overall minus sign.
    """
    up, down = sector
    d = 2 * l + 1
    n_terms = []
    for tau in (up, down):
        for p in params.p_labels:
            b = params.mode_index(p, tau).bit
            n_terms.append((1, ((CREATE, b), (ANNIHILATE, b))))
    n_sector = SparseOperator.from_terms(params.dim, n_terms)
    half = Amp(1, 0, 0, 0, 2)
    qz = n_sector.lincomb(half, SparseOperator.identity(params.dim),
                          Amp(-d, 0, 0, 0, 2))
    plus_terms = []
    for ml in range(-l, l + 1):
        bu = params.mode_index(ml, up).bit
        bd = params.mode_index(-ml, down).bit
        plus_terms.append((-1, ((CREATE, bu), (CREATE, bd))))
    qp = SparseOperator.from_terms(params.dim, plus_terms)
    minus_terms = []
    for ml in range(-l, l + 1):
        bu = params.mode_index(ml, up).bit
        bd = params.mode_index(-ml, down).bit
        minus_terms.append((-1, ((ANNIHILATE, bd), (ANNIHILATE, bu))))
    qm = SparseOperator.from_terms(params.dim, minus_terms)
    return qz, qp, qm


def _exp_pair_rotation(params, blocks):
    """exp((pi/2) sum X) for commuting two-mode blocks X = P - P+.

    Each block is (creation monomial, annihilation monomial, sign); on its
    two modes X**3 = -X, so the block exponential is 1 + X**2 + X exactly.
    """
    op = SparseOperator.identity(params.dim)
    for c_mono, a_mono, coeff in blocks:
        x = SparseOperator.from_terms(
            params.dim, [(coeff, c_mono), (-coeff, a_mono)])
        block = SparseOperator.identity(params.dim) + (x @ x) + x
        op = op @ block
    return op


def quasispin_conjugation(params, l, sector=(1, 2)):
    """C3 = exp(i pi Qy), built from its commuting two-mode factors."""
    up, down = sector
    blocks = []
    for ml in range(-l, l + 1):
        bu = params.mode_index(ml, up).bit
        bd = params.mode_index(-ml, down).bit
        blocks.append(((
            (CREATE, bu), (CREATE, bd)),
            ((ANNIHILATE, bd), (ANNIHILATE, bu)),
            Amp(-1)))
    return _exp_pair_rotation(params, blocks)


# -- the j = l +- 1/2 subshells ---------------------------------------

def cg_half(l, ml, ms, j, m):
    """Clebsch-Gordan <l ml; 1/2 ms | j m> as (sign, radicand Fraction)."""
    if ml + ms != m or abs(ml) > l:
        return (0, Fraction(0))
    num = Fraction(2 * l + 1)
    if j == l + HALF:
        if ms == HALF:
            return (1, (l + m + HALF) / num)
        return (1, (l - m + HALF) / num)
    if j == l - HALF:
        if ms == HALF:
            return (-1, (l - m + HALF) / num)
        return (1, (l + m + HALF) / num)
    raise DomainError("j must be l +- 1/2")


def _pair_coefficient(l, j, m, ms1, ms2):
    """Coefficient of a+(ml1, ms1) a+(ml2, ms2) in a+_{jm} a+_{j,-m}.

    Returns (amp_or_none, complex): the product of two couplings and the
    two orbital phases, exact when the root stays in the ring.
    """
    ml1 = int(m - ms1)
    ml2 = int(-m - ms2)
    s1, r1 = cg_half(l, ml1, ms1, j, m)
    s2, r2 = cg_half(l, ml2, ms2, j, -m)
    if s1 == 0 or s2 == 0:
        return Amp(0), 0j
    phase = orbital_phase(l, ml1) * orbital_phase(l, ml2)
    root = _sqrt_fraction(r1 * r2)
    sign = s1 * s2
    approx = sign * sqrt(float(r1 * r2)) * phase.to_complex()
    if root is None:
        return None, approx
    return root * phase * sign, approx


def subshell_pair_blocks(params, l, j):
    """Blocks of C3 restricted to the j subshell, one per m > 0."""
    blocks = []
    m = j
    while m > 0:
        eps = (-1) ** int(j - m)
        c_terms = []
        a_terms = []
        exact_ok = True
        for ms1 in (HALF, -HALF):
            for ms2 in (HALF, -HALF):
                amp, approx = _pair_coefficient(l, j, m, ms1, ms2)
                if amp is not None and amp.is_zero():
                    continue
                ml1 = int(m - ms1)
                ml2 = int(-m - ms2)
                if abs(ml1) > l or abs(ml2) > l:
                    continue
                b1 = params.mode_index(ml1, kind_of(params, ms1)).bit
                b2 = params.mode_index(ml2, kind_of(params, ms2)).bit
                coeff = amp if amp is not None else approx
                if amp is None:
                    exact_ok = False
                c_terms.append((coeff, ((CREATE, b1), (CREATE, b2))))
                # conjugate pair: a_{j,-m} a_{jm} with inverse phases
                if amp is None:
                    a_coeff = approx.conjugate()
                else:
                    a_coeff = amp.conjugate()
                a_terms.append((a_coeff, ((ANNIHILATE, b2), (ANNIHILATE, b1))))
        blocks.append((eps, c_terms, a_terms, exact_ok))
        m -= 1
    return blocks


def subshell_quasispin_y(params, l, j):
    """Qy of the j subshell, normalized so the per-j parts sum to Qy."""
    blocks = subshell_pair_blocks(params, l, j)
    op = SparseOperator.zero(params.dim, exact=False)
    for eps, c_terms, a_terms, _ in blocks:
        scale = -0.5j * eps
        terms = [(_as_complex(c) * scale, m) for c, m in c_terms]
        terms += [(-_as_complex(c) * scale, m) for c, m in a_terms]
        op = op + SparseOperator.from_terms(params.dim, terms, exact=False)
    return op


def subshell_conjugation(params, l, j):
    """Particle-hole conjugation of the j = l +- 1/2 subshell.

    exp(i pi Qy^(j)) with the pair rotation normalized per +-m pair; the
    m blocks commute, and each exponentiates to 1 + X**2 + eps X.
    """
    blocks = subshell_pair_blocks(params, l, j)
    exact = all(b[3] for b in blocks)
    ident = SparseOperator.identity(params.dim, exact=exact)
    op = ident
    for eps, c_terms, a_terms, _ in blocks:
        if exact:
            terms = [(c, m) for c, m in c_terms] + \
                [(-c, m) for c, m in a_terms]
            x = SparseOperator.from_terms(params.dim, terms)
        else:
            terms = [(_as_complex(c), m) for c, m in c_terms]
            terms += [(-_as_complex(c), m) for c, m in a_terms]
            x = SparseOperator.from_terms(params.dim, terms, exact=False)
        block = ident + (x @ x) + x.scale(eps)
        op = op @ block
    return op


def subshell_creation(params, l, j, m):
    """The physical creation operator a+_{jm} (exact when possible)."""
    terms = []
    exact = []
    for ms in (HALF, -HALF):
        ml = int(m - ms)
        if abs(ml) > l:
            continue
        sign, rad = cg_half(l, ml, ms, j, m)
        if sign == 0:
            continue
        b = params.mode_index(ml, kind_of(params, ms)).bit
        phase = orbital_phase(l, ml)
        root = _sqrt_fraction(rad)
        terms.append((sign * sqrt(float(rad)) * phase.to_complex(),
                      ((CREATE, b),)))
        exact.append(None if root is None else root * phase * sign)
    return _from_terms(params, terms, exact)


def subshell_annihilation(params, l, j, m):
    terms = []
    exact = []
    for ms in (HALF, -HALF):
        ml = int(m - ms)
        if abs(ml) > l:
            continue
        sign, rad = cg_half(l, ml, ms, j, m)
        if sign == 0:
            continue
        b = params.mode_index(ml, kind_of(params, ms)).bit
        phase = orbital_phase(l, ml).conjugate()
        root = _sqrt_fraction(rad)
        terms.append((sign * sqrt(float(rad)) * phase.to_complex(),
                      ((ANNIHILATE, b),)))
        exact.append(None if root is None else root * phase * sign)
    return _from_terms(params, terms, exact)


# -- relation batteries -----------------------------------------------

def _field(params, ml, tau, kind):
    b = params.mode_index(ml, tau).bit
    return SparseOperator.from_terms(params.dim, [(1, ((kind, b),))])


def conjugation_checks(l, k=2, mode_limit=None):
    """Named pass/fail results for the particle-hole operator relations.

    Exercises the angular-momentum algebras, the quasispin algebra, the
    push-through relations of F, C1, C2 and the per-j conjugations, the
    identity of Racah's conjugation with the quasispin rotation, and (for
    k = 4) Bell's conjugation.
    """
    params = shell_model(l, k, mode_limit)
    checks = {}

    lz, lp, lm = orbital_angular_momentum(params, l)
    sz, sp, sm = total_spin(params)
    checks["orbitalAlgebra"] = (lz.commutator(lp) == lp
                                and lp.commutator(lm) == lz.scale(2))
    checks["spinAlgebra"] = (sz.commutator(sp) == sp
                             and sp.commutator(sm) == sz.scale(2))
    checks["orbitalSpinCommute"] = all(
        a.commutator(b).is_zero() for a in (lz, lp, lm) for b in (sz, sp, sm))

    qz, qp, qm = quasispin(params, l)
    checks["quasispinAlgebra"] = (qz.commutator(qp) == qp
                                  and qp.commutator(qm) == qz.scale(2))
    checks["quasispinScalar"] = all(
        a.commutator(b).is_zero()
        for a in (qz, qp, qm) for b in (lz, lp, lm, sz, sp, sm))

    sectors = ((1, 2),) if k == 2 else ((1, 2), (3, 4))
    f = spin_flip(params, sectors)
    ok = True
    for up, down in sectors:
        for ml in range(-l, l + 1):
            au = _field(params, ml, up, CREATE)
            ad = _field(params, ml, down, CREATE)
            if f @ au != ad @ f or f @ ad != (au @ f).scale(-1):
                ok = False
    checks["spinFlipRelations"] = ok and (f @ sz) == (sz @ f).scale(-1)
    closed = (1 << params.n_modes) - 1
    checks["spinFlipFixesVacuumAndClosedShell"] = (
        f.cols.get(0, {}) == {0: ONE}
        and f.cols.get(closed, {}) == {closed: ONE})

    c1 = orbital_conjugation(params)
    ok = True
    for ml in range(-l, l + 1):
        for tau in (1, 2):
            a = _field(params, ml, tau, CREATE)
            an = _field(params, -ml, tau, ANNIHILATE)
            if (c1 @ a) != (an @ c1):
                ok = False
    checks["orbitalConjugationRelations"] = ok
    checks["orbitalConjugationScalar"] = all(
        c1.commutator(x).is_zero() for x in (lz, lp, lm))

    c2 = racah_conjugation(params)
    ok = True
    for ml in range(-l, l + 1):
        for ms in (HALF, -HALF):
            tau = kind_of(params, ms)
            tau2 = kind_of(params, -ms)
            ph = orbital_phase(l, ml)
            phm_bar = orbital_phase(l, -ml).conjugate()
            a_phys = _field(params, ml, tau, CREATE).scale(ph)
            an_phys = _field(params, -ml, tau2, ANNIHILATE).scale(phm_bar)
            sign = (-1) ** int(l + ml + HALF + ms)
            if (c2 @ a_phys) != (an_phys @ c2).scale(sign):
                ok = False
    checks["racahConjugationRelations"] = ok
    checks["racahConjugationScalar"] = all(
        c2.commutator(x).is_zero()
        for x in (lz, lp, lm, sz, sp, sm))

    c3 = quasispin_conjugation(params, l)
    checks["racahEqualsQuasispinRotation"] = c3 == c2
    checks["quasispinReversal"] = (
        (c3 @ qz) == (qz @ c3).scale(-1)
        and (c3 @ qp) == (qm @ c3).scale(-1))

    cj = {}
    for j in (l + HALF, l - HALF):
        cj[j] = subshell_conjugation(params, l, j)
        ok = True
        m = j
        while m >= -j:
            adag = subshell_creation(params, l, j, m)
            ann = subshell_annihilation(params, l, j, -m)
            sign = (-1) ** int(j + m)
            if (cj[j] @ adag) != (ann @ cj[j]).scale(sign):
                ok = False
            m -= 1
        checks[f"subshellRelationsJ{2 * j}Half"] = ok
        # vacuum equation: the filled subshell with the extra constant
        # sign prod_{m>0} (-1)**(j-m) = (-1)**((4j^2-1)/8), with the
        # per-pair normalization fixed by summing the per-j quasispins
        # to the total one; individual couplings carry radicals outside
        # the ring, so this one is compared numerically
        vec = {0: complex(1)}
        m = -j
        while m <= j:
            vec = subshell_creation(params, l, j, m).to_float().matvec(vec)
            m += 1
        two_j = int(2 * j)
        sign = (-1) ** ((two_j * two_j - 1) // 8)
        got = {s: _as_complex(v) for s, v in cj[j].cols.get(0, {}).items()}
        checks[f"subshellVacuumJ{2 * j}Half"] = (
            all(abs(got.get(s, 0) - sign * v) < FLOAT_TOL
                for s, v in vec.items())
            and all(s in vec for s in got))
    prod = cj[l + HALF] @ cj[l - HALF]
    checks["subshellProduct"] = prod == c3
    qy = qp.lincomb(Amp(0, -1, 0, 0, 2), qm, Amp(0, 1, 0, 0, 2))
    qy_sum = (subshell_quasispin_y(params, l, l + HALF)
              + subshell_quasispin_y(params, l, l - HALF))
    checks["subshellQuasispinSum"] = qy_sum == qy

    if k == 4:
        b = bell_conjugation(params)
        tz, tp, tm = total_isospin(params)
        checks["bellScalar"] = all(
            b.commutator(x).is_zero()
            for x in (lz, lp, lm, sz, sp, sm, tz, tp, tm))
        checks["bellSquare"] = (b @ b) == SparseOperator.identity(params.dim)
    return checks


def bare_conjugation_checks(two_j):
    """Relation checks for the single-kind conjugation with 2j = two_j."""
    n = two_j + 1
    dim = 1 << n
    c = bare_conjugation(n)
    sq = c @ c
    rel = True
    rel_sq = True
    for bit in range(n):
        a = SparseOperator.from_terms(dim, [(1, ((CREATE, bit),))])
        an = SparseOperator.from_terms(
            dim, [(1, ((ANNIHILATE, n - 1 - bit),))])
        if (c @ a) != (an @ c).scale((-1) ** bit):
            rel = False
        if (sq @ a) != (a @ sq).scale((-1) ** two_j):
            rel_sq = False
    expected = {0: ONE}
    for bit in range(n):
        mono = ((CREATE, bit),)
        expected = apply_terms([(ONE, mono)], expected)
    vac = c.cols.get(0, {})
    return {"conjugationRelations": rel, "squareRelations": rel_sq,
            "vacuumImage": vac == expected}


# -- half-integral conjugation on a bare j shell ----------------------

def bare_conjugation(n_states):
    """Bell's C on a single kind with 2j+1 = n_states modes.

    Modes are bits 0..n_states-1 for m = -j..j ascending.  C obeys
    C a+_m = (-1)**(j+m) a_{-m} C and maps the vacuum to the filled shell
    built by the descending product of creation operators (m = j leftmost,
    so applied last).
    """
    dim = 1 << n_states

    def creation_map(bit):
        # j + m = bit when bits enumerate m ascending from -j
        return Amp((-1) ** bit), (ANNIHILATE, n_states - 1 - bit)

    state = 0
    sign = 1
    for b in range(n_states):
        s, state = apply_field(CREATE, b, state)
        sign *= s
    return pushthrough_operator(dim, creation_map, {state: Amp(sign)})
