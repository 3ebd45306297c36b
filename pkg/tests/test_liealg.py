"""Number-conserving and number-non-conserving algebra actions."""

import pytest

from fockduality import liealg
from fockduality.params import ModelParams, ORTHOGONAL, SYMPLECTIC


GRID = [(2, 1, ORTHOGONAL), (3, 1, ORTHOGONAL), (2, 2, ORTHOGONAL),
        (3, 2, ORTHOGONAL), (4, 1, ORTHOGONAL),
        (2, 1, SYMPLECTIC), (2, 2, SYMPLECTIC), (4, 1, SYMPLECTIC)]


def test_sign_factor():
    assert liealg.sign_factor(2, ORTHOGONAL) == 1
    assert liealg.sign_factor(-2, ORTHOGONAL) == 1
    assert liealg.sign_factor(2, SYMPLECTIC) == 1
    assert liealg.sign_factor(-2, SYMPLECTIC) == -1


def test_basis_label_counts():
    # o(n): n(n-1)/2 elements, sp(n): n(n+1)/2
    assert len(liealg.basis_labels(4, ORTHOGONAL)) == 6
    assert len(liealg.basis_labels(5, ORTHOGONAL)) == 10
    assert len(liealg.basis_labels(4, SYMPLECTIC)) == 10
    assert len(liealg.basis_labels(2, SYMPLECTIC)) == 3


def test_ebar_antisymmetry():
    for fam in (ORTHOGONAL, SYMPLECTIC):
        n = 4
        for (p, q) in liealg.basis_labels(n, fam):
            m = liealg.ebar_matrix(n, fam, p, q)
            # ebar_{-q,-p} = -s_p s_q ebar_{pq}
            m2 = liealg.ebar_matrix(n, fam, -q, -p)
            s = liealg.sign_factor(p, fam) * liealg.sign_factor(q, fam)
            assert m2 == {key: -s * v for key, v in m.items()}


@pytest.mark.parametrize("d,k,fam", GRID)
def test_dside_closure(d, k, fam):
    """con is a Lie algebra homomorphism on the basis."""
    params = ModelParams(d, k, fam)
    basis = liealg.basis_labels(d, fam)
    images = {pq: liealg.con_image(params, *pq) for pq in basis}
    for pq1 in basis:
        for pq2 in basis:
            m = liealg.matrix_commutator(
                liealg.ebar_matrix(d, fam, *pq1),
                liealg.ebar_matrix(d, fam, *pq2))
            got = images[pq1].commutator(images[pq2])
            assert got == liealg.con_of_matrix(params, m)


@pytest.mark.parametrize("d,k,fam", GRID)
def test_kside_closure(d, k, fam):
    params = ModelParams(d, k, fam)
    n2 = 2 * k
    basis = liealg.basis_labels(n2, fam)
    images = {tu: liealg.kside_hom_image(params, *tu) for tu in basis}
    for tu1 in basis:
        for tu2 in basis:
            m = liealg.matrix_commutator(
                liealg.ebar_matrix(n2, fam, *tu1),
                liealg.ebar_matrix(n2, fam, *tu2))
            got = images[tu1].commutator(images[tu2])
            assert got == liealg.ncon_of_matrix(params, m)


@pytest.mark.parametrize("d,k,fam", GRID)
def test_actions_commute(d, k, fam):
    params = ModelParams(d, k, fam)
    for x in liealg.dside_basis_images(params):
        for y in liealg.kside_basis_images(params):
            assert x.commutator(y).is_zero()


def test_cartan_weights_are_eigenvalues():
    params = ModelParams(3, 2, ORTHOGONAL)
    for state in range(params.dim):
        dw = liealg.dside_cartan_weight(params, state)
        kw = liealg.kside_cartan_weight(params, state)
        assert len(dw) == params.omega and len(kw) == params.k
    # vacuum: d-side zero, k-side d/2 each
    from fractions import Fraction
    assert liealg.dside_cartan_weight(params, 0) == (0,)
    assert liealg.kside_cartan_weight(params, 0) == \
        (Fraction(3, 2), Fraction(3, 2))
