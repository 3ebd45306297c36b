"""Reflection lifts, the Pin generator sigma, and its identities."""

import pytest

from fockduality import liealg, pinops
from fockduality.amplitude import Amp
from fockduality.params import ModelParams, ORTHOGONAL
from fockduality.sparse import SparseOperator

GRID = [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (4, 2), (5, 1), (5, 2)]


@pytest.mark.parametrize("d,k", GRID)
def test_reflection_lift_squares_to_identity(d, k):
    params = ModelParams(d, k, ORTHOGONAL)
    r = pinops.reflection_lift(params)
    assert (r @ r) == SparseOperator.identity(params.dim)


@pytest.mark.parametrize("d,k", GRID)
def test_sigma_square(d, k):
    params = ModelParams(d, k, ORTHOGONAL)
    sigma = pinops.sigma_form_basis(params)
    ident = SparseOperator.identity(params.dim)
    assert (sigma @ sigma) == ident.scale((-1) ** d)


@pytest.mark.parametrize("d,k", GRID)
def test_sigma_pushthrough_agrees_with_basis_change(d, k):
    params = ModelParams(d, k, ORTHOGONAL)
    assert pinops.sigma_form_basis(params) == pinops.sigma_pushthrough(params)


@pytest.mark.parametrize("d,k", GRID)
def test_sigma_commutes_with_algebra(d, k):
    params = ModelParams(d, k, ORTHOGONAL)
    sigma = pinops.sigma_form_basis(params)
    for x in liealg.dside_basis_images(params):
        assert sigma.commutator(x).is_zero()


@pytest.mark.parametrize("d,k", GRID)
def test_sigma_coset_signs(d, k):
    params = ModelParams(d, k, ORTHOGONAL)
    assert pinops.sigma_coset_checks(params)


@pytest.mark.parametrize("d,k", GRID)
def test_sigma_vacuum_images(d, k):
    params = ModelParams(d, k, ORTHOGONAL)
    assert all(pinops.sigma_vacuum_checks(params).values())


@pytest.mark.parametrize("d,k", GRID)
def test_rho_of_minus_one(d, k):
    params = ModelParams(d, k, ORTHOGONAL)
    expect = SparseOperator.identity(params.dim).scale((-1) ** d)
    assert pinops.rho_of_minus_one(params) == expect


def test_special_orthogonal_examples_preserve_form():
    # g^T B g = B with B the form <b|pq> = delta_{p,-q}
    for d in (2, 3, 4, 5):
        params = ModelParams(d, 1, ORTHOGONAL)
        labels = params.p_labels
        for mat, _det in pinops.special_orthogonal_examples(params):
            for p in labels:
                for q in labels:
                    got = Amp(0)
                    for a in labels:
                        u = mat.get((a, p))
                        v = mat.get((-a, q))
                        if u is not None and v is not None:
                            got = got + u * v
                    expect = Amp(1) if p == -q else Amp(0)
                    assert got == expect


def test_letter_operator_square():
    # the lifted reflection letter squares to (-1)**d
    for d, k in ((2, 2), (3, 2)):
        params = ModelParams(d, k, ORTHOGONAL)
        sigma = pinops.sigma_delta(params)
        ident = SparseOperator.identity(params.dim)
        assert (sigma @ sigma) == ident.scale((-1) ** d)


def test_phi_state_simple():
    params = ModelParams(3, 2, ORTHOGONAL)
    levels = pinops.diagram_levels(params, (2, 1))
    vec = pinops.phi_state(params, levels)
    assert len(vec) == 1
    state = next(iter(vec))
    assert bin(state).count("1") == 3
