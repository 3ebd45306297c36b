"""Mode layout and canonical anticommutation relations."""

import pytest

from fockduality.amplitude import Amp, ONE
from fockduality.params import (DomainError, ModelParams, ResourceLimitError,
                                ORTHOGONAL, SYMPLECTIC)
from fockduality.sparse import (SparseOperator, apply_field, apply_monomial,
                                apply_terms, CREATE, ANNIHILATE)


def field_op(dim, kind, bit):
    return SparseOperator.from_terms(dim, [(1, ((kind, bit),))])


def check_car(n_modes):
    """{a_i, a_j} = 0, {a+_i, a+_j} = 0, {a_i, a+_j} = delta_ij."""
    dim = 1 << n_modes
    ident = SparseOperator.identity(dim)
    ann = [field_op(dim, ANNIHILATE, b) for b in range(n_modes)]
    cre = [field_op(dim, CREATE, b) for b in range(n_modes)]
    for i in range(n_modes):
        for j in range(i, n_modes):
            assert ann[i].anticommutator(ann[j]).is_zero()
            assert cre[i].anticommutator(cre[j]).is_zero()
    for i in range(n_modes):
        for j in range(n_modes):
            got = ann[i].anticommutator(cre[j])
            assert got == (ident if i == j else SparseOperator.zero(dim))


@pytest.mark.parametrize("n_modes", [1, 2, 3, 4, 6])
def test_car_small(n_modes):
    check_car(n_modes)


def test_apply_field_jordan_wigner_sign():
    # creating below an occupied mode picks up one sign flip
    assert apply_field(CREATE, 0, 0b10) == (1, 0b11)
    assert apply_field(CREATE, 1, 0b01) == (-1, 0b11)
    assert apply_field(CREATE, 2, 0b011) == (1, 0b111)
    assert apply_field(ANNIHILATE, 1, 0b011) == (-1, 0b001)
    assert apply_field(CREATE, 0, 0b01) is None
    assert apply_field(ANNIHILATE, 0, 0b10) is None


def test_apply_monomial_order():
    # leftmost factor acts last
    mono = ((CREATE, 1), (CREATE, 0))
    assert apply_monomial(mono, 0) == (-1, 0b11)
    mono_rev = ((CREATE, 0), (CREATE, 1))
    assert apply_monomial(mono_rev, 0) == (1, 0b11)


def test_apply_terms_accumulates():
    vec = {0: ONE}
    out = apply_terms([(Amp(2), ((CREATE, 0),)),
                       (Amp(3), ((CREATE, 1),))], vec)
    assert out == {0b01: Amp(2), 0b10: Amp(3)}


def test_mode_layout_bijection():
    for d, k in ((2, 2), (3, 2), (4, 1), (5, 1)):
        params = ModelParams(d, k, ORTHOGONAL)
        seen = set()
        for tau in range(1, k + 1):
            for p in params.p_labels:
                mode = params.mode_index(p, tau)
                back = params.mode_of_bit(mode.bit)
                assert (back.p, back.tau) == (p, tau)
                seen.add(mode.bit)
        assert seen == set(range(params.n_modes))


def test_p_labels_omit_zero_for_even_d():
    assert ModelParams(4, 1).p_labels == (-2, -1, 1, 2)
    assert ModelParams(5, 1).p_labels == (-2, -1, 0, 1, 2)


def test_parameter_validation():
    with pytest.raises(DomainError):
        ModelParams(0, 1)
    with pytest.raises(DomainError):
        ModelParams(3, 1, SYMPLECTIC)
    with pytest.raises(DomainError):
        ModelParams(2, 1, "unitary")
    with pytest.raises(ResourceLimitError):
        ModelParams(5, 5, ORTHOGONAL)
    with pytest.raises(DomainError):
        ModelParams(4, 1).mode_index(0, 1)
    with pytest.raises(DomainError):
        ModelParams(4, 1).mode_index(1, 2)


def test_sparse_equality_and_scale():
    dim = 4
    a = field_op(dim, CREATE, 0)
    assert a.scale(2).scale(Amp(1, 0, 0, 0, 2)) == a
    assert (a - a).is_zero()
    assert a != field_op(dim, CREATE, 1)


def test_matvec_matches_matmul():
    dim = 8
    a = field_op(dim, CREATE, 0)
    b = field_op(dim, ANNIHILATE, 2)
    vec = {0b100: ONE, 0b110: Amp(2)}
    prod = a @ b
    direct = a.matvec(b.matvec(vec))
    via = prod.matvec(vec)
    assert direct == via
