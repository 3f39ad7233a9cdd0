import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yfock.errors import DomainError
from yfock.fockrep import (
    AFFINE_E,
    AFFINE_F,
    AFFINE_H,
    AY_H,
    AY_XM,
    AY_XP,
    BFIX,
    JACK,
    SCHUR,
    YSL_H,
    YSL_XM,
    YSL_XP,
    FockVec,
    OperatorId,
    act,
    change_basis,
    h_eigen_factors,
    h_r_eigenvalue,
    h_series,
    lowering_products,
    raising_products,
)
from yfock.partitions import Partition, addable_cells, partitions_up_to, removable_cells
from yfock.ratfield import RatFun, e1, e2, hbar, substitute_hbar_zero

P = Partition
E1, E2 = e1(), e2()


def vec(basis, *pairs):
    return FockVec(basis, dict(pairs))


def test_chevalley_examples():
    s = lambda lam: FockVec.basis_vector(SCHUR, lam)  # noqa: E731
    assert act(OperatorId(AFFINE_E, 1), s((2,)), 2) == s((1,))
    assert act(OperatorId(AFFINE_F, 0), s((1,)), 2).is_zero()
    assert act(OperatorId(AFFINE_F, 1), s((1,)), 2) == vec(SCHUR, ((2,), 1), ((1, 1), 1))
    assert act(OperatorId(AFFINE_H, 0), s((1,)), 2) == s((1,)).scale(RatFun.const(-1))
    assert act(OperatorId(AFFINE_F, 0), s(()), 3) == s((1,))


def test_yangian_sl_lowering_example():
    got = act(OperatorId(YSL_XM, 1, 0), FockVec.basis_vector(JACK, (1,)), 2)
    assert got == vec(JACK, ((2,), 1), ((1, 1), 2 * E1 / (E1 - E2)))


def test_yangian_sl_raising_mode_one():
    # oracle: X+_{1,0} is e_1 transported from Schur to Jack; mode 1 multiplies
    # by the shifted content of the removed cell (0, 1), namely (e1 + e2)/2
    s_side = change_basis(FockVec.basis_vector(JACK, (2,)), SCHUR, 2)
    mode0 = change_basis(act(OperatorId(AFFINE_E, 1), s_side, 2), JACK, 2)
    assert mode0 == vec(JACK, ((1,), -2 * E2 / (E1 - E2)))
    got = act(OperatorId(YSL_XP, 1, 1), FockVec.basis_vector(JACK, (2,)), 2)
    assert got == mode0.scale((E1 + E2) / 2)
    assert got.coeff((1,)) == RatFun.parse("-(e1*e2 + e2^2)/(e1 - e2)")


def test_affine_yangian_examples():
    b = lambda lam: FockVec.basis_vector(BFIX, lam)  # noqa: E731
    assert act(OperatorId(AY_XM, 0, 0), b(()), 2) == b((1,))
    assert act(OperatorId(AY_XP, 0, 1), b((1,)), 2) == vec(BFIX, ((), 0))
    assert act(OperatorId(AY_H, 0, 0), b((1,)), 2) == b((1,)).scale(RatFun.const(-1))


def test_h_factors_and_eigenvalues():
    assert h_eigen_factors(AY_H, 0, P((1,)), 2) == ((hbar(), RatFun.const(0)),)
    assert h_r_eigenvalue(AY_H, 0, 0, P((1,)), 2) == -1
    assert h_r_eigenvalue(AY_H, 1, 1, P((1,)), 2) == 2 * hbar()
    assert h_eigen_factors(AY_H, 1, P((1,)), 2) == ((-E1, E2), (-E2, E1))
    assert h_r_eigenvalue(AY_H, 1, 0, P((1,)), 2) == 2
    assert h_eigen_factors(AY_H, 0, P(()), 2) == ((-hbar(), RatFun.const(0)),)
    ser = h_series(AY_H, 0, P(()), 2, 3)
    assert ser.coeff(0) == 1
    assert ser.coeff(1) == hbar()
    assert h_r_eigenvalue(AY_H, 0, 0, P(()), 2) == 1


def test_change_basis_example():
    assert change_basis(FockVec.basis_vector(SCHUR, (1, 1)), JACK, 2) == FockVec.basis_vector(JACK, (1, 1))
    assert change_basis(FockVec.basis_vector(JACK, (2,)), SCHUR, 2) == vec(
        SCHUR, ((2,), 1), ((1, 1), -(E1 + E2) / (E1 - E2))
    )
    assert change_basis(FockVec.basis_vector(JACK, (3,)), BFIX, 2).basis == BFIX


@settings(max_examples=30)
@given(st.integers(1, 3), st.sampled_from(partitions_up_to(5)), st.sampled_from([JACK, BFIX]))
def test_change_basis_round_trip(N, lam, basis):
    v = FockVec.basis_vector(SCHUR, lam)
    assert change_basis(change_basis(v, basis, N), SCHUR, N) == v


@pytest.mark.parametrize("N", [2, 3])
def test_diagonal_consistency(N):
    # E F product matches on both sides, and h_{i,0} equals the Chevalley h_i
    for lam in partitions_up_to(6):
        for i in range(N):
            for mu, cell, down in lowering_products(lam, i, N):
                up = dict((c, p) for _, c, p in raising_products(mu, i, N))[cell]
                assert down and up
            k = len(addable_cells(lam, N, i)) - len(removable_cells(lam, N, i))
            assert h_r_eigenvalue(AY_H, i, 0, lam, N) == k
            assert h_r_eigenvalue(YSL_H, i, 0, lam, N) == k if i else True


@pytest.mark.parametrize("N", [2, 3])
def test_yangian_degenerates_to_chevalley(N):
    # at e2 = -e1 mode-zero generators on P become the Chevalley action on s
    for lam in partitions_up_to(5):
        for i in range(1, N):
            for fam, chev in ((YSL_XP, AFFINE_E), (YSL_XM, AFFINE_F)):
                got = act(OperatorId(fam, i, 0), FockVec.basis_vector(JACK, lam), N)
                want = act(OperatorId(chev, i), FockVec.basis_vector(SCHUR, lam), N)
                deg = {mu: substitute_hbar_zero(c) for mu, c in got.terms.items()}
                assert {mu: c for mu, c in deg.items() if c} == {
                    mu: c for mu, c in want.terms.items()
                }, (lam, i, fam)


def test_bad_indices_and_modes():
    with pytest.raises(DomainError):
        OperatorId("zz", 0)
    with pytest.raises(DomainError):
        OperatorId(AFFINE_E, 0, 1)
    with pytest.raises(DomainError):
        OperatorId(AY_XP, 0, -1)
    with pytest.raises(DomainError):
        act(OperatorId(YSL_XP, 0, 0), FockVec.basis_vector(JACK, (1,)), 2)
    with pytest.raises(DomainError):
        act(OperatorId(AY_XP, 2, 0), FockVec.basis_vector(BFIX, (1,)), 2)
    with pytest.raises(DomainError):
        FockVec("nope")
    with pytest.raises(DomainError):
        FockVec.basis_vector(SCHUR, (1,)) + FockVec.basis_vector(JACK, (1,))
