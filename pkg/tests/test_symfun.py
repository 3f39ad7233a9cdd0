from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from yfock.errors import DomainError
from yfock.partitions import Partition, dominance_le, partitions_of, partitions_up_to
from yfock.ratfield import RatFun, e1, e2
from yfock.symfun import (
    POWER,
    SCHUR,
    SymFun,
    convert,
    jack_glN,
    jack_norm_formula,
    jack_norm_gram_schmidt,
    lemma_ratio,
    power,
    power_to_schur,
    schur,
    schur_to_power,
    uglov_form,
)

P = Partition
E1, E2 = e1(), e2()


def test_schur_to_power_small():
    assert schur_to_power(P((1,))).terms == {P((1,)): 1}
    s2 = schur_to_power(P((2,)))
    assert s2.terms == {P((1, 1)): Fraction(1, 2), P((2,)): Fraction(1, 2)}
    s11 = schur_to_power(P((1, 1)))
    assert s11.terms == {P((1, 1)): Fraction(1, 2), P((2,)): Fraction(-1, 2)}


@pytest.mark.parametrize("n", range(7))
def test_transitions_are_inverse(n):
    for lam in partitions_of(n):
        assert convert(convert(schur(lam), POWER), SCHUR) == schur(lam)
        assert convert(convert(power(lam), SCHUR), POWER).terms == power(lam).terms


def test_uglov_form_on_power_sums():
    assert uglov_form(power((2,)), power((2,)), 2) == -2 * E2 / E1
    assert uglov_form(power((1, 1)), power((1, 1)), 2) == 2
    assert uglov_form(power((2,)), power((1, 1)), 2) == 0
    assert uglov_form(power((2,)), power((1,)), 2) == 0


def test_jack_examples():
    assert jack_glN((1,), 3) == schur((1,))
    p2_1 = jack_glN((2,), 1)
    assert p2_1.coeff((1, 1)) == (E1 + E2) / (E1 - E2) and p2_1.coeff((2,)) == 1
    p2_2 = jack_glN((2,), 2)
    assert p2_2.coeff((1, 1)) == -(E1 + E2) / (E1 - E2)
    assert p2_2.to_json() == {
        "basis": "schur",
        "degree": 2,
        "terms": [
            {"partition": "2", "coeff": "1"},
            {"partition": "1,1", "coeff": "-(e1 + e2)/(e1 - e2)"},
        ],
    }


def test_norm_formula_examples():
    assert jack_norm_formula(P((1,)), 2) == 1
    assert jack_norm_formula(P((2,)), 2) == -2 * E2 / (E1 - E2)
    assert jack_norm_formula(P((1, 1)), 2) == (E1 - E2) / (2 * E1)


def test_lemma_ratio_examples():
    assert lemma_ratio(P((2,)), 1, (0, 1), 2, "iii") == -2 * E2 / (E1 - E2)
    assert lemma_ratio(P((1,)), 0, (0, 0), 1, "iii") == -E2 / E1
    with pytest.raises(DomainError):
        lemma_ratio(P((2,)), 0, (0, 1), 2, "i")
    with pytest.raises(DomainError):
        lemma_ratio(P((2,)), 1, (0, 1), 2, "iv")


def test_symfun_rejects_mixed_degrees():
    with pytest.raises(DomainError):
        SymFun(SCHUR, {P((1,)): 1, P((2,)): 1})


@pytest.mark.parametrize("N", [1, 2, 3])
def test_jack_orthogonality_and_triangularity(N):
    for n in range(7):
        parts = partitions_of(n)
        jacks = {lam: jack_glN(lam, N) for lam in parts}
        for lam in parts:
            f = jacks[lam]
            assert f.coeff(lam) == 1
            for mu in f.terms:
                assert dominance_le(mu, lam), (lam, mu)
            for mu in parts:
                if mu != lam:
                    assert uglov_form(f, jacks[mu], N) == 0, (lam, mu)


def test_incomparable_pairs_are_orthogonal():
    # (3,3) and (4,1,1) are incomparable; Gram-Schmidt order does not force this
    for N in (1, 2, 3):
        assert uglov_form(jack_glN((3, 3), N), jack_glN((4, 1, 1), N), N) == 0


@pytest.mark.parametrize("N", [1, 2, 3])
def test_norm_via_form_matches_formula(N):
    for lam in partitions_up_to(6):
        f = jack_glN(lam, N)
        assert uglov_form(f, f, N) == jack_norm_formula(lam, N)


@pytest.mark.parametrize("N", [2, 3])
def test_gram_schmidt_order_independence(N):
    # any linear extension of dominance gives the same P: rerun with the
    # conjugate-reversed order and compare
    from yfock.symfun import schur_gram

    for n in range(2, 7):
        gram = schur_gram(n, N)
        order = sorted(partitions_of(n), key=lambda p: tuple(p.conjugate()), reverse=True)
        done, vecs, norms = [], {}, {}
        for lam in order:
            v = {lam: RatFun.const(1)}
            for mu in done:
                ip = sum((c * gram[lam, nu] for nu, c in vecs[mu].items()), RatFun.const(0))
                k = ip / norms[mu]
                for nu, c in vecs[mu].items():
                    v[nu] = v.get(nu, RatFun.const(0)) - k * c
            v = {k2: c for k2, c in v.items() if c}
            norms[lam] = sum((c * gram[lam, nu] for nu, c in v.items()), RatFun.const(0))
            vecs[lam] = v
            done.append(lam)
        for lam in order:
            assert vecs[lam] == jack_glN(lam, N).terms, (n, lam)


@given(st.integers(1, 3), st.sampled_from(partitions_up_to(6)), st.sampled_from(partitions_up_to(6)))
def test_form_is_symmetric(N, lam, mu):
    a, b = schur(lam), schur(mu)
    assert uglov_form(a, b, N) == uglov_form(b, a, N)


def test_gram_schmidt_norm_examples():
    assert jack_norm_gram_schmidt(P((2,)), 2) == -2 * E2 / (E1 - E2)
    assert jack_norm_gram_schmidt(P(()), 2) == 1


def test_power_to_schur_integral():
    for lam in partitions_of(5):
        for c in power_to_schur(lam).terms.values():
            assert c.is_const() and c.den.is_one()
