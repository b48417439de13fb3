"""Matrix model of (so_{p+2}, so_p x so_2): orbit representatives,
normal triples, Jordan decomposition, Cayley transforms, witnesses."""

from fractions import Fraction

import pytest

from liepairs import matrixmodel as mm
from liepairs import orbits
from liepairs.gaussian import QI

F = Fraction


def test_pair_dimensions():
    for p in (2, 3, 5):
        pair = mm.build_pair(p)
        n = p + 2
        assert len(pair.g_basis()) == n * (n - 1) // 2
        assert len(pair.p_basis()) == 2 * p
        assert len(pair.k_basis()) == p * (p - 1) // 2 + 1


def test_theta_is_involution_splitting():
    pair = mm.build_pair(3)
    for b in pair.k_basis():
        assert mm.mat_eq(pair.theta(b), b)
    for b in pair.p_basis():
        assert mm.mat_is_zero(mm.mat_add(pair.theta(b), b))


def test_phi_equivariance():
    for p in (2, 4):
        assert mm.phi_equivariance_check(mm.build_pair(p))


def test_phi_lands_in_skew_matrices():
    pair = mm.build_pair(3)
    for b in mm.real_form_basis(pair):
        assert mm.is_skew(pair.phi(b))


def test_phi_of_K_is_iH():
    pair = mm.build_pair(4)
    for i in (1, 2):
        expect = mm.mat_scale(pair.H(i), QI(0, 1))
        assert mm.mat_eq(pair.phi(mm.K(pair, i)), expect)


def test_jordan_decompose_trivial_cases():
    N = [[F(0), F(1)], [F(0), F(0)]]
    S, Nn = mm.jordan_decompose(N)
    assert mm.mat_is_zero(S) and mm.mat_eq(Nn, mm.qi_entries(N))
    D = [[F(2), F(0)], [F(0), F(5)]]
    S, Nn = mm.jordan_decompose(D)
    assert mm.mat_eq(S, mm.qi_entries(D)) and mm.mat_is_zero(Nn)


def test_jordan_decompose_block_plus_scalar():
    # 2x2 Jordan block at 1, plus scalar 3
    M = [[F(1), F(1), F(0)], [F(0), F(1), F(0)], [F(0), F(0), F(3)]]
    S, N = mm.jordan_decompose(M)
    assert S == mm.qi_entries([[F(1), F(0), F(0)],
                               [F(0), F(1), F(0)],
                               [F(0), F(0), F(3)]])
    assert N[0][1] == QI(1)
    assert mm.mat_eq(mm.mat_mul(S, N), mm.mat_mul(N, S))
    assert mm.is_semisimple(S) and mm.is_nilpotent(N)


def test_jordan_type():
    M = mm.zeros(5)
    M[1][0] = mm.Q1
    M[2][1] = mm.Q1
    M[4][3] = mm.Q1
    assert mm.jordan_type(M) == (3, 2)


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_diagram_representatives(p):
    pair = mm.build_pair(p)
    for d in orbits.enumerate_dyo(p):
        X = mm.nilpotent_from_diagram(pair, d)
        assert mm.is_skew(X)
        assert mm.jordan_type(mm.qi_entries(X)) == tuple(
            sorted(d.shape, reverse=True))
        if not mm.mat_is_zero(X):
            assert pair.parity_tag(X) == "in-p"


@pytest.mark.parametrize("p", [3, 4])
def test_normal_triples_and_characteristics(p):
    pair = mm.build_pair(p)
    for d in orbits.enumerate_dyo(p):
        X = mm.nilpotent_from_diagram(pair, d)
        if mm.mat_is_zero(X):
            continue
        t = mm.normal_triple_for(pair, X)
        assert t.validate() == []
        c = mm.characteristic_from_triple(t)
        cd = orbits.characteristic(orbits.forget_signs(d))
        cands = c if isinstance(c[0], tuple) else (c,)
        cd_cands = cd if isinstance(cd[0], tuple) else (cd,)
        assert set(cands) & set(cd_cands), (d, c, cd)


def test_normal_triple_rejects_bad_input():
    pair = mm.build_pair(3)
    with pytest.raises(ValueError):
        mm.normal_triple_for(pair, mm.zeros(5))
    with pytest.raises(ValueError):
        # semisimple element of p
        mm.normal_triple_for(pair, mm.cartan_point(pair, 1, 0))
    with pytest.raises(ValueError):
        # nilpotent but not in p
        M = mm.zeros(5)
        M[0][1] = mm.Q1
        M[1][0] = -mm.Q1
        mm.normal_triple_for(pair, M)


def test_minimal_orbit_cayley_triple():
    pair = mm.build_pair(4)
    t = mm.minimal_orbit_cayley_triple(pair)
    assert t.validate() == []
    nt = mm.cayley_transform(pair, t)
    assert nt.validate() == []
    # round trip back to the embedded real-form triple
    H0, X0, Y0 = mm.inverse_cayley_transform(pair, nt)
    assert mm.mat_eq(H0, pair.phi(mm.qi_entries(t.H0)))
    assert mm.mat_eq(X0, pair.phi(mm.qi_entries(t.X0)))
    assert mm.mat_eq(Y0, pair.phi(mm.qi_entries(t.Y0)))


@pytest.mark.parametrize("p", [3, 4, 5])
def test_minimal_orbit_not_distinguished(p):
    rep = mm.minimal_orbit_not_distinguished(mm.build_pair(p))
    assert rep["ok"], rep


def test_minimal_orbit_witness_needs_p_at_least_3():
    with pytest.raises(ValueError):
        mm.minimal_orbit_not_distinguished(mm.build_pair(2))


def test_lemma51_sampling():
    pair = mm.build_pair(4)
    X, Xs, Xn = mm.lemma_witness_element(pair)
    assert pair.parity_tag(Xs) == "in-p"
    assert pair.parity_tag(Xn) == "in-p"
    assert mm.mat_is_zero(mm.commutator(Xs, Xn))
    rep = mm.lemma51_check(pair, X, trials=20, seed=3)
    assert rep["ok"], rep


def test_lemma51_rejects_pure_inputs():
    pair = mm.build_pair(3)
    with pytest.raises(ValueError):
        mm.lemma51_check(pair, mm.cartan_point(pair, 1, 2))


def test_even_sheet_on_even_orbit():
    pair = mm.build_pair(4)
    d = [x for x in orbits.enumerate_dyo(4)
         if tuple(sorted(x.shape, reverse=True)) == (3, 1, 1, 1)][0]
    t = mm.normal_triple_for(pair, mm.nilpotent_from_diagram(pair, d))
    rep = mm.even_sheet_witness(pair, t)
    assert rep["ok"], rep
    assert all(s["semisimple"] for s in rep["samples"])


def test_even_sheet_rejects_non_even_orbit():
    pair = mm.build_pair(4)
    d = [x for x in orbits.enumerate_dyo(4)
         if tuple(sorted(x.shape, reverse=True)) == (2, 2, 1, 1)][0]
    t = mm.normal_triple_for(pair, mm.nilpotent_from_diagram(pair, d))
    with pytest.raises(ValueError):
        mm.even_sheet_witness(pair, t)


def test_dim_identity():
    rep = mm.dim_identity_check(mm.build_pair(3), samples=25, seed=1)
    assert rep["ok"], rep


def test_locus_matrix_model():
    # p >= 3: four special lines, matching the root-space computation
    pair = mm.build_pair(3)
    lines, residual = mm.nonregular_locus_matrix(pair)
    assert [(str(a), str(b)) for a, b in lines] == [
        ("0", "1"), ("1", "-1"), ("1", "0"), ("1", "1")]
    assert residual == ()


def test_locus_so4_case():
    # p = 2 (the (so_4, so_2 x so_2) pair, not covered by the parabolic
    # catalog): only the two lines mu = -+ lambda are non-regular
    pair = mm.build_pair(2)
    lines, residual = mm.nonregular_locus_matrix(pair)
    assert [(str(a), str(b)) for a, b in lines] == [("1", "-1"), ("1", "1")]
    assert residual == ()
    # dims-level subpair data at the special and generic points
    assert mm.centralizer_dims(pair, mm.cartan_point(pair, 1, 1)) == (4, 1, 3)
    assert mm.centralizer_dims(pair, mm.cartan_point(pair, 1, -1)) == (4, 1, 3)
    assert mm.centralizer_dims(pair, mm.cartan_point(pair, 2, 3)) == (2, 0, 2)


def test_restricted_root_multiplicities():
    pair = mm.build_pair(5)
    # long restricted roots e1 -+ e2 have multiplicity 1
    assert len(mm.real_restricted_root_space(pair, 1, -1)) == 1
    assert len(mm.real_restricted_root_space(pair, 1, 1)) == 1
    # short restricted root e1 has multiplicity p - 2
    assert len(mm.real_restricted_root_space(pair, 1, 0)) == 3
