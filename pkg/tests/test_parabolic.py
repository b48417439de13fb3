"""Maximal parabolics with abelian radical and their Cartan subspaces."""

import random

import pytest

from liepairs.chevalley import build_algebra, centralizer_in
from liepairs.parabolic import (
    abelian_set,
    build_parabolic,
    enumerate_catalog,
    generic_p_centralizer_dim,
    is_abelian_radical,
    pair_label,
    proposition_checks,
    scan_type,
)


def test_abelian_set_b3():
    alg = build_algebra("B", 3)
    r1 = abelian_set(alg.rs, frozenset({1, 2}))
    # roots containing alpha_1: e1 -+ e2, e1 -+ e3, e1
    assert len(r1) == 5
    assert all(r[0] == 1 for r in r1)


def test_abelianness_scan_b3():
    alg = build_algebra("B", 3)
    # only removing alpha_1 gives an abelian radical in B3
    assert is_abelian_radical(alg.rs, frozenset({1, 2}))
    assert not is_abelian_radical(alg.rs, frozenset({0, 2}))
    assert not is_abelian_radical(alg.rs, frozenset({0, 1}))


def test_scan_counts():
    assert len(scan_type("A", 4)) == 4
    assert len(scan_type("B", 4)) == 1
    assert len(scan_type("C", 4)) == 1
    assert len(scan_type("D", 5)) == 3
    assert len(scan_type("E6", 6)) == 2
    assert len(scan_type("E7", 7)) == 1
    assert len(scan_type("F4", 4)) == 0
    assert len(scan_type("G2", 2)) == 0


def test_catalog_against_static_oracle():
    # enumerate_catalog raises on any disagreement with the static table
    catalog = enumerate_catalog(max_rank=6)
    assert len(catalog) > 0
    labels = {p.pair_label for p in catalog}
    assert "(so_7, so_5 x so_2)" in labels
    assert "(E7, E6 x C)" in labels


def test_pair_labels():
    assert pair_label("B", 3, 0) == "(so_7, so_5 x so_2)"
    assert pair_label("C", 4, 3) == "(sp_8, gl_4)"
    assert pair_label("D", 5, 0) == "(so_10, so_8 x so_2)"
    assert pair_label("D", 5, 4) == "(so_10, gl_5)"
    assert pair_label("A", 3, 1) == "(sl_4, sl_2 x sl_2 x C)"


def test_build_parabolic_rejects_nonabelian():
    alg = build_algebra("B", 3)
    with pytest.raises(ValueError):
        build_parabolic(alg, frozenset({0, 2}))


def test_b3_cartan_subspace():
    alg = build_algebra("B", 3)
    P = build_parabolic(alg, frozenset({1, 2}))
    assert P.pair_label == "(so_7, so_5 x so_2)"
    assert P.rank == 2
    assert len(P.R_S1) == 5
    assert len(P.k_basis()) + len(P.p_basis()) == alg.dimension
    rep = proposition_checks(P)
    assert rep["ok"], rep["failures"]


def test_e7_entry_sets():
    P = scan_type("E7", 7)[0]
    assert P.omitted_index == 6
    sets = sorted(sorted(i + 1 for i in e.subset_K) for e in P.E_entries)
    assert sets == [[1, 2, 3, 4, 5, 6, 7], [2, 3, 4, 5, 6, 7], [7]]
    assert P.rank == 3


@pytest.mark.parametrize("label,rank,root", [
    ("A", 5, 2), ("C", 3, 2), ("D", 4, 3), ("E6", 6, 0),
])
def test_proposition_checks(label, rank, root):
    alg = build_algebra(label, rank)
    P = build_parabolic(alg, frozenset(range(rank)) - {root})
    rep = proposition_checks(P)
    assert rep["ok"], rep["failures"]
    assert rep["dim_a"] == P.rank


def test_generic_centralizer_dim_is_rank():
    alg = build_algebra("D", 5)
    P = build_parabolic(alg, frozenset(range(5)) - {0})
    assert generic_p_centralizer_dim(P, seed=0) == P.rank


def test_radical_roots_commute():
    alg = build_algebra("C", 3)
    P = build_parabolic(alg, frozenset({0, 1}))
    from liepairs.chevalley import bracket
    xs = [alg.x(r) for r in P.R_S1]
    for i in range(len(xs)):
        for j in range(len(xs)):
            assert not bracket(xs[i], xs[j])


def test_cartan_element_centralizer_contains_subspace():
    alg = build_algebra("B", 3)
    P = build_parabolic(alg, frozenset({1, 2}))
    rng = random.Random(5)
    x = P.random_cartan_element(rng)
    cz = centralizer_in(x, P.p_basis())
    assert len(cz) >= P.rank
