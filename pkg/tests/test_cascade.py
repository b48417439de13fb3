"""Kostant cascade of strongly orthogonal roots."""

import pytest

from liepairs.cascade import (
    cascade,
    epsilons_strongly_orthogonal,
    full_cascade,
    verify_gamma_partition,
)
from liepairs.rootsystem import build_root_system, strongly_orthogonal

# cascade sizes for the full system (number of entries = dim of the
# Cartan subspace of the corresponding maximal-parabolic pairs)
CASCADE_SIZES = {
    ("A", 1): 1, ("A", 2): 1, ("A", 3): 2, ("A", 4): 2, ("A", 5): 3,
    ("A", 8): 4,
    ("B", 2): 2, ("B", 3): 3, ("B", 4): 4, ("B", 8): 8,
    ("C", 3): 3, ("C", 4): 4, ("C", 8): 8,
    ("D", 4): 4, ("D", 5): 4, ("D", 6): 6, ("D", 7): 6, ("D", 8): 8,
    ("E6", 6): 4, ("E7", 7): 7, ("E8", 8): 8,
    ("F4", 4): 4, ("G2", 2): 2,
}


@pytest.mark.parametrize("label,rank", sorted(CASCADE_SIZES))
def test_cascade_sizes(label, rank):
    rs = build_root_system(label, rank)
    assert len(full_cascade(rs)) == CASCADE_SIZES[(label, rank)]


def test_b3_cascade_by_hand():
    rs = build_root_system("B", 3)
    entries = full_cascade(rs)
    data = {tuple(sorted(e.subset_K)): e.epsilon_K for e in entries}
    # K = Pi -> highest root e1+e2; complement of its non-orthogonal
    # simple roots leaves {a1} and {a3}
    assert data == {
        (0, 1, 2): (1, 2, 2),   # e1 + e2
        (0,): (1, 0, 0),        # e1 - e2
        (2,): (0, 0, 1),        # e3
    }


def test_a3_cascade_by_hand():
    rs = build_root_system("A", 3)
    entries = full_cascade(rs)
    data = {tuple(sorted(e.subset_K)): e.epsilon_K for e in entries}
    assert data == {(0, 1, 2): (1, 1, 1), (1,): (0, 1, 0)}


def test_gamma_of_full_system_contains_epsilon():
    rs = build_root_system("D", 5)
    for e in full_cascade(rs):
        assert e.epsilon_K in e.gamma_K


@pytest.mark.parametrize("label,rank", [("A", 5), ("B", 4), ("C", 4),
                                        ("D", 5), ("E6", 6), ("F4", 4),
                                        ("G2", 2)])
def test_gamma_partition_invariants(label, rank):
    rs = build_root_system(label, rank)
    rep = verify_gamma_partition(rs, frozenset(range(rank)))
    assert rep["failures"] == []
    assert sum(rep["gamma_sizes"]) == len(rs.positive_roots)


@pytest.mark.parametrize("label,rank", [("A", 6), ("B", 5), ("D", 6),
                                        ("E7", 7)])
def test_epsilons_pairwise_strongly_orthogonal(label, rank):
    rs = build_root_system(label, rank)
    assert epsilons_strongly_orthogonal(rs, frozenset(range(rank)))
    eps = [e.epsilon_K for e in full_cascade(rs)]
    for i in range(len(eps)):
        for j in range(i + 1, len(eps)):
            assert strongly_orthogonal(rs, eps[i], eps[j])


def test_cascade_of_subset():
    rs = build_root_system("D", 5)
    entries = cascade(rs, frozenset({1, 2, 3, 4}))  # D4 subsystem
    assert len(entries) == 4
    assert all(0 not in e.subset_K for e in entries)
