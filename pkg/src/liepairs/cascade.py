"""Kostant's cascade of strongly orthogonal roots.

For a subset T of the simple roots the cascade K(T) is defined by
recursion: it is empty for empty T, the union over connected components
for disconnected T, and for connected T it is {T} together with the
cascade of the simple roots of T orthogonal to the highest root of R_T.
Each entry carries its highest root eps_K and the set Gamma^K of
positive roots of R_K not orthogonal to eps_K; the Gamma^K partition
the positive roots supported on T.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootsystem import (
    RootSystem,
    connected_components,
    highest_root_of_subset,
    strongly_orthogonal,
    subsystem_positive_roots,
)


@dataclass(frozen=True)
class CascadeEntry:
    subset_K: frozenset          # simple-root indices
    epsilon_K: tuple             # highest root of R_K
    gamma_K: tuple               # positive roots of R_K not orthogonal to eps_K

    def __repr__(self):
        ks = "{" + ",".join(f"a{i + 1}" for i in sorted(self.subset_K)) + "}"
        return f"CascadeEntry({ks}, eps={list(self.epsilon_K)})"


def _gamma_set(rs, subset, eps):
    return tuple(r for r in subsystem_positive_roots(rs, subset)
                 if not rs.orthogonal(r, eps))


def cascade(rs: RootSystem, subset) -> list:
    """The cascade K(T) for T a set of simple-root indices."""
    subset = frozenset(subset)
    out = []
    for comp in connected_components(rs, subset):
        eps = highest_root_of_subset(rs, comp)
        out.append(CascadeEntry(comp, eps, _gamma_set(rs, comp, eps)))
        rest = {i for i in comp if rs.orthogonal(_simple(rs, i), eps)}
        out.extend(cascade(rs, rest))
    return out


def _simple(rs, i):
    return tuple(1 if j == i else 0 for j in range(rs.rank))


def full_cascade(rs: RootSystem) -> list:
    return cascade(rs, range(rs.rank))


def verify_gamma_partition(rs: RootSystem, subset) -> dict:
    """Check the structural identities of the cascade over T.

    Verifies that the Gamma^K are pairwise disjoint and cover the
    positive roots supported on T, that every alpha in Gamma^K other
    than eps_K has a unique partner beta in Gamma^K with
    alpha + beta = eps_K, and that the supports of cascade entries are
    nested or disjoint.  Returns a report dict; `failures` lists any
    witnesses (and stays empty for every root system in scope).
    """
    subset = frozenset(subset)
    entries = cascade(rs, subset)
    failures = []

    seen = {}
    for e in entries:
        for r in e.gamma_K:
            if r in seen:
                failures.append({
                    "check": "disjoint",
                    "root": list(r),
                    "entries": [sorted(seen[r]), sorted(e.subset_K)],
                })
            seen[r] = e.subset_K
    all_pos = set(subsystem_positive_roots(rs, subset))
    missed = all_pos - set(seen)
    for r in sorted(missed):
        failures.append({"check": "cover", "root": list(r)})

    for e in entries:
        for a in e.gamma_K:
            if a == e.epsilon_K:
                continue
            partners = [b for b in e.gamma_K
                        if tuple(x + y for x, y in zip(a, b)) == e.epsilon_K]
            if len(partners) != 1:
                failures.append({
                    "check": "unique-complement",
                    "root": list(a),
                    "entry": sorted(e.subset_K),
                    "partners": [list(b) for b in partners],
                })

    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            a, b = entries[i].subset_K, entries[j].subset_K
            if not (a <= b or b <= a or not (a & b)):
                failures.append({
                    "check": "nesting",
                    "entries": [sorted(a), sorted(b)],
                })

    return {
        "type": rs.type_label,
        "rank": rs.rank,
        "subset": sorted(subset),
        "entries": len(entries),
        "gamma_sizes": [len(e.gamma_K) for e in entries],
        "positive_roots": len(all_pos),
        "failures": failures,
        "ok": not failures,
    }


def epsilons_strongly_orthogonal(rs: RootSystem, subset) -> bool:
    """True iff the highest roots of the cascade entries are pairwise
    strongly orthogonal."""
    eps = [e.epsilon_K for e in cascade(rs, subset)]
    for i in range(len(eps)):
        for j in range(i + 1, len(eps)):
            if not strongly_orthogonal(rs, eps[i], eps[j]):
                return False
    return True
