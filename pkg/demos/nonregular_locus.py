"""The non-regular locus of the Cartan subspace for the rank-2 pairs
(so_7, so_5 x so_2) and (so_10, so_8 x so_2).

An element X = mu X_1 + lambda X_2 of the Cartan subspace is p-regular
when dim p^X equals the rank (here 2).  The locus of non-regular lines
is computed exactly as the rank-drop set of a matrix pencil; at each
special line we also report the symmetric subpair carried by the
centralizer.

Run:  python3 demos/nonregular_locus.py
"""

from fractions import Fraction

from liepairs import build_algebra, build_parabolic, nonregular_locus, subpair

for label, rank in (("B", 3), ("D", 5)):
    alg = build_algebra(label, rank)
    P = build_parabolic(alg, frozenset(range(rank)) - {0})
    print("=" * 72)
    print(f"{P.pair_label}   (from {label}{rank}, omitting alpha_1)")
    print("=" * 72)
    locus = nonregular_locus(P)
    print("generic rank of the pencil:", locus.generic_rank,
          " (regular X have dim p^X =", P.rank, ")")
    print("non-regular lines [mu : lambda]:",
          [f"[{a}:{b}]" for a, b in locus.special_lines])
    xs = P.cartan_subspace()
    for mu, lam in locus.special_lines:
        X = Fraction(mu) * xs[0] + Fraction(lam) * xs[1]
        rep = subpair(P, X)
        print(f"\n  at [{mu}:{lam}]:")
        print(f"    dim g^X = {rep.dim_g_X}   dim k^X = {rep.dim_k_X}"
              f"   dim p^X = {rep.dim_p_X}")
        print(f"    semisimple part l: dim {rep.l_dim}, type {rep.l_type},"
              f" center dim {rep.l_center_dim}")
        print(f"    subpair generated by l cap p: {rep.r_pair_label}")
    print()
