"""Codimension formulas: incidence strata, stability bounds, matrix pairs.

    python3 demos/04_codimension_bounds.py
"""

from fractions import Fraction

from theta_factor import (
    FlagType,
    StratumDatum,
    complete_intersection_height,
    double_det_dim,
    gps_codim_bounds,
    stability_gap,
    quot_codim_bounds,
    schubert_codim,
    telescoping_check,
)


def main():
    # Codimension of the locus of flags meeting a fixed subspace in
    # prescribed dimensions.  (0,2) against the flag (2,2) pins a point
    # of the Grassmannian of 2-planes in 4-space: codimension 4.
    print("incidence codimensions:")
    for r1, n, m in [(1, (1, 1), (0, 1)), (2, (2, 2), (0, 2)), (2, (1, 2, 1), (0, 1, 1))]:
        datum = StratumDatum(r1, n, m)
        print(f"  r1={r1} n={n} m={m} -> codim {schubert_codim(datum)}")
    print()

    # The weighted gap certifying strict stability comparisons.  It is
    # zero exactly at the trivial splittings once there are two blocks.
    gap = stability_gap((2, 1), (1, 1), (Fraction(1, 2), Fraction(1)))
    print(f"stability gap for n=(2,1), m=(1,1), a=(1/2, 1): {gap}")
    print()

    # Lower bounds for the bad loci on the two moduli constructions.
    print("codimension lower bounds (rank 3, reduced genus 2):")
    ss, f = quot_codim_bounds(3, 2, True)
    print(f"  quot side, with marked points:    semistable\\stable >= {ss}, full\\semistable >= {f}")
    h, ns = gps_codim_bounds(3, 2, False)
    print(f"  gps side, without marked points:  ambient\\semistable >= {h}, nonstable >= {ns}")
    print()

    # Matrix pairs (X, Y) with XY = 0 and rank bounds: dimension formula
    # and the complete intersection height it reconciles with.
    r, ri = 4, 2
    dim = double_det_dim(ri, r - ri, ri, r - ri, r)
    height = complete_intersection_height(r, ri)
    print(f"double determinantal dim at r={r}, r_i={ri}: {dim} "
          f"(ambient {r * r}, height {height})")
    print()

    # The telescoping identity that guards the flag bookkeeping.
    flag = FlagType((2, 1, 1))
    print(f"telescoping identity on flag {tuple(flag)}: {telescoping_check(flag)}")


if __name__ == "__main__":
    main()
