"""Partitions in a box and exact Schur module dimensions.

Run from the repository root after an editable install:

    python3 demos/01_partitions_and_dimensions.py
"""

from theta_factor import (
    Partition,
    box_count,
    complement_in_box,
    dim_schur,
    enumerate_in_box,
)


def main():
    # Every partition with at most 2 rows and parts at most 2, in the
    # deterministic order used everywhere else in the package.
    print("partitions in the 2x2 box:")
    for mu in enumerate_in_box(2, 2):
        print(f"  {mu.padded(2)}  complement {complement_in_box(mu, 2, 2).padded(2)}")
    print(f"count = {box_count(2, 2)} = binomial(4, 2)")
    print()

    # Dimensions are exact integers from the hook content product.
    print("dim S_lam(C^n) for a few shapes:")
    for shape, n in [((), 5), ((1,), 4), ((2, 1), 2), ((2, 2), 4), ((3, 2, 1), 3)]:
        lam = Partition(shape)
        print(f"  lam={shape!s:10} n={n}  dim={dim_schur(lam, n)}")
    print()

    # Appending a full column (the determinant twist) never changes the
    # dimension; this is the identity the branching module leans on.
    lam = Partition((2, 1))
    twisted = Partition(tuple(p + 1 for p in lam.padded(3)))
    print(f"determinant twist: dim {tuple(lam)} = {dim_schur(lam, 3)}, "
          f"dim {tuple(twisted)} = {dim_schur(twisted, 3)}")


if __name__ == "__main__":
    main()
