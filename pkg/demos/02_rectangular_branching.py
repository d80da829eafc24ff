"""Rectangular branching: multiplicity-free pairs over a box.

The rectangle (m^r), viewed as a GL(2r) module, restricts to
GL(r) x GL(r) as a multiplicity-free sum of pairs (S_mu, S_mu dual)
with mu running over the r x m box.  Littlewood-Richardson numbers
against a rectangle collapse to a delta at the box complement, which
is what makes the sum multiplicity free.

    python3 demos/02_rectangular_branching.py
"""

from theta_factor import (
    decompose_rectangular,
    enumerate_in_box,
    rectangular_lr_is_delta,
    verify_branching_identity,
)


def main():
    r, m = 2, 2
    table = decompose_rectangular(r, m)
    print(f"branching table for the {m}^{r} rectangle:")
    for mu, left, right in table.rows:
        print(f"  mu={mu.padded(r)}  dim pair = {left} x {right}")
    lhs, rhs, equal = verify_branching_identity(r, m)
    print(f"dimension check: {lhs} = {' + '.join(str(l * rr) for _, l, rr in table.rows)}"
          f" = {rhs}  ({'ok' if equal else 'MISMATCH'})")
    print()

    # The delta property behind multiplicity freeness: against the full
    # rectangle, only the box complement survives.
    print(f"LR against the rectangle ({m}^{r}):")
    for mu in enumerate_in_box(r, m):
        comp, mult = rectangular_lr_is_delta(mu, r, m)
        print(f"  mu={mu.padded(r)} -> complement {comp.padded(r)} with coefficient {mult}")


if __name__ == "__main__":
    main()
