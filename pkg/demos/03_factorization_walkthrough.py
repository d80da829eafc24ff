"""One full degeneration step, then a recursion tree with an oracle.

A balanced specification (the integer condition tying flags, weights,
alphas, ell and the level) degenerates into one child per partition mu
in the r x (k-1) box.  Each mu induces parabolic data at two new marked
points whose combined contribution is exactly k*r, which is why every
child is balanced again with genus dropped by one.

    python3 demos/03_factorization_walkthrough.py
"""

from theta_factor import (
    ModuliSpec,
    build_tree,
    aggregate_dimension,
    check_star,
    degenerate,
    mu_to_boundary,
    verify_boundary_balance,
)


def main():
    # rank 2, level 3: the mu indices live in the 2x2 box
    spec = ModuliSpec(genus=2, rank=2, degree=4, level=3, ell=3, points=())
    lhs, rhs, holds = check_star(spec)
    print(f"root spec: genus={spec.genus} rank={spec.rank} degree={spec.degree} "
          f"level={spec.level} ell={spec.ell}")
    print(f"balance condition: {lhs} = {rhs} -> {holds}")
    print()

    print("boundary data per mu, with its balance contribution:")
    for mu, child in degenerate(spec):
        data = mu_to_boundary(mu, spec.rank, spec.level)
        contribution, ok = verify_boundary_balance(mu, spec.rank, spec.level)
        p1, p2 = data.point1, data.point2
        print(f"  mu={mu.padded(spec.rank)}: "
              f"x1 flag {tuple(p1.flag)} weights {tuple(p1.weights)} alpha {p1.alpha} | "
              f"x2 flag {tuple(p2.flag)} weights {tuple(p2.weights)} alpha {p2.alpha} | "
              f"contribution {contribution} ({'ok' if ok else 'BAD'}), "
              f"child genus {child.genus}")
    print()

    # Recurse to genus 0 and aggregate a constant leaf value.  The tree
    # shape only depends on (genus, rank, level), never on the oracle.
    tree = build_tree(spec, spec.genus)
    print(f"full tree: {tree.node_count()} nodes, {tree.leaf_count()} leaves")
    total = aggregate_dimension(tree, lambda leaf: 1)
    print(f"aggregate with the constant oracle 1: {total} (= leaf count)")
    doubled = aggregate_dimension(tree, lambda leaf: 2)
    print(f"aggregate with the constant oracle 2: {doubled} (= doubled)")


if __name__ == "__main__":
    main()
