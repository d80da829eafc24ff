"""Boundary data, balance, and the genus-reduction recursion."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from theta_factor import (
    BoxViolationError,
    FlagType,
    LeafOracleError,
    ModuliSpec,
    Partition,
    WeightVector,
    aggregate_dimension,
    box_count,
    build_tree,
    check_star,
    degenerate,
    mu_indices,
    mu_to_boundary,
    verify_boundary_balance,
)


def balanced_spec(genus=2, rank=2, level=3, ell=3):
    # with no points the balance condition forces k*d = r*ell - k*r*(1-g)
    product = rank * ell + level * rank * (genus - 1)
    assert product % level == 0
    return ModuliSpec(
        genus=genus, rank=rank, degree=product // level,
        level=level, ell=ell, points=(),
    )


class TestMuIndices:
    def test_counts(self):
        assert len(list(mu_indices(2, 3))) == box_count(2, 2) == 6
        assert len(list(mu_indices(1, 2))) == 2

    def test_inclusive_bound(self):
        assert len(list(mu_indices(2, 3, inclusive=True))) == box_count(2, 3) == 10

    def test_all_fit_the_box(self):
        for mu in mu_indices(3, 4):
            assert mu.fits_in_box(3, 3)


class TestMuToBoundary:
    def test_worked_example(self):
        data = mu_to_boundary(Partition((3, 3, 1)), 4, 4)
        assert data.l == 2
        p1, p2 = data.point1, data.point2
        assert p1.label == "x1" and p2.label == "x2"
        assert tuple(p1.flag) == (2, 1, 1)
        assert tuple(p1.weights) == (0, 2, 3)
        assert p1.alpha == 0
        assert tuple(p2.flag) == (1, 1, 2)
        assert p2.flag.partial_sums()[:2] == (1, 2)
        assert tuple(p2.weights.differences()) == (1, 2)
        assert p2.alpha == 4 - 3
        assert tuple(data.point2_weights_direct) == tuple(p1.weights)

    def test_single_jump(self):
        data = mu_to_boundary(Partition((1,)), 2, 2)
        assert data.l == 1
        assert tuple(data.point1.flag) == (1, 1)
        assert tuple(data.point1.weights) == (0, 1)
        assert data.point1.alpha == 0
        assert tuple(data.point2.flag) == (1, 1)
        assert data.point2.alpha == 1

    def test_constant_mu(self):
        data = mu_to_boundary(Partition((2, 2, 2)), 3, 5)
        assert data.l == 0
        assert tuple(data.point1.flag) == (3,)
        assert tuple(data.point2.flag) == (3,)
        assert data.point1.alpha == 2
        assert data.point2.alpha == 5 - 2
        assert tuple(data.point1.weights) == (2,)

    def test_custom_labels(self):
        data = mu_to_boundary(Partition(()), 2, 2, labels=("a", "b"))
        assert data.point1.label == "a" and data.point2.label == "b"

    def test_rejects_mu_outside_box(self):
        with pytest.raises(BoxViolationError):
            mu_to_boundary(Partition((3,)), 2, 3)

    @given(st.data())
    @settings(max_examples=80, deadline=None)
    def test_reversal_relations(self, data):
        r = data.draw(st.integers(min_value=1, max_value=5))
        k = data.draw(st.integers(min_value=1, max_value=5))
        rows = data.draw(st.lists(st.integers(min_value=0, max_value=k - 1), max_size=r))
        mu = Partition(sorted(rows, reverse=True))
        bdry = mu_to_boundary(mu, r, k)
        s1 = bdry.point1.flag.partial_sums()[:-1]
        s2 = bdry.point2.flag.partial_sums()[:-1]
        d1 = bdry.point1.weights.differences()
        d2 = bdry.point2.weights.differences()
        assert tuple(s2) == tuple(r - s for s in reversed(s1))
        assert tuple(d2) == tuple(reversed(d1))
        padded = mu.padded(r)
        assert bdry.point1.alpha == padded[-1]
        assert bdry.point2.alpha == k - padded[0]


class TestBoundaryBalance:
    def test_worked_examples(self):
        assert verify_boundary_balance(Partition((3, 3, 1)), 4, 4) == (16, True)
        assert verify_boundary_balance(Partition((1,)), 2, 2) == (4, True)

    def test_constant_mu(self):
        assert verify_boundary_balance(Partition((2, 2)), 2, 7) == (14, True)

    def test_exhaustive_small(self):
        for r in range(1, 5):
            for k in range(1, 5):
                for mu in mu_indices(r, k):
                    contribution, holds = verify_boundary_balance(mu, r, k)
                    assert holds and contribution == k * r, (mu, r, k)


class TestDegenerate:
    def test_child_count_rank_one(self):
        spec = balanced_spec(genus=2, rank=1, level=2, ell=2)
        assert len(degenerate(spec)) == 2

    def test_child_count_rank_two(self):
        spec = balanced_spec(genus=2, rank=2, level=2, ell=2)
        assert len(degenerate(spec)) == 3

    def test_children_satisfy_star(self):
        spec = balanced_spec()
        for mu, child in degenerate(spec):
            lhs, rhs, holds = check_star(child)
            assert holds, (mu, lhs, rhs)
            assert child.genus == spec.genus - 1
            assert child.rank == spec.rank
            assert child.degree == spec.degree
            assert child.level == spec.level
            assert child.ell == spec.ell
            assert len(child.points) == len(spec.points) + 2

    def test_children_indexed_in_enumeration_order(self):
        spec = balanced_spec()
        mus = [mu for mu, _ in degenerate(spec)]
        assert mus == list(mu_indices(spec.rank, spec.level))

    def test_fresh_labels_nest(self):
        spec = balanced_spec()
        _, child = degenerate(spec)[0]
        assert {pt.label for pt in child.points} == {"x1@1", "x2@1"}
        _, grandchild = degenerate(child)[0]
        assert {pt.label for pt in grandchild.points} == {"x1@1", "x2@1", "x1@2", "x2@2"}

    def test_rejects_genus_zero(self):
        spec = ModuliSpec(genus=0, rank=1, degree=1, level=1, ell=2, points=())
        assert check_star(spec)[2]
        with pytest.raises(ValueError):
            degenerate(spec)

    def test_rejects_unbalanced_spec(self):
        spec = ModuliSpec(genus=2, rank=2, degree=5, level=3, ell=3, points=())
        assert not check_star(spec)[2]
        with pytest.raises(ValueError):
            degenerate(spec)


class TestBuildTree:
    def test_depth_zero(self):
        spec = balanced_spec()
        tree = build_tree(spec, 0)
        assert tree.is_leaf()
        assert tree.node_count() == 1 and tree.leaf_count() == 1

    def test_rank_one_level_two(self):
        spec = balanced_spec(genus=2, rank=1, level=2, ell=2)
        tree = build_tree(spec, 2)
        assert tree.node_count() == 1 + 2 + 4
        assert tree.leaf_count() == 4

    def test_genus_one_rank_two(self):
        spec = balanced_spec(genus=1, rank=2, level=2, ell=2)
        tree = build_tree(spec, 1)
        assert tree.node_count() == 4
        assert tree.leaf_count() == 3

    def test_recursion_stops_at_genus_zero(self):
        spec = balanced_spec(genus=1, rank=1, level=2, ell=2)
        tree = build_tree(spec, 10)
        assert all(node.spec.genus == 0 for _, node in tree.leaves())
        assert tree.node_count() == 3

    def test_every_node_satisfies_star(self):
        spec = balanced_spec()
        tree = build_tree(spec, 2)
        for _, _, node in tree.walk():
            assert check_star(node.spec)[2]

    def test_determinism(self):
        spec = balanced_spec()
        assert build_tree(spec, 2) == build_tree(spec, 2)

    def test_walk_paths(self):
        spec = balanced_spec(genus=2, rank=1, level=2, ell=2)
        tree = build_tree(spec, 1)
        paths = [(depth, tuple(tuple(mu) for mu in path)) for depth, path, _ in tree.walk()]
        assert paths == [(0, ()), (1, ((),)), (1, ((1,),))]

    def test_json_shape(self):
        spec = balanced_spec(genus=1, rank=2, level=2, ell=2)
        data = build_tree(spec, 1).to_json_dict()
        assert data["spec"]["genus"] == 1
        assert [edge["mu"] for edge in data["children"]] == [[0, 0], [1, 0], [1, 1]]
        assert all(edge["node"]["children"] == [] for edge in data["children"])

    def test_validation(self):
        with pytest.raises(ValueError):
            build_tree(balanced_spec(), -1)


class TestAggregate:
    def test_constant_oracle_counts_leaves(self):
        spec = balanced_spec(genus=2, rank=1, level=2, ell=2)
        tree = build_tree(spec, 2)
        assert aggregate_dimension(tree, lambda s: 1) == 4
        assert aggregate_dimension(tree, lambda s: 0) == 0

    def test_depth_one_sum(self):
        spec = balanced_spec(genus=1, rank=2, level=2, ell=2)
        tree = build_tree(spec, 1)
        values = iter([5, 7, 11])
        table = {node.spec.sha256(): next(values) for _, node in tree.leaves()}
        assert aggregate_dimension(tree, lambda s: table[s.sha256()]) == 23

    def test_doubling_linearity(self):
        spec = balanced_spec()
        tree = build_tree(spec, 2)
        base = aggregate_dimension(tree, lambda s: 3)
        doubled = aggregate_dimension(tree, lambda s: 6)
        assert doubled == 2 * base

    def test_oracle_failure_carries_spec(self):
        spec = balanced_spec(genus=1, rank=1, level=2, ell=2)
        tree = build_tree(spec, 1)

        def broken(s):
            raise KeyError("missing")

        with pytest.raises(LeafOracleError) as info:
            aggregate_dimension(tree, broken)
        assert info.value.spec.genus == 0

    def test_oracle_must_return_integer(self):
        spec = balanced_spec(genus=1, rank=1, level=2, ell=2)
        tree = build_tree(spec, 1)
        with pytest.raises(LeafOracleError):
            aggregate_dimension(tree, lambda s: 1.5)
        with pytest.raises(LeafOracleError):
            aggregate_dimension(tree, lambda s: True)
