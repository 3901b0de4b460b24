"""Tests for operator families, relation checks, and composition series."""

import itertools
import random

import pytest

from tbhl.exact_algebra import GaussianRational, SparseMatrix
from tbhl.hecke_engine import (
    CompositionSeries,
    LabeledBasis,
    OperatorFamily,
    alternating_product,
    basis_from_elements,
    build_from_labeled_basis,
    characteristic_by_composition_series,
    characteristic_by_descent_sum,
    family_from_elements,
    family_from_matrices,
    qx,
    verify_relations,
)
from tbhl.qsym_typeb import QSymElement
from tbhl.signed_permutations import (
    CoxeterDescriptor,
    SignedPermutation,
    all_elements,
    identity,
    left_descents,
    simple_reflection,
    weak_order_interval,
)


def mat(rows):
    entries = {
        (r, c): GaussianRational.integer(value)
        for r, row in enumerate(rows)
        for c, value in enumerate(row)
        if value
    }
    return SparseMatrix.from_entries(len(rows), len(rows[0]), entries)


def descent_classes(n, kind="B"):
    classes = {}
    for x in all_elements(n, kind):
        classes.setdefault(left_descents(x, kind), []).append(x)
    return classes


class TestBuildFromLabeledBasis:
    def test_rank_one_group_family_pinned(self):
        fam = family_from_elements(all_elements(1))
        assert fam.matrices[0] == mat([[0, 0], [1, -1]])
        assert fam.basis.elements == (
            SignedPermutation((1,)),
            SignedPermutation((-1,)),
        )

    def test_singleton_full_descent_label(self):
        basis = LabeledBasis(("x",), {"x": frozenset({0})}, {}, rank=1)
        fam = build_from_labeled_basis(basis)
        assert fam.matrices[0] == mat([[-1]])

    def test_transition_out_of_basis_gives_zero_column(self):
        basis = LabeledBasis(
            ("a",), {"a": frozenset()}, {(0, "a"): "elsewhere"}, rank=1
        )
        fam = build_from_labeled_basis(basis)
        assert fam.matrices[0] == mat([[0]])

    def test_validation(self):
        with pytest.raises(ValueError):
            LabeledBasis(("a", "a"), {"a": frozenset()}, {}, rank=1)
        with pytest.raises(ValueError):
            LabeledBasis(("a",), {}, {}, rank=1)
        with pytest.raises(ValueError):
            LabeledBasis(("a",), {"a": frozenset({5})}, {}, rank=1)
        with pytest.raises(ValueError):
            LabeledBasis(
                ("a",), {"a": frozenset({0})}, {(0, "a"): "a"}, rank=1
            )


class TestAlternatingProduct:
    def test_expansions(self):
        a = mat([[0, 1], [0, 0]])
        b = mat([[0, 0], [1, 0]])
        assert alternating_product(a, b, 1) == b
        assert alternating_product(a, b, 2) == a @ b
        assert alternating_product(a, b, 3) == b @ a @ b
        assert alternating_product(a, b, 4) == a @ b @ a @ b


class TestVerifyRelations:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_full_group_families(self, n):
        assert verify_relations(family_from_elements(all_elements(n))) == {
            "relations": "ok"
        }

    def test_type_a_family(self):
        fam = family_from_elements(all_elements(3, "A"), kind="A")
        assert verify_relations(fam) == {"relations": "ok"}

    @pytest.mark.parametrize("n", [2, 3])
    def test_descent_class_subsets(self, n):
        rng = random.Random(7)
        for subset, members in descent_classes(n).items():
            pool = [members] if n == 2 else []
            for _ in range(3):
                size = rng.randint(1, len(members))
                pool.append(rng.sample(members, size))
            for chosen in pool:
                fam = family_from_elements(chosen)
                assert verify_relations(fam) == {"relations": "ok"}
                for i in fam.descriptor.indices:
                    expected = (
                        mat([[-1]]) if i in subset
                        else SparseMatrix.zero(len(chosen), len(chosen))
                    )
                    if i in subset:
                        expected = SparseMatrix.identity(len(chosen)).scale(
                            GaussianRational.integer(-1)
                        )
                    assert fam.matrices[i] == expected

    def test_quadratic_fault_reported(self):
        fam = family_from_elements(all_elements(2))
        pos = fam.basis.position
        e = identity(2)
        bad = dict(fam.matrices[0].entries)
        del bad[(pos[simple_reflection(0, 2)], pos[e])]
        bad[(pos[simple_reflection(1, 2)], pos[e])] = GaussianRational.integer(1)
        fam.matrices[0] = SparseMatrix.from_entries(8, 8, bad)
        assert verify_relations(fam) == {"failed": {"kind": "quadratic", "i": 0}}

    def test_braid_fault_reported(self):
        # both matrices satisfy the quadratic relation but not the braid one
        descriptor = CoxeterDescriptor("A", 2)
        fam = family_from_matrices(
            ("p", "q"),
            {1: mat([[-1, 1], [0, 0]]), 2: mat([[0, 0], [1, -1]])},
            descriptor,
        )
        assert verify_relations(fam) == {"failed": {"kind": "braid", "i": 1, "j": 2}}


class TestDescentSumCharacteristic:
    def test_pinned_values(self):
        assert characteristic_by_descent_sum([identity(2)]) == (
            QSymElement.fundamental(set(), 2)
        )
        assert characteristic_by_descent_sum(all_elements(1)) == QSymElement.make(
            1, "B", {frozenset(): 1, frozenset({0}): 1}
        )

    def test_left_unimodal_inverse_interval_rank_two(self):
        members = [
            SignedPermutation(w)
            for w in [(1, 2), (-1, 2), (-2, 1), (-2, -1)]
        ]
        assert characteristic_by_descent_sum(members) == QSymElement.make(
            2,
            "B",
            {frozenset(): 1, frozenset({0}): 2, frozenset({1}): 1},
        )


class TestQx:
    def test_identity(self):
        assert qx([identity(3)]) == QSymElement.fundamental(set(), 3)

    def test_matches_descent_sum_of_inverses(self):
        rng = random.Random(11)
        group = all_elements(3)
        for _ in range(20):
            chosen = rng.sample(group, rng.randint(1, 10))
            inverses = [x.inverse() for x in chosen]
            assert qx(chosen) == characteristic_by_descent_sum(inverses)

    def test_empty_descent_class(self):
        assert qx([identity(2)]) == QSymElement.fundamental(set(), 2)


class TestCompositionSeries:
    def test_rank_one_group(self):
        char, series = characteristic_by_composition_series(
            family_from_elements(all_elements(1))
        )
        assert char == QSymElement.make(
            1, "B", {frozenset(): 1, frozenset({0}): 1}
        )
        assert series.factors == (frozenset({0}), frozenset())
        assert series.order == (
            SignedPermutation((-1,)),
            SignedPermutation((1,)),
        )
        assert series.to_json() == {"factors": ["{0}", "{}"]}

    def test_singleton_with_two_descents(self):
        basis = LabeledBasis(("y",), {"y": frozenset({0, 2})}, {}, rank=3)
        char, series = characteristic_by_composition_series(
            build_from_labeled_basis(basis)
        )
        assert char == QSymElement.fundamental({0, 2}, 3)
        assert series.factors == (frozenset({0, 2}),)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_agrees_with_descent_sum_on_full_group(self, n):
        fam = family_from_elements(all_elements(n))
        char, _ = characteristic_by_composition_series(fam)
        assert char == characteristic_by_descent_sum(all_elements(n))

    def test_agrees_on_intervals(self):
        group = all_elements(2)
        for x in group:
            for z in group:
                members = weak_order_interval(x, z)
                if not members:
                    continue
                fam = family_from_elements(members)
                char, _ = characteristic_by_composition_series(fam)
                assert char == characteristic_by_descent_sum(members)

    def test_factors_invariant_under_tie_breaks(self):
        fam = family_from_elements(all_elements(2))
        char_a, series_a = characteristic_by_composition_series(fam)
        pos = fam.basis.position
        char_b, series_b = characteristic_by_composition_series(
            fam, sort_key=lambda label: -pos[label]
        )
        assert char_a == char_b
        assert sorted(map(sorted, series_a.factors)) == sorted(
            map(sorted, series_b.factors)
        )
        assert series_a.order != series_b.order

    def test_cyclic_support_graph_rejected(self):
        descriptor = CoxeterDescriptor("B", 1)
        fam = family_from_matrices(
            ("a", "b"), {0: mat([[0, 1], [1, 0]])}, descriptor
        )
        with pytest.raises(ValueError, match="cyclic"):
            characteristic_by_composition_series(fam)

    def test_bad_diagonal_rejected(self):
        descriptor = CoxeterDescriptor("B", 1)
        fam = family_from_matrices(
            ("a", "b"), {0: mat([[1, 0], [0, 0]])}, descriptor
        )
        with pytest.raises(ValueError, match="neither"):
            characteristic_by_composition_series(fam)

    def test_type_a_degree(self):
        fam = family_from_elements(all_elements(3, "A"), kind="A")
        char, _ = characteristic_by_composition_series(fam)
        assert char.n == 3
        assert char.family == "A"
        assert char == characteristic_by_descent_sum(all_elements(3, "A"), "A")
