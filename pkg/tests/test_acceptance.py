"""Acceptance suite: the nine headline checks, each at exact equality.

The conftest hook prints one ``acceptance criterion N: PASS/FAIL`` line
per test in the terminal summary of every ``pytest -v`` run, using the
one-line summaries below, plus any notes recorded in ``NOTES``.
"""

import itertools
import random

from tbhl.cli_verify import clifford_audit_cases
from tbhl.domino_tableaux import (
    brute_force_sdt,
    enumerate_sdt,
    g_lambda,
    partitions_of,
    sdt_operator_family,
)
from tbhl.hecke_clifford import (
    build_MI,
    build_intertwiner,
    centralizer_check,
    centralizer_valleys,
    cover_lower_targets,
    induce_and_restrict,
    iso_predicate,
    k_factor,
    k_set,
    res_MI_formula,
    restriction_characteristic,
    subsets_of,
    verify_hcl_relations,
)
from tbhl.exact_algebra import GaussianRational
from tbhl.hecke_engine import (
    characteristic_by_composition_series,
    characteristic_by_descent_sum,
    family_from_elements,
    verify_relations,
)
from tbhl.qsym_typeb import (
    QSymElement,
    fb_truncations_linearly_independent,
    peak_data,
)
from tbhl.shifted_domino import (
    conjugate_family,
    enumerate_shifted,
    find_semistandard_with_weight,
    find_standard_with_descents,
    h_lambda,
    two_quotient,
    verify_peak_theorem,
    verify_stand_theorem,
)
from tbhl.signed_permutations import (
    all_elements,
    ascent_compatibility_report,
    right_inversions,
)
from tbhl.special_families import (
    build_family,
    invert_family,
    smallest_non_convex_arc_degree,
    unimodal_interval,
)

WITNESS_BUDGET_SECONDS = 60.0

CRITERION_SUMMARIES = {
    1: "relation suites and characteristics for all special families",
    2: "arc families: compatibility, count, non-convexity witness",
    3: "inverted unimodal families equal their weak-order intervals",
    4: "domino tableaux: counts, modules, pinned values",
    5: "shifted tableaux: quotient, fiber and marking sums, witnesses",
    6: "Clifford modules: relations, restriction, convention audit",
    7: "isomorphism predicate, intertwiners, commutant bases",
    8: "induction pipeline reproduces the shape generating functions",
    9: "valley/peak counting identity and truncation independence",
}

NOTES: list[str] = []


def _index_sets(n):
    for size in range(n + 1):
        yield from (frozenset(s) for s in itertools.combinations(range(n), size))


def _family_catalog(n):
    for index_set in _index_sets(n):
        fam = build_family("dclass", (index_set,), n)
        yield fam
        yield invert_family(fam)
    for i in range(1, n + 1):
        fam = build_family("luni", (i,), n)
        yield fam
        yield invert_family(fam)
    yield build_family("arc", (), n)


def _valid_shapes(max_total):
    for total in range(2, max_total + 1, 2):
        for shape in partitions_of(total):
            if two_quotient(shape).valid:
                yield shape


def _module_checks(members) -> None:
    ops = family_from_elements(members)
    assert verify_relations(ops) == {"relations": "ok"}
    char, _ = characteristic_by_composition_series(ops)
    assert char == characteristic_by_descent_sum(members)


def test_criterion_1_relation_suites():
    for n in range(1, 4):
        for fam in _family_catalog(n):
            assert fam.members, fam.name
            _module_checks(fam.members)
    rng = random.Random(0)
    group = all_elements(3)
    inversions = {z: right_inversions(z) for z in group}
    for _ in range(200):
        top = rng.choice(group)
        lower = [z for z in group if inversions[z] <= inversions[top]]
        bottom = rng.choice(lower)
        members = tuple(
            z
            for z in group
            if inversions[bottom] <= inversions[z] <= inversions[top]
        )
        assert ascent_compatibility_report(members).compatible
        _module_checks(members)


def test_criterion_2_arc_families():
    for n in (2, 3, 4):
        members = build_family("arc", (), n).members
        assert ascent_compatibility_report(members).compatible, n
    assert len(build_family("arc", (), 3)) == 24
    found = smallest_non_convex_arc_degree(4)
    assert found is not None
    degree, (low, high, gap) = found
    assert degree == 3
    fam = set(build_family("arc", (), degree).members)
    assert low in fam and high in fam and gap not in fam
    assert right_inversions(low) <= right_inversions(gap) <= right_inversions(
        high
    )


def test_criterion_3_unimodal_intervals():
    for n in range(1, 5):
        for i in range(1, n + 1):
            family = set(invert_family(build_family("luni", (i,), n)).members)
            interval = set(unimodal_interval(i, n, "corrected"))
            assert family == interval, (n, i)


def test_criterion_4_domino_tableaux():
    for n in range(1, 5):
        for shape in partitions_of(2 * n):
            fast = enumerate_sdt(shape)
            slow = brute_force_sdt(shape)
            assert set(fast) == set(slow) and len(fast) == len(slow), shape
            ops = sdt_operator_family(shape)
            assert verify_relations(ops) == {"relations": "ok"}, shape
            char, _ = characteristic_by_composition_series(ops)
            assert char == g_lambda(shape), shape
    expected = QSymElement.fundamental({0}, 2) + QSymElement.fundamental(
        {1}, 2
    )
    assert g_lambda((2, 2)) == expected
    descent_sets = {t.descent_set() for t in enumerate_sdt((5, 4, 4, 1))}
    assert frozenset({0, 2, 5, 6}) in descent_sets


def test_criterion_5_shifted_tableaux():
    quotient = two_quotient((7, 7, 6, 5, 1))
    assert (quotient.mu, quotient.nu) == ((3, 3, 3), (4,))
    for shape in _valid_shapes(8):
        n = h_lambda(shape, "peak").n
        for marked in enumerate_shifted(shape, "marked"):
            assert verify_stand_theorem(shape, marked, n + 1), shape
    for shape in _valid_shapes(10):
        for standard in enumerate_shifted(shape, "standard"):
            assert verify_peak_theorem(shape, standard, "literal"), shape
    sensitive = []
    for shape in _valid_shapes(10):
        n = h_lambda(shape, "peak").n
        literal = h_lambda(shape, "peak", variant="literal")
        assert literal.to_monomials(n + 1) == h_lambda(
            shape, "monomial", nvars=n + 1
        ), shape
        if literal != h_lambda(shape, "peak", variant="complemented"):
            sensitive.append(shape)
    NOTES.append(
        "criterion 5: variant-sensitive shapes up to size 10: "
        + (str(sensitive) if sensitive else "none")
    )
    status, _found = find_semistandard_with_weight(
        (7, 7, 6, 5, 1), (1, 4, 0, 1, 2, 2), budget_seconds=WITNESS_BUDGET_SECONDS
    )
    if status == "timeout":
        NOTES.append("criterion 5: weight-witness search skipped (budget)")
    else:
        assert status == "found"
    status, _found = find_standard_with_descents(
        (7, 7, 6, 5, 1), {1, 5, 7, 8}, budget_seconds=WITNESS_BUDGET_SECONDS
    )
    if status == "timeout":
        NOTES.append("criterion 5: descents-witness search skipped (budget)")
    else:
        assert status == "found"


def test_criterion_6_clifford_modules():
    for n in range(1, 5):
        for index_set in _index_sets(n):
            module = build_MI(index_set, n)
            assert verify_hcl_relations(module) == {"relations": "ok"}
            direct, _ = restriction_characteristic(module)
            assert direct == res_MI_formula(index_set, n, "proof_penultimate")
            complement = frozenset(range(n)) - index_set
            valleys = peak_data(complement, n).valley
            label = frozenset(index_set)
            for subset in subsets_of(n):
                for valley in valleys:
                    assert k_set(index_set, subset, n) == k_set(
                        index_set, frozenset(subset) | {valley}, n
                    )
                col = module.position[(subset, label)]
                for i in range(n):
                    diagonal = module.pi_matrices[i].get(col, col)
                    assert diagonal == GaussianRational.integer(
                        k_factor(i, index_set, subset)
                    )
                    allowed = cover_lower_targets(i, index_set, subset)
                    for row in module.pi_matrices[i].column(col):
                        if row != col:
                            assert module.basis[row][0] in allowed
    direct, _ = restriction_characteristic(build_MI(frozenset(), 1))
    assert direct == QSymElement.fundamental(frozenset(), 1).scale(2)
    literal = res_MI_formula(frozenset(), 1, "theorem_literal")
    assert literal == QSymElement.fundamental({0}, 1).scale(2)
    assert direct != literal
    cases = clifford_audit_cases(4)
    assert all(case.status in ("pass", "variant-dependent") for case in cases)
    base_case = next(
        case
        for case in cases
        if case.params
        == {"degree": 1, "indices": "{}", "form": "theorem_literal"}
    )
    assert base_case.status == "variant-dependent"


def test_criterion_7_morphisms():
    for n in range(1, 5):
        chars = {
            index_set: restriction_characteristic(build_MI(index_set, n))[0]
            for index_set in _index_sets(n)
        }
        for first in chars:
            for second in chars:
                assert iso_predicate(first, second, n) == (
                    chars[first] == chars[second]
                )
    built = 0
    for n in range(1, 4):
        for index_set in _index_sets(n):
            for k in range(1, n):
                if k in index_set or not iso_predicate(
                    index_set, index_set | {k}, n
                ):
                    continue
                result = build_intertwiner(index_set, k, n)
                built += 1
                assert result.commutes and result.invertible
        for index_set in _index_sets(n):
            valleys = sorted(centralizer_valleys(index_set, n))
            expected = sorted(
                (
                    tuple(sorted(chosen))
                    for size in range(len(valleys) + 1)
                    for chosen in itertools.combinations(valleys, size)
                ),
                key=lambda s: (len(s), s),
            )
            found = sorted(
                centralizer_check(index_set, n), key=lambda s: (len(s), s)
            )
            assert found == expected, (n, index_set)
    assert built > 0


def test_criterion_8_induction_pipeline():
    for shape in _valid_shapes(8):
        direct, report = induce_and_restrict(conjugate_family(shape))
        assert report["matches"]["proof_penultimate"], shape
        assert direct == h_lambda(shape, "peak", variant="literal"), shape
    for n in range(1, 4):
        for index_set in _index_sets(n):
            fam = invert_family(build_family("dclass", (index_set,), n))
            _induction_family_check(fam.members)
        for i in range(1, n + 1):
            fam = invert_family(build_family("luni", (i,), n))
            _induction_family_check(fam.members)
        _induction_family_check(build_family("arc", (), n).members)


def _induction_family_check(members) -> None:
    assert ascent_compatibility_report(members).compatible
    _direct, report = induce_and_restrict(family_from_elements(members))
    assert report["matches"]["proof_penultimate"]


def test_criterion_9_foundations():
    for n in range(1, 9):
        for index_set in _index_sets(n):
            data = peak_data(index_set, n)
            assert len(data.valley) == len(data.peak) + data.zeta
    for n in range(1, 7):
        assert fb_truncations_linearly_independent(n, n + 1)
