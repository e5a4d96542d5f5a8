import dataclasses
import math
import random

import numpy as np
import pytest

from fuzzyrank.fuzzy import LinguisticScale, LinguisticTerm, make_tfn
from fuzzyrank.model import (
    Alternative,
    Criterion,
    CrispMatrix,
    EligibilityRule,
    InvalidDataset,
    Scheme,
    apply_eligibility,
    lower_to_crisp,
    orientation_vector,
    rank_descending,
    validate_dataset,
    weight_vector,
)


def importance_scale():
    def term(code, a, b, c):
        return LinguisticTerm(code, code, make_tfn(a, b, c))

    return LinguisticScale(
        "importance",
        (term("VL", 0, 0.25, 0.5), term("M", 0.25, 0.5, 0.75),
         term("H", 0.5, 0.75, 1.0), term("VH", 0.75, 1.0, 1.0)),
    )


def crisp_scheme(n=3, orientation="benefit"):
    scale = importance_scale()
    weight = scale.terms[-1]
    return Scheme(
        "crisp-only",
        tuple(
            Criterion(f"C{j + 1}", f"criterion {j + 1}", "crisp", None, orientation, weight)
            for j in range(n)
        ),
        (scale,),
    )


class TestValidateDataset:
    def test_bundled_academic_is_clean(self, academic_scheme, academic_alts):
        assert validate_dataset(academic_scheme, academic_alts) == []

    def test_bundled_nonacademic_is_clean(self, nonacademic_scheme, nonacademic_alts):
        assert validate_dataset(nonacademic_scheme, nonacademic_alts) == []

    def test_arity_mismatch(self):
        scheme = crisp_scheme(3)
        issues = validate_dataset(scheme, [Alternative("A1", (1.0, 2.0))])
        assert [i.kind for i in issues] == ["ArityMismatch"]
        assert issues[0].row == "A1"

    def test_alias_removal_surfaces_unknown_term(self, nonacademic_scheme, nonacademic_alts):
        bare = dataclasses.replace(nonacademic_scheme, aliases={})
        issues = validate_dataset(bare, nonacademic_alts)
        kinds = {i.kind for i in issues}
        assert kinds == {"UnknownTerm"}
        # the stray code sits in C9 for four known rows
        assert {i.row for i in issues} == {"MH8", "MH9", "MH10", "MH11"}
        assert {i.column for i in issues} == {"C9"}

    def test_duplicate_ids(self):
        scheme = crisp_scheme(1)
        alts = [Alternative("A1", (1.0,)), Alternative("A1", (2.0,))]
        kinds = [i.kind for i in validate_dataset(scheme, alts)]
        assert kinds == ["DuplicateId"]

    def test_kind_mismatch_text_in_crisp_column(self):
        scheme = crisp_scheme(1)
        issues = validate_dataset(scheme, [Alternative("A1", ("oops",))])
        assert [i.kind for i in issues] == ["KindMismatch"]
        assert issues[0].column == "C1"

    def test_kind_mismatch_number_in_linguistic_column(self, nonacademic_scheme):
        cells = [3.1, "S", 2.0, "G", "G", "G", "G", "G", 0.5]
        issues = validate_dataset(nonacademic_scheme, [Alternative("A1", tuple(cells))])
        assert [i.kind for i in issues] == ["KindMismatch"]
        assert issues[0].column == "C9"

    def test_non_finite_crisp_value(self):
        scheme = crisp_scheme(1)
        issues = validate_dataset(scheme, [Alternative("A1", (float("inf"),))])
        assert [i.kind for i in issues] == ["NonFinite"]

    def test_issue_reports_location_in_str(self):
        scheme = crisp_scheme(1)
        issue = validate_dataset(scheme, [Alternative("A9", ("bad",))])[0]
        assert "A9" in str(issue) and "C1" in str(issue)


class TestLowerToCrisp:
    def test_crisp_cells_copied_verbatim(self, academic_scheme, academic_alts):
        matrix = lower_to_crisp(academic_scheme, academic_alts)
        assert matrix.values[0, 0] == 3.22
        assert matrix.values[0, 2] == 7.0

    def test_linguistic_cell_defuzzified(self, nonacademic_scheme, nonacademic_alts):
        matrix = lower_to_crisp(nonacademic_scheme, nonacademic_alts)
        # MH1 C8 is VG on the quality scale
        assert matrix.values[0, 7] == pytest.approx(11 / 12, abs=1e-15)

    def test_alias_resolves_before_defuzzify(self, nonacademic_scheme, nonacademic_alts):
        matrix = lower_to_crisp(nonacademic_scheme, nonacademic_alts)
        # MH8 C9 holds the aliased code; it lowers like "G"
        assert matrix.values[7, 8] == pytest.approx(0.75, abs=1e-15)

    def test_one_by_one_identity(self):
        scheme = crisp_scheme(1)
        matrix = lower_to_crisp(scheme, [Alternative("A1", (5.0,))])
        assert matrix.values.tolist() == [[5.0]]

    def test_rejects_invalid_dataset(self):
        scheme = crisp_scheme(2)
        with pytest.raises(InvalidDataset) as exc:
            lower_to_crisp(scheme, [Alternative("A1", (1.0,))])
        assert exc.value.issues[0].kind == "ArityMismatch"

    def test_row_permutation_permutes_rows(self, nonacademic_scheme, nonacademic_alts):
        base = lower_to_crisp(nonacademic_scheme, nonacademic_alts)
        rng = random.Random(7)
        perm = list(range(len(nonacademic_alts)))
        rng.shuffle(perm)
        shuffled = [nonacademic_alts[i] for i in perm]
        permuted = lower_to_crisp(nonacademic_scheme, shuffled)
        assert permuted.alternatives == tuple(base.alternatives[i] for i in perm)
        assert np.array_equal(permuted.values, base.values[perm])

    def test_relowering_crisp_data_is_identity(self, academic_scheme, academic_alts):
        scheme = crisp_scheme(3)
        first = lower_to_crisp(academic_scheme, academic_alts)
        again = lower_to_crisp(
            scheme,
            [
                Alternative(a, tuple(row))
                for a, row in zip(first.alternatives, first.values.tolist())
            ],
        )
        assert np.array_equal(first.values, again.values)


class TestWeightVector:
    def test_academic_weights(self, academic_scheme):
        assert weight_vector(academic_scheme) == pytest.approx(
            [11 / 12, 0.75, 0.5], abs=1e-15
        )

    def test_degenerate_term_passes_through(self):
        scale = LinguisticScale(
            "importance",
            (LinguisticTerm("A", "A", make_tfn(0.2, 0.2, 0.2)),
             LinguisticTerm("B", "B", make_tfn(0.7, 0.7, 0.7))),
        )
        scheme = Scheme(
            "one",
            (Criterion("C1", "only", "crisp", None, "benefit", scale.terms[0]),),
            (scale,),
        )
        assert weight_vector(scheme) == pytest.approx([0.2], rel=1e-15)

    def test_nonacademic_first_weight(self, nonacademic_scheme):
        weights = weight_vector(nonacademic_scheme)
        assert len(weights) == 9
        assert weights[0] == pytest.approx(0.5, abs=1e-15)

    def test_all_bundled_weights_positive(self, academic_scheme, nonacademic_scheme):
        for scheme in (academic_scheme, nonacademic_scheme):
            assert all(w > 0 for w in weight_vector(scheme))

    def test_orientations_match_scheme(self, academic_scheme, nonacademic_scheme):
        assert orientation_vector(academic_scheme) == ["benefit", "cost", "cost"]
        assert orientation_vector(nonacademic_scheme) == (
            ["benefit", "cost", "cost"] + ["benefit"] * 6
        )


class TestEligibility:
    def test_bundled_rows_all_admitted(self, academic_scheme, academic_alts):
        kept, excluded = apply_eligibility(academic_scheme, academic_alts)
        assert len(kept) == 15 and excluded == []

    def test_threshold_excludes(self, academic_scheme, academic_alts):
        low = Alternative("MH99", (2.71, "S", 3.0))
        kept, excluded = apply_eligibility(academic_scheme, academic_alts + [low])
        assert excluded == ["MH99"]
        assert len(kept) == 15

    def test_boundary_is_inclusive(self, academic_scheme):
        edge = Alternative("EDGE", (3.0, "S", 3.0))
        kept, excluded = apply_eligibility(academic_scheme, [edge])
        assert kept == [edge] and excluded == []

    def test_operators(self):
        assert EligibilityRule("C1", "<=", 2.0).admits(2.0)
        assert not EligibilityRule("C1", "<=", 2.0).admits(2.1)
        assert EligibilityRule("C1", "=", 2.0).admits(2.0)
        assert not EligibilityRule("C1", "=", 2.0).admits(1.9)
        with pytest.raises(ValueError):
            EligibilityRule("C1", ">", 2.0)


class TestCrispMatrix:
    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            CrispMatrix(("A",), [[float("nan")]])

    def test_rejects_row_count_mismatch(self):
        with pytest.raises(ValueError):
            CrispMatrix(("A", "B"), [[1.0]])

    def test_values_are_read_only(self):
        matrix = CrispMatrix(("A",), [[1.0, 2.0]])
        with pytest.raises(ValueError):
            matrix.values[0, 0] = 9.0


class TestRankDescending:
    def test_simple_order(self):
        assert rank_descending([0.2, 0.9, 0.5]).tolist() == [3, 1, 2]

    def test_ties_break_by_ascending_id(self):
        ranks = rank_descending([0.5, 0.5, 0.1], ids=["B", "A", "C"])
        assert ranks.tolist() == [2, 1, 3]

    def test_is_permutation(self):
        rng = random.Random(3)
        values = [rng.random() for _ in range(20)]
        ranks = rank_descending(values)
        assert sorted(ranks.tolist()) == list(range(1, 21))


class TestSchemeInvariants:
    def test_duplicate_criterion_ids_rejected(self):
        scale = importance_scale()
        weight = scale.terms[-1]
        crit = Criterion("C1", "x", "crisp", None, "benefit", weight)
        with pytest.raises(ValueError):
            Scheme("dup", (crit, crit), (scale,))

    def test_missing_scale_reference_rejected(self):
        scale = importance_scale()
        weight = scale.terms[-1]
        crit = Criterion("C1", "x", "linguistic", "ghost", "benefit", weight)
        with pytest.raises(ValueError):
            Scheme("ghost-ref", (crit,), (scale,))

    def test_empty_criteria_rejected(self):
        with pytest.raises(ValueError):
            Scheme("empty", (), (importance_scale(),))

    def test_bad_orientation_rejected(self):
        scale = importance_scale()
        with pytest.raises(ValueError):
            Criterion("C1", "x", "crisp", None, "sideways", scale.terms[0])

    def test_centroid_of_weighted_terms(self, nonacademic_scheme):
        # VH appears four times among the nine weights
        weights = weight_vector(nonacademic_scheme)
        vh = 11 / 12
        assert sum(math.isclose(w, vh) for w in weights) == 4
