"""Tests for Gram-matrix structure, bounds, predictors, optimality and sweeps."""

import json

import pytest

from analysis import (
    CLAIMS,
    CodeParams,
    ParameterRange,
    analyze_code,
    analyze_linear_code,
    gram_rank,
    griesmer_check,
    hull_dimension,
    is_lcd,
    is_self_orthogonal,
    load_optimality_table,
    optimality_lookup,
    predict_difference_code,
    predict_difference_dual,
    predict_difference_self_orthogonal,
    predict_face_gram_rank,
    predict_partition_code,
    predict_partition_dual,
    predict_partition_lcd,
    predict_simplex_dual,
    predict_union_code,
    predict_union_dual,
    predict_union_self_orthogonal,
    resolve_claim,
    singleton_check,
    verify_theorem,
)
from analysis.predictors import printed_partition_enumerator_total
from codes import LinearCode, build_code, difference_set, dual_code, partition_set, union_set
from config import Budget
from errors import ConstructionError, OptimalityTableError, RankConsistencyError
from gf2core import BitVector, rank


def face(support, m):
    return BitVector.from_support(support, m)


def diff(a, b, m=None):
    m = m or a
    return difference_set(face(range(1, a + 1), m), face(range(1, b + 1), m))


def union(a, b):
    m = a + b
    return union_set(face(range(1, a + 1), m), face(range(a + 1, m + 1), m))


# Gram structure


@pytest.mark.parametrize("a, expected", [(3, 0), (2, 2), (1, 1)])
def test_gram_rank_of_face_codes(a, expected):
    assert gram_rank(build_code(diff(a, 0))) == expected


def test_gram_rank_needs_construction_matrix():
    hamming = dual_code(build_code(diff(3, 0)))
    with pytest.raises(ConstructionError):
        gram_rank(hamming)


@pytest.mark.parametrize(
    "defining_set, expected",
    [(diff(3, 0), True), (diff(2, 0), False), (diff(2, 1), False), (diff(5, 3), True)],
)
def test_is_self_orthogonal(defining_set, expected):
    assert is_self_orthogonal(build_code(defining_set)) is expected


@pytest.mark.parametrize(
    "defining_set, expected",
    [(partition_set(4), True), (diff(3, 0), False), (partition_set(8), True)],
)
def test_is_lcd(defining_set, expected):
    assert is_lcd(build_code(defining_set)) is expected


def test_hull_dimension():
    assert hull_dimension(build_code(diff(3, 0))) == 3
    assert hull_dimension(build_code(partition_set(6))) == 0
    assert hull_dimension(build_code(diff(2, 1))) == 0


@pytest.mark.parametrize("a", range(1, 11))
def test_face_gram_rank_sweep(a):
    code = build_code(diff(a, 0))
    assert rank(code.full_matrix) == a
    assert gram_rank(code) == predict_face_gram_rank(a)


@pytest.mark.parametrize("a, b", [(a, b) for a in range(1, 9) for b in range(a)])
def test_difference_self_orthogonal_sweep(a, b):
    code = build_code(diff(a, b))
    assert is_self_orthogonal(code) == predict_difference_self_orthogonal(a, b)


@pytest.mark.parametrize("a, b", [(a, b) for a in range(2, 8) for b in range(1, a)])
def test_union_self_orthogonal_sweep(a, b):
    code = build_code(union(a, b))
    assert is_self_orthogonal(code) == predict_union_self_orthogonal(a, b)


@pytest.mark.parametrize("m", range(2, 17, 2))
def test_partition_codes_are_lcd(m):
    code = build_code(partition_set(m))
    assert predict_partition_lcd(m)
    assert is_lcd(code)
    assert gram_rank(code) == m
    assert hull_dimension(code) == 0
    assert not is_self_orthogonal(code)


# Bounds


@pytest.mark.parametrize(
    "params, expected",
    [((7, 3, 4), (7, True)), ((24, 5, 12), (24, True)), ((5, 1, 3), (3, False)), ((3, 1, 3), (3, True))],
)
def test_griesmer_check(params, expected):
    assert griesmer_check(*params) == expected


def test_griesmer_violation_and_domain():
    with pytest.raises(RankConsistencyError):
        griesmer_check(6, 3, 4)
    with pytest.raises(ConstructionError):
        griesmer_check(5, 0, 2)


def test_singleton_check():
    assert singleton_check(7, 4, 3) == (4, False)
    assert singleton_check(3, 1, 3) == (3, True)
    with pytest.raises(RankConsistencyError):
        singleton_check(4, 3, 3)


@pytest.mark.parametrize("a, b", [(a, b) for a in range(1, 9) for b in range(a)])
def test_difference_codes_meet_griesmer(a, b):
    params, _ = predict_difference_code(a, b)
    assert griesmer_check(*params) == (params.n, True)


# Predictors


@pytest.mark.parametrize(
    "a, b, params, terms",
    [
        (3, 0, (7, 3, 4), {0: 1, 4: 7}),
        (5, 3, (24, 5, 12), {0: 1, 12: 28, 16: 3}),
        (5, 4, (16, 5, 8), {0: 1, 8: 30, 16: 1}),
    ],
)
def test_predict_difference_code(a, b, params, terms):
    predicted, distribution = predict_difference_code(a, b)
    assert predicted == CodeParams(*params)
    assert distribution.nonzero_terms() == terms


def test_predict_difference_code_domain():
    with pytest.raises(ConstructionError):
        predict_difference_code(3, 3)


@pytest.mark.parametrize(
    "a, b, expected", [(5, 3, (24, 19, 3)), (5, 4, (16, 11, 4)), (3, 2, (4, 1, 4))]
)
def test_predict_difference_dual(a, b, expected):
    assert predict_difference_dual(a, b) == expected


@pytest.mark.parametrize("a, b", [(2, 1), (4, 0)])
def test_predict_difference_dual_domain(a, b):
    with pytest.raises(ConstructionError):
        predict_difference_dual(a, b)


@pytest.mark.parametrize("a, expected", [(3, (7, 4, 3)), (2, (3, 1, 3)), (4, (15, 11, 3))])
def test_predict_simplex_dual(a, expected):
    assert predict_simplex_dual(a) == expected


def test_predict_simplex_dual_domain():
    with pytest.raises(ConstructionError):
        predict_simplex_dual(1)


@pytest.mark.parametrize(
    "a, b, params, enumerator",
    [
        (3, 2, (10, 5, 2), "1 + 3z^2 + 7z^4 + 21z^6"),
        (2, 1, (4, 3, 1), "1 + 1z + 3z^2 + 3z^3"),
        (4, 3, (22, 7, 4), "1 + 7z^4 + 15z^8 + 105z^12"),
    ],
)
def test_predict_union_code(a, b, params, enumerator):
    predicted, distribution = predict_union_code(a, b)
    assert predicted == params
    assert distribution.enumerator() == enumerator


@pytest.mark.parametrize(
    "a, b, expected", [(3, 2, (10, 5, 3)), (4, 3, (22, 15, 3)), (2, 1, (4, 1, 3))]
)
def test_predict_union_dual(a, b, expected):
    assert predict_union_dual(a, b) == expected


@pytest.mark.parametrize(
    "m, params, enumerator",
    [
        (4, (6, 4, 2), "1 + 6z^2 + 9z^4"),
        (2, (3, 2, 2), "1 + 3z^2"),
        (6, (9, 6, 2), "1 + 9z^2 + 27z^4 + 27z^6"),
    ],
)
def test_predict_partition_code(m, params, enumerator):
    predicted, distribution = predict_partition_code(m)
    assert predicted == params
    assert distribution.enumerator() == enumerator
    assert distribution.total == 2**m


def test_printed_partition_enumerator_does_not_sum():
    assert printed_partition_enumerator_total(4) == 7


@pytest.mark.parametrize("m, expected", [(6, (9, 3, 3)), (4, (6, 2, 3)), (2, (3, 1, 3))])
def test_predict_partition_dual(m, expected):
    assert predict_partition_dual(m) == expected


def test_partition_predictors_reject_odd_m():
    for predictor in (predict_partition_code, predict_partition_dual, predict_partition_lcd):
        with pytest.raises(ConstructionError):
            predictor(5)


@pytest.mark.parametrize("a, b, expected", [(3, 0, True), (4, 2, False), (5, 3, True)])
def test_predict_difference_self_orthogonal(a, b, expected):
    assert predict_difference_self_orthogonal(a, b) is expected


@pytest.mark.parametrize("a, b, expected", [(4, 3, True), (3, 2, False), (5, 1, False)])
def test_predict_union_self_orthogonal(a, b, expected):
    assert predict_union_self_orthogonal(a, b) is expected


# Optimality


def test_bundled_table(table_path):
    table = load_optimality_table(table_path)
    assert len(table) == 7
    assert table.get(9, 3, "lcd").d_best == 4


@pytest.mark.parametrize(
    "params, status",
    [
        ((3, 2, 2), "LCD distance optimal"),
        ((6, 4, 2), "LCD distance optimal"),
        ((6, 2, 3), "LCD distance optimal"),
        ((9, 3, 3), "LCD almost optimal"),
        ((9, 6, 2), "LCD distance optimal"),
        ((12, 8, 2), "LCD distance optimal"),
        ((15, 10, 2), "LCD almost optimal"),
        ((100, 50, 10), "unknown"),
    ],
)
def test_optimality_lookup(params, status):
    assert optimality_lookup(*params) == status


def test_optimality_is_table_relative(caplog):
    table = load_optimality_table()
    assert optimality_lookup(6, 4, 2, table, kind="linear") == "unknown"
    assert optimality_lookup(9, 3, 1, table) == "unknown"
    with caplog.at_level("WARNING"):
        assert optimality_lookup(6, 4, 3, table) == "unknown"
    assert "beats the tabulated" in caplog.text


def test_empty_table_is_not_replaced_by_bundled(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("n,k,d_best,kind\n")
    table = load_optimality_table(path)
    assert len(table) == 0
    assert optimality_lookup(6, 4, 2, table, kind="lcd") == "unknown"
    assert analyze_code(partition_set(4), table=table).optimality == "unknown"


@pytest.mark.parametrize(
    "body",
    [
        "n,k,kind\n3,2,lcd\n",
        "n,k,d_best,kind\n3,2,2,binary\n",
        "n,k,d_best,kind\n3,x,2,lcd\n",
        "n,k,d_best,kind\n3,2,2,lcd\n3,2,2,lcd\n",
        "n,k,d_best,kind\n3,2,5,lcd\n",
    ],
)
def test_malformed_tables(tmp_path, body):
    path = tmp_path / "table.csv"
    path.write_text(body)
    with pytest.raises(OptimalityTableError):
        load_optimality_table(path)


def test_linear_rows(tmp_path):
    path = tmp_path / "table.csv"
    path.write_text("n,k,d_best,kind\n7,4,3,linear\n")
    table = load_optimality_table(path)
    assert optimality_lookup(7, 4, 3, table) == "distance optimal"
    assert optimality_lookup(7, 4, 2, table) == "almost optimal"


# Reports


def test_report_for_self_orthogonal_difference_code():
    report = analyze_code(diff(5, 3))
    assert report.params == (24, 5, 12)
    assert report.self_orthogonal
    assert not report.lcd
    assert report.gram_rank == 0
    assert report.hull_dimension == 5
    assert report.meets_griesmer and report.griesmer_sum == 24
    assert report.t_weight == 2
    assert report.dual_params == (24, 19, 3)


@pytest.mark.parametrize(
    "a, b, params, dual",
    [(3, 0, (7, 3, 4), (7, 4, 3)), (5, 4, (16, 5, 8), (16, 11, 4))],
)
def test_worked_examples(a, b, params, dual):
    report = analyze_code(diff(a, b))
    assert report.params == params
    assert report.self_orthogonal
    assert report.dual_params == dual


def test_report_for_partition_code(table_path):
    report = analyze_code(partition_set(4), table=load_optimality_table(table_path))
    assert report.params == (6, 4, 2)
    assert report.lcd
    assert report.hull_dimension == 0
    assert report.dual_params == (6, 2, 3)
    assert report.optimality == "LCD distance optimal"


def test_report_for_union_code_3_2():
    report = analyze_code(union(3, 2))
    assert report.params == (10, 5, 2)
    assert not report.self_orthogonal
    assert report.dual_params == (10, 5, 3)
    assert report.distribution.enumerator() == "1 + 3z^2 + 7z^4 + 21z^6"


def test_report_dict_is_canonical():
    first = json.dumps(analyze_code(partition_set(6)).to_dict(), sort_keys=True)
    second = json.dumps(analyze_code(partition_set(6)).to_dict(), sort_keys=True)
    assert first == second
    data = json.loads(first)
    assert data["params"] == {"n": 9, "k": 6, "d": 2}
    assert data["dual_params"] == {"n": 9, "k": 3, "d": 3}
    assert data["provenance"] == "partition"
    assert sum(data["distribution"]) == 64
    assert sum(data["dual_distribution"]) == 8


def test_report_on_dual_code():
    hamming = dual_code(build_code(diff(3, 0)))
    report = analyze_linear_code(hamming, label="hamming")
    assert report.params == (7, 4, 3)
    assert report.dual_params == (7, 3, 4)
    assert report.hull_dimension == 3
    assert not report.lcd and not report.self_orthogonal


def test_report_rejects_zero_code():
    zero = dual_code(build_code(diff(2, 1)))
    with pytest.raises(ConstructionError):
        analyze_linear_code(zero)


def test_report_falls_back_to_codeword_enumeration():
    budget = Budget(max_message_bits=4)
    report = analyze_code(diff(3, 0, m=6), budget=budget)
    assert report.params == (7, 3, 4)


@pytest.mark.parametrize(
    "defining_set",
    [diff(a, b) for a in range(1, 6) for b in range(a)]
    + [union(a, b) for a in range(2, 5) for b in range(1, a)]
    + [partition_set(m) for m in (2, 4, 6)],
    ids=lambda d: d.label,
)
def test_reports_respect_bounds_and_exclusion(defining_set):
    report = analyze_code(defining_set)
    n, k, d = report.params
    assert d <= n - k + 1
    assert report.griesmer_sum <= n
    assert report.meets_griesmer == (report.griesmer_sum == n)
    assert not (report.lcd and report.self_orthogonal)
    assert report.hull_dimension == k - report.gram_rank


# Claim sweeps


@pytest.mark.parametrize("claim", [c.claim_id for c in CLAIMS])
def test_every_claim_agrees_over_default_range(claim):
    verdicts = verify_theorem(claim)
    assert verdicts
    unexplained = [v.to_dict() for v in verdicts if not v.agrees and not v.note]
    assert not unexplained


def test_only_the_quoted_union_instance_disagrees():
    verdicts = verify_theorem("union-weights")
    assert [v.params for v in verdicts if not v.agrees] == [{"a": 3, "b": 2}]


def test_aliases_resolve():
    assert resolve_claim("3.1").claim_id == "difference-weights"
    assert resolve_claim("4.6").claim_id == "partition-lcd"
    with pytest.raises(ConstructionError):
        resolve_claim("9.9")


def test_difference_weights_range():
    verdicts = verify_theorem("3.1", ParameterRange(a_max=5))
    assert len(verdicts) == 15
    assert [tuple(v.params.values()) for v in verdicts] == sorted(
        (a, b) for a in range(1, 6) for b in range(a)
    )


def test_difference_dual_skips_degenerate_pair():
    verdicts = verify_theorem("difference-dual", ParameterRange(a_max=4))
    assert {"a": 2, "b": 1} not in [v.params for v in verdicts]
    assert {"a": 3, "b": 2} in [v.params for v in verdicts]


def test_union_example_discrepancy_is_reported():
    verdicts = verify_theorem("union-weights", ParameterRange(a_max=3))
    (example,) = [v for v in verdicts if v.params == {"a": 3, "b": 2}]
    assert not example.agrees
    assert example.predicted["example_d"] == 3
    assert example.observed["example_d"] == example.observed["d"] == 2
    assert example.predicted["d"] == 2
    assert "[10,5,3]" in example.note
    assert all(v.agrees for v in verdicts if v is not example)


def test_union_dual_includes_smallest_pair():
    verdicts = verify_theorem("union-dual", ParameterRange(a_max=2))
    assert [v.to_dict()["observed"] for v in verdicts] == [{"n": 4, "k": 1, "d": 3}]


def test_partition_notes():
    verdicts = verify_theorem("3.6", ParameterRange(m_max=4))
    assert all("printed product form" in v.note for v in verdicts)
    assert verdicts[1].observed["distribution"] == [1, 0, 6, 0, 9, 0, 0]


def test_verdicts_do_not_depend_on_worker_count():
    serial = verify_theorem("4.2", ParameterRange(a_max=5), Budget(workers=1))
    parallel = verify_theorem("4.2", ParameterRange(a_max=5), Budget(workers=4))
    assert serial == parallel


def test_linear_code_without_matrix_is_rejected_by_gram_tests():
    code = dual_code(build_code(partition_set(4)))
    assert isinstance(code, LinearCode) and code.full_matrix is None
    with pytest.raises(ConstructionError):
        is_lcd(code)
