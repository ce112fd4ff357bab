import pytest

from distance.certificate import CertificateKind
from distance.policy import certify
from errors import CatalogError, ConfigError, SchemeError, UnknownTableError
from gf2.bitmatrix import BitMatrix
from schemes.cyclic import circulant, cyclic_scheme
from schemes.scheme import AssociationScheme
from search.enumerate import SearchTruncated, enumerate_codes, run_search, subset_masks
from search.records import CodeRecord, SearchConfig, rebuild_code, record_from_code
from search.reproduce import (
    ALTERNATE_ROWS,
    BOUND_ONLY,
    DISCREPANT,
    REPRODUCED,
    _find_alternate,
    check_generator_listing,
    compare_listing,
    reproduce_row,
    reproduce_table,
)
from distance.bounded import distance_bounded
from schemes.registry import label_to_spec, parse_scheme_spec
from search.tables import GENERATOR_LISTINGS, TABLES, resolve_table_id, table_rows
from stabilizer.check_matrix import build_check_matrix_from_formulas
from stabilizer.code import trailing_drop_ranks
from stabilizer.check_matrix import build_check_matrix
from stabilizer.code import select_generators


def _five_qubit_record():
    code = select_generators(build_check_matrix(cyclic_scheme(5), (1,), (2,)), 1)
    return record_from_code(code, certify(code, "oracle"), discovered_at=1)


# ============================================================================
# subset-pair search
# ============================================================================

def test_subset_masks():
    assert subset_masks(3) == [1, 2, 3, 4, 5, 6, 7]
    assert subset_masks(3, 1) == [1, 2, 4]


def test_search_finds_the_five_qubit_code():
    report = run_search(SearchConfig("cyclic:5"))
    assert report.pairs_total == 49
    assert report.pairs_commuting == 49
    labels = [r.label for r in report.records]
    assert "[[5,1,3]]" in labels
    for r in report.records:
        assert r.k >= 1 and r.d >= 3
        assert r.certificate.kind == CertificateKind.EXACT
    assert report.truncated is None


def test_search_output_is_sorted_and_deduplicated():
    report = run_search(SearchConfig("cyclic:7", max_subset_size=2))
    keys = [r.sort_key() for r in report.records]
    assert keys == sorted(keys)
    seen = {(r.n, r.k, r.d, r.rowspace) for r in report.records}
    assert len(seen) == len(report.records)


def test_search_does_not_depend_on_worker_count():
    def summary(workers):
        report = run_search(SearchConfig("cyclic:7", max_subset_size=2, workers=workers))
        return [(r.label, r.sel1, r.sel2, r.drop_last, r.generators) for r in report.records]

    assert summary(1) == summary(3)


def test_two_vertex_scheme_has_no_distance_three_codes():
    report = run_search(SearchConfig("cyclic:2"))
    assert report.records == []


def test_stabilizer_states_only_on_request():
    plain = run_search(SearchConfig("cyclic:4", min_d=1))
    assert all(r.k > 0 for r in plain.records)
    with_states = run_search(SearchConfig("cyclic:4", min_d=1, include_k0=True))
    assert any(r.k == 0 for r in with_states.records)


def test_drop_range_limits_candidates():
    report = run_search(SearchConfig("cyclic:5", drop_range=(1, 1)))
    assert {r.drop_last for r in report.records} <= {1}


def test_time_budget_truncates():
    items = list(enumerate_codes(cyclic_scheme(12), SearchConfig("cyclic:12", time_budget=1e-9)))
    assert isinstance(items[-1], SearchTruncated)
    assert items[-1].pairs_total > 0


def test_search_refuses_broken_scheme():
    s4 = circulant(4)
    rest = BitMatrix.from_dense(1 - s4.to_dense() - BitMatrix.identity(4).to_dense())
    bad = AssociationScheme(label="bad", adjacency=(BitMatrix.identity(4), s4, rest), spec="bad")
    with pytest.raises(SchemeError):
        list(enumerate_codes(bad, SearchConfig("bad")))


@pytest.mark.parametrize("kwargs", [
    {"spec": ""},
    {"spec": "cyclic:5", "w_max": 0},
    {"spec": "cyclic:5", "workers": 0},
    {"spec": "cyclic:5", "drop_range": (3, 1)},
    {"spec": "cyclic:5", "time_budget": 0},
])
def test_search_config_validation(kwargs):
    with pytest.raises(ConfigError):
        SearchConfig(**kwargs)


def test_drops_for_clamps_to_rows():
    assert list(SearchConfig("cyclic:5", drop_range=(2, 9)).drops_for(5)) == [2, 3, 4]
    assert list(SearchConfig("cyclic:5").drops_for(3)) == [0, 1, 2]


# ============================================================================
# records
# ============================================================================

def test_record_json_round_trip():
    record = _five_qubit_record()
    payload = record.to_json()
    assert payload["sel1_mask"] == 2 and payload["sel2_mask"] == 4
    assert payload["bounds"] == {"hamming": True, "kl": True, "perfect": True}
    assert "elapsed_ms" not in payload["certificate"]
    assert CodeRecord.from_json(payload).to_json() == payload


def test_record_rebuilds_from_provenance():
    record = _five_qubit_record()
    code = rebuild_code(record)
    assert (code.n, code.k) == (5, 1)
    assert code.rowspace_key() == record.rowspace
    assert code.gens.m == record.generator_matrix()


def test_record_rebuilds_from_formulas():
    payload = _five_qubit_record().to_json()
    payload.update(sel1=None, sel2=None, sel1_mask=None, sel2_mask=None, b1="A_1", b2="A_2")
    code = rebuild_code(CodeRecord.from_json(payload))
    assert code.rowspace_key() == payload["rowspace"]


def test_record_with_inconsistent_distance_is_rejected():
    payload = _five_qubit_record().to_json()
    payload["d"] = 4
    with pytest.raises(CatalogError):
        CodeRecord.from_json(payload)


def test_lower_bound_label():
    code = select_generators(build_check_matrix(cyclic_scheme(5), (1,), (2,)), 1)
    record = record_from_code(code, certify(code, "bounded:2"))
    assert record.label == "[[5,1,>=3]]"


# ============================================================================
# tables and reproduction
# ============================================================================

def test_table_ids_and_aliases():
    assert resolve_table_id("abelian") == 4
    assert resolve_table_id("10") == 10
    with pytest.raises(UnknownTableError):
        resolve_table_id(7)
    assert set(TABLES) == {4, 5, 10}


def test_table_rows_are_consistent():
    for table, rows in TABLES.items():
        for row in rows:
            assert row.table == table
            assert row.k >= 1
            assert row.n >= row.k + 2 * row.d - 2


def test_table_row_filter():
    rows = table_rows(4, ["C_13"])
    assert [r.label for r in rows] == ["[[13,5,3]]", "[[13,1,5]]"]
    assert [r.label for r in table_rows(10, ["[[12,1,4]]"])] == ["[[12,1,4]]"]


def test_nonabelian_row_with_printed_generators():
    row = next(r for r in table_rows(10, ["U_12"]) if r.b1 == "A_2")
    result = reproduce_row(row)
    assert result.status == REPRODUCED
    assert result.certificate.is_exact and result.certificate.value == 3
    assert result.generators_match is True
    assert result.code.k == 4


def test_reproduce_small_abelian_row():
    report = reproduce_table(4, ["C_8"])
    assert len(report.rows) == 1
    result = report.rows[0]
    assert result.status in (REPRODUCED, ALTERNATE_ROWS)
    assert result.certificate.value == 3
    frame = report.to_dataframe()
    assert list(frame["group"]) == ["C_8"]
    assert "C_8" in report.to_markdown()
    assert sum(report.counts().values()) == 1


def test_reproduce_respects_max_n():
    report = reproduce_table("abelian", ["C_21"], max_n=20)
    assert report.rows == []


@pytest.mark.parametrize("name", sorted(GENERATOR_LISTINGS))
def test_printed_generator_listings(name):
    check = check_generator_listing(name)
    assert check.matches, check.mismatched_rows


def test_eleven_qubit_listing_omits_a_row():
    check = check_generator_listing("[[11,1,5]]")
    assert len(check.emitted) == 10
    assert len(check.printed) == 9
    assert check.missing == (6,)


def test_compare_listing_reports_mismatches():
    code = select_generators(build_check_matrix(cyclic_scheme(5), (1,), (2,)), 1)
    check = compare_listing(code, ["IXZZX", "XIXZZ", "ZXIXZ", "ZZXIY"])
    assert not check.matches
    assert check.mismatched_rows == [3]


@pytest.mark.slow
def test_reproduce_twelve_qubit_rows():
    report = reproduce_table(4, ["C_12"])
    assert [r.row.label for r in report.rows] == ["[[12,6,3]]", "[[12,5,3]]"]
    for result in report.rows:
        assert result.status in (REPRODUCED, ALTERNATE_ROWS)
        assert result.certificate.is_exact and result.certificate.value == 3


def test_listings_are_stored_as_printed():
    thirteen = GENERATOR_LISTINGS["[[13,1,5]]"]
    assert len(thirteen.rows) == 12
    assert {len(r) for r in thirteen.rows} == {13}
    assert thirteen.rows[0] == "IXZYXYIIYXYZX"
    twenty_one = GENERATOR_LISTINGS["[[21,5,7]]"]
    assert len(twenty_one.rows) == 16
    assert {len(r) for r in twenty_one.rows} == {21}
    assert twenty_one.rows[-1] == "YZZXXXXZZYZXYIIIIIYXZ"


def _row_code(row):
    c = build_check_matrix_from_formulas(parse_scheme_spec(label_to_spec(row.group)), row.b1, row.b2)
    hits = [drop for drop, r in trailing_drop_ranks(c) if r == row.n_minus_k]
    if hits:
        return select_generators(c, hits[0])
    alternate = _find_alternate(c, row.n_minus_k)
    assert alternate is not None, row.key
    return alternate[1]


@pytest.mark.slow
@pytest.mark.parametrize("row", [r for r in TABLES[5] if r.n in (30, 40)], ids=lambda r: r.key)
def test_long_cyclic_rows_hold_a_lower_bound(row):
    code = _row_code(row)
    assert code.k == row.k
    cert = distance_bounded(code, row.d - 1, workers=4)
    assert cert.kind is CertificateKind.LOWER_BOUND
    assert cert.value == row.d


@pytest.mark.slow
def test_nonabelian_table_reproduction_rate():
    report = reproduce_table(10, workers=4)
    assert len(report.rows) == 14
    met = [r for r in report.rows if r.status in (REPRODUCED, ALTERNATE_ROWS)]
    assert len(met) >= 12
    for result in report.rows:
        if result.status == DISCREPANT:
            assert result.evidence, result.row.key


@pytest.mark.slow
def test_abelian_table_sweep_up_to_twenty_one_qubits():
    report = reproduce_table(4, max_n=21, workers=4)
    assert report.rows
    assert all(r.row.n <= 21 for r in report.rows)
    for result in report.rows:
        key = result.row.key
        assert result.drop_hits or result.keep, key
        assert result.status in (REPRODUCED, ALTERNATE_ROWS, BOUND_ONLY), key
        assert result.certificate.value == result.row.d, key
        if result.row.n + result.row.k <= 28:
            assert result.certificate.is_exact, key
