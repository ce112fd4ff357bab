import pytest

from errors import CheckMatrixError, NonCommutingError, PauliFormatError, ShapeError
from gf2.bitmatrix import BitMatrix
from schemes.cyclic import cyclic_scheme
from schemes.registry import parse_scheme_spec
from stabilizer.check_matrix import (
    CheckMatrix,
    build_check_matrix,
    build_check_matrix_from_formulas,
    commutes,
    indices_to_mask,
    mask_to_indices,
    non_commuting_pairs,
    symplectic_product,
)
from stabilizer.code import code_from_generators, select_generators, select_generators_subset, trailing_drop_ranks
from stabilizer.pauli import (
    check_matrix_from_json,
    check_matrix_to_json,
    from_pauli,
    parse_pauli_text,
    row_to_pauli,
    to_pauli,
)
from worked_examples import B_C5, WORKED


@pytest.mark.parametrize("spec, b1, b2, drop, fixture, params", WORKED, ids=[w[0] for w in WORKED])
def test_check_matrix_matches_worked_example(spec, b1, b2, drop, fixture, params):
    c = build_check_matrix(parse_scheme_spec(spec), b1, b2)
    assert c.m == BitMatrix.from_strings(fixture)
    assert c.rows == c.n == params[0]
    assert commutes(c)


@pytest.mark.parametrize("spec, b1, b2, drop, fixture, params", WORKED, ids=[w[0] for w in WORKED])
def test_trailing_drop_gives_stated_parameters(spec, b1, b2, drop, fixture, params):
    c = build_check_matrix(parse_scheme_spec(spec), b1, b2)
    code = select_generators(c, drop)
    n, k, _ = params
    assert (code.n, code.k) == (n, k)
    assert code.gens.rows == n - k
    assert code.provenance.drop_last == drop
    assert code.provenance.keep == tuple(range(n - k))


def test_formulas_and_indices_build_the_same_matrix():
    s = cyclic_scheme(11)
    by_index = build_check_matrix(s, (1, 4, 5), (2, 5))
    by_formula = build_check_matrix_from_formulas(s, "A_1+A_4+A_5", "A_2+A_5")
    assert by_index.m == by_formula.m
    assert by_index.origin.b1_formula == "A1+A4+A5"
    assert by_index.origin.sel2 == (2, 5)


def test_subset_validation():
    s = cyclic_scheme(5)
    with pytest.raises(CheckMatrixError):
        build_check_matrix(s, (), ())
    with pytest.raises(CheckMatrixError):
        build_check_matrix(s, (3,), (1,))


def test_masks():
    assert mask_to_indices(0b10110) == (1, 2, 4)
    assert indices_to_mask((1, 2, 4)) == 0b10110
    assert mask_to_indices(0) == ()


# ============================================================================
# row selection
# ============================================================================

def test_trailing_drop_ranks_for_five_qubit_code():
    c = build_check_matrix(cyclic_scheme(5), (1,), (2,))
    assert trailing_drop_ranks(c) == [(0, 4), (1, 4), (2, 3), (3, 2), (4, 1)]


def test_dependent_rows_are_removed_top_down():
    c = build_check_matrix(cyclic_scheme(5), (1,), (2,))
    code = code_from_generators(c)
    assert code.k == 1
    assert code.provenance.keep == (0, 1, 2, 3)


def test_subset_selection():
    c = build_check_matrix(cyclic_scheme(5), (1,), (2,))
    code = select_generators_subset(c, [4, 1, 2, 3])
    assert code.provenance.keep == (1, 2, 3, 4)
    assert code.provenance.drop_last is None
    assert code.rowspace_key() == select_generators(c, 1).rowspace_key()
    with pytest.raises(CheckMatrixError):
        select_generators_subset(c, [])
    with pytest.raises(CheckMatrixError):
        select_generators_subset(c, [5])


def test_drop_out_of_range():
    c = build_check_matrix(cyclic_scheme(5), (1,), (2,))
    with pytest.raises(CheckMatrixError):
        select_generators(c, 5)
    with pytest.raises(CheckMatrixError):
        select_generators(c, -1)


def test_non_commuting_rows_are_rejected():
    c = from_pauli(["XI", "ZI"])
    assert not commutes(c)
    assert symplectic_product(c, 0, 1) == 1
    assert non_commuting_pairs(c) == [(0, 1)]
    with pytest.raises(NonCommutingError):
        select_generators(c, 0)


def test_check_matrix_width_must_be_2n():
    with pytest.raises(ShapeError):
        CheckMatrix(3, BitMatrix.zeros(2, 5))


# ============================================================================
# Pauli strings
# ============================================================================

def test_five_qubit_rows_as_pauli_strings():
    c = build_check_matrix(cyclic_scheme(5), (1,), (2,))
    assert to_pauli(c) == ["IXZZX", "XIXZZ", "ZXIXZ", "ZZXIX", "XZZXI"]


def test_six_qubit_first_row():
    c = build_check_matrix(cyclic_scheme(6), (2, 3), (0, 1, 2))
    assert to_pauli(c)[0] == "ZZYXYZ"


def test_row_to_pauli_bit_layout():
    assert row_to_pauli([1, 0, 1, 0], [0, 1, 1, 0]) == "XZYI"


def test_from_pauli_layout():
    c = from_pauli(["XZ YI"])
    assert c.n == 4
    assert c.m.to_strings() == ["10100110"]
    assert to_pauli(c) == ["XZYI"]


@pytest.mark.parametrize("lines", [[], ["XZ", "XZZ"], ["XQ"]])
def test_from_pauli_rejects_bad_input(lines):
    with pytest.raises(PauliFormatError):
        from_pauli(lines)


def test_parse_pauli_text_skips_comments():
    text = "# [[5,1,3]]\nIXZZX\n\n XIXZZ  # second\n"
    assert parse_pauli_text(text) == ["IXZZX", "XIXZZ"]


def test_check_matrix_json_uses_hex_rows():
    c = CheckMatrix(5, BitMatrix.from_strings(B_C5))
    payload = check_matrix_to_json(c)
    assert payload == {"n": 5, "rows": ["498", "a0c", "544", "2e0", "930"]}
    assert check_matrix_from_json(payload).m == c.m


@pytest.mark.parametrize("payload", [{"rows": []}, {"n": 5, "rows": ["fff"]}, {"n": "x", "rows": []}])
def test_check_matrix_json_errors(payload):
    with pytest.raises(PauliFormatError):
        check_matrix_from_json(payload)
