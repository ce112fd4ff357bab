import numpy as np
import pytest
from sympy import npartitions

from errors import SchemeError, SchemeSpecError
from gf2.bitmatrix import BitMatrix
from gf2.linalg import add, kron, matrix_power
from schemes.abelian import abelian_groups_of_order, group_label
from schemes.cyclic import SWAP, abelian_scheme, circulant, cyclic_scheme, product_index, product_scheme
from schemes.formula import evaluate_formula, formula_from_indices, indices_from_formula
from schemes.nonabelian import d2n_scheme, t4n_scheme, u6n_scheme, v8n_scheme
from schemes.registry import dump_scheme, label_to_spec, parse_scheme_spec
from schemes.scheme import AssociationScheme, intersection_numbers, verify_scheme
from worked_examples import S_5


def _assert_scheme(s, classes=None):
    report = verify_scheme(s)
    assert report.passed, [(c.name, c.witness) for c in report.failures()]
    assert report.commutative
    if classes is not None:
        assert s.classes == classes
    return report


# ============================================================================
# circulants and cyclic schemes
# ============================================================================

def test_circulant_matches_worked_example():
    assert circulant(5).to_strings() == S_5


def test_circulant_order():
    s = circulant(7)
    assert matrix_power(s, 7) == BitMatrix.identity(7)
    assert circulant(7, -1) == s.T


@pytest.mark.parametrize("nu", range(2, 41))
def test_cyclic_schemes_are_symmetric_schemes(nu):
    report = _assert_scheme(cyclic_scheme(nu), classes=nu // 2)
    assert report.symmetric


def test_cyclic_scheme_rejects_one_vertex():
    with pytest.raises(SchemeError):
        cyclic_scheme(1)


def test_cyclic_intersection_numbers():
    p = intersection_numbers(cyclic_scheme(5))
    # (S + S^-1)^2 = 2I + S^2 + S^-2
    assert p[0, 1, 1] == 2
    assert p[1, 1, 1] == 0
    assert p[2, 1, 1] == 1


@pytest.mark.parametrize("spec", ["cyclic:6", "u6n:2", "d2n:5", "abelian:2,4"])
def test_intersection_numbers_rebuild_every_product(spec):
    s = parse_scheme_spec(spec)
    p = intersection_numbers(s)
    stack = s.dense_stack()
    for i in range(len(s)):
        for j in range(len(s)):
            assert np.array_equal(p.reconstruct(s, i, j), stack[i] @ stack[j])


# ============================================================================
# Abelian groups and products
# ============================================================================

def _expected_group_count(n):
    from sympy import factorint
    count = 1
    for e in factorint(n).values():
        count *= npartitions(e)
    return count


@pytest.mark.parametrize("n", range(1, 97))
def test_abelian_group_count(n):
    assert len(abelian_groups_of_order(n)) == _expected_group_count(n)


def test_abelian_groups_of_order_32():
    groups = abelian_groups_of_order(32)
    assert len(groups) == 7
    assert (32,) in groups
    assert (2, 2, 2, 2, 2) in groups
    assert all(np.prod(g) == 32 for g in groups)


def test_group_labels():
    assert group_label((2, 4)) == "C_2×C_4"
    assert group_label(()) == "C_1"


def _abelian_cases(max_order):
    return [f for n in range(2, max_order + 1) for f in abelian_groups_of_order(n)]


@pytest.mark.parametrize("factors", _abelian_cases(32), ids=group_label)
def test_abelian_product_schemes(factors):
    s = abelian_scheme(factors)
    assert s.nu == int(np.prod(factors))
    _assert_scheme(s)


@pytest.mark.slow
@pytest.mark.parametrize("factors", [f for f in _abelian_cases(64) if np.prod(f) > 32], ids=group_label)
def test_abelian_product_schemes_up_to_64(factors):
    _assert_scheme(abelian_scheme(factors))


def test_product_basis_order_is_lexicographic():
    s = parse_scheme_spec("C_2×C_4")
    c4 = cyclic_scheme(4)
    assert len(s) == 2 * 3
    assert s[product_index([2, 3], [1, 2])] == kron(SWAP, c4[2])
    assert product_index([3, 4], [1, 2]) == 6


def test_trivial_abelian_scheme():
    s = parse_scheme_spec("abelian:")
    assert s.nu == 1 and s.classes == 0
    assert verify_scheme(s).passed


@pytest.mark.slow
def test_abelian_group_count_up_to_1000():
    for n in range(97, 1001):
        assert len(abelian_groups_of_order(n)) == _expected_group_count(n), n


def _crt_relabel(dense, m, n):
    """Move vertex x of C_mn to (x mod m) * n + (x mod n)."""
    idx = [(x % m) * n + x % n for x in range(m * n)]
    out = np.zeros_like(dense)
    out[np.ix_(idx, idx)] = dense
    return out


COPRIME_PAIRS = [(2, 7), (3, 4), (3, 5), (4, 5), (5, 8)]


@pytest.mark.parametrize("m,n", COPRIME_PAIRS)
def test_crt_relabelled_circulant_is_a_kronecker_product(m, n):
    shifted = _crt_relabel(circulant(m * n).to_dense(), m, n)
    expected = np.kron(circulant(m).to_dense(), circulant(n).to_dense())
    assert np.array_equal(shifted, expected)


@pytest.mark.parametrize("m,n", COPRIME_PAIRS)
def test_cyclic_scheme_refines_the_crt_product(m, n):
    product = product_scheme([cyclic_scheme(m), cyclic_scheme(n)]).dense_stack()
    for a in cyclic_scheme(m * n).dense_stack():
        relabelled = _crt_relabel(a, m, n)
        covering = [p for p in product if np.all(p >= relabelled)]
        assert len(covering) == 1


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_crt_product_with_c2_matches_cyclic_scheme(n):
    cyclic = cyclic_scheme(2 * n)
    product = product_scheme([cyclic_scheme(2), cyclic_scheme(n)])
    relabelled = {_crt_relabel(a, 2, n).tobytes() for a in cyclic.dense_stack()}
    assert relabelled == {p.tobytes() for p in product.dense_stack()}
    assert sorted(cyclic.valencies()) == sorted(product.valencies())
    assert np.array_equal(
        np.sort(intersection_numbers(cyclic).p, axis=None),
        np.sort(intersection_numbers(product).p, axis=None),
    )


def test_crt_product_is_coarser_without_a_factor_of_two():
    assert len(cyclic_scheme(15)) == 8
    assert len(product_scheme([cyclic_scheme(3), cyclic_scheme(5)])) == 6


# ============================================================================
# non-Abelian families
# ============================================================================

@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_u6n(n):
    s = u6n_scheme(n)
    assert s.nu == 6 * n
    _assert_scheme(s, classes=3 * n - 1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_t4n(n):
    s = t4n_scheme(n)
    assert s.nu == 4 * n
    _assert_scheme(s, classes=n + 2)


@pytest.mark.parametrize("n", [3, 5])
def test_t4n_reflection_classes_split_the_b_coset(n):
    s = t4n_scheme(n)
    assert s.valencies()[-2:] == [n, n]
    stack = s.dense_stack()
    coset = stack[-2] + stack[-1]
    assert coset.max() == 1
    assert int(stack[:-2].sum(axis=0).max()) == 1
    assert np.array_equal(stack[:-2].sum(axis=0) + coset, np.ones((4 * n, 4 * n), dtype=np.int64))


@pytest.mark.parametrize("n", [1, 3, 5])
def test_v8n(n):
    s = v8n_scheme(n)
    assert s.nu == 8 * n
    _assert_scheme(s, classes=2 * n + 2)


@pytest.mark.parametrize("n", range(2, 11))
def test_d2n(n):
    s = d2n_scheme(n)
    m, odd = divmod(n, 2)
    assert s.nu == 2 * n
    _assert_scheme(s, classes=m + 1 if odd else m + 2)


@pytest.mark.parametrize("spec", ["v8n:2", "t4n:1", "u6n:0", "d2n:1", "cyclic:1"])
def test_out_of_range_family_parameters(spec):
    with pytest.raises(SchemeError):
        parse_scheme_spec(spec)


# ============================================================================
# verification failures
# ============================================================================

def test_verify_reports_missing_transpose():
    s4 = circulant(4)
    rest = add(add(BitMatrix.ones(4, 4), BitMatrix.identity(4)), s4)
    s = AssociationScheme(label="bad", adjacency=(BitMatrix.identity(4), s4, rest))
    report = verify_scheme(s)
    assert not report.passed
    names = {c.name for c in report.failures()}
    assert "transpose-closure" in names
    assert "partition" not in names


def test_verify_reports_overlapping_relations():
    eye = BitMatrix.identity(3)
    s = AssociationScheme(label="bad", adjacency=(eye, BitMatrix.ones(3, 3)))
    report = verify_scheme(s)
    failed = {c.name: c.witness for c in report.failures()}
    assert "partition" in failed
    assert "covered 2 times" in failed["partition"]
    with pytest.raises(SchemeError):
        intersection_numbers(s)


# ============================================================================
# specs, labels and formulas
# ============================================================================

@pytest.mark.parametrize("label, spec", [
    ("C_12", "cyclic:12"),
    ("U_12", "u6n:2"),
    ("T_16", "t4n:4"),
    ("V_24", "v8n:3"),
    ("D_12", "d2n:6"),
    ("C_2×C_4", "product:cyclic:2,cyclic:4"),
    ("C3xC3", "product:cyclic:3,cyclic:3"),
])
def test_label_to_spec(label, spec):
    assert label_to_spec(label) == spec


@pytest.mark.parametrize("text", ["U_13", "Q_8", "", "product:", "product:product:cyclic:2", "cyclic:x"])
def test_bad_specs(text):
    with pytest.raises(SchemeSpecError):
        parse_scheme_spec(text)


def test_product_spec_labels_components():
    s = parse_scheme_spec("product:cyclic:2,cyclic:2,cyclic:2")
    assert s.label == "C_2×C_2×C_2"
    assert s.spec == "product:cyclic:2,cyclic:2,cyclic:2"
    assert len(s.factors) == 3


def test_formula_on_cyclic_scheme():
    s = cyclic_scheme(7)
    everything = evaluate_formula(s, "A1+A2+A3")
    assert everything == add(BitMatrix.ones(7, 7), BitMatrix.identity(7))
    assert evaluate_formula(s, "A_0+A_{2}") == add(s[0], s[2])


def test_formula_on_product_scheme():
    s = parse_scheme_spec("C_2×C_4")
    c4 = cyclic_scheme(4)
    expected = add(kron(BitMatrix.identity(2), c4[2]), kron(SWAP, c4[1]))
    assert evaluate_formula(s, "I_2A_2+XA_1") == expected


def test_identity_may_span_components():
    s = parse_scheme_spec("C_3×C_4")
    assert evaluate_formula(s, "I_12") == BitMatrix.identity(12)
    assert evaluate_formula(s, "SS^2") == kron(circulant(3), circulant(4, 2))


@pytest.mark.parametrize("formula", ["A_9", "A1+", "XA_1", "B_1"])
def test_bad_formulas(formula):
    with pytest.raises(SchemeSpecError):
        evaluate_formula(cyclic_scheme(5), formula)


def test_formula_index_round_trip():
    assert formula_from_indices((5, 1, 4)) == "A1+A4+A5"
    assert indices_from_formula("A_1+A_4+A5") == (1, 4, 5)
    with pytest.raises(SchemeSpecError):
        indices_from_formula("I_2A_1")


def test_dump_scheme_hex_rows():
    dump = dump_scheme(cyclic_scheme(5))
    assert dump["nu"] == 5
    assert dump["classes"] == 2
    assert dump["valencies"] == [1, 2, 2]
    # A_1 row 0 = 01001
    assert dump["adjacency"][1]["rows"][0] == "48"
