import itertools

import pytest

from distance.bounded import distance_bounded, sample_light_logical
from distance.bounds import (
    check_bounds,
    hamming_bound_ok,
    hamming_d3_closed_form,
    hamming_volume,
    is_perfect,
    kl_bound_ok,
)
from distance.certificate import CertificateKind, DistanceCertificate, ErrorVector
from distance.exact import distance_exact
from distance.oracle import distance_oracle
from distance.policy import MethodSpec, certify, parse_method, resolve_method
from distance.syndrome import normalizer_split, satisfies_syndrome, verify_witness
from errors import DistanceCeilingError, DistanceInputError
from schemes.registry import parse_scheme_spec
from stabilizer.check_matrix import build_check_matrix, commutes, mask_to_indices
from stabilizer.code import select_generators
from stabilizer.pauli import from_pauli
from worked_examples import WORKED


def _worked_code(spec, b1, b2, drop):
    return select_generators(build_check_matrix(parse_scheme_spec(spec), b1, b2), drop)


def _small_codes():
    """Every commuting subset pair on a few schemes with at most 8 vertices, all trailing drops."""
    out = []
    for spec in ("cyclic:5", "cyclic:6", "u6n:1", "d2n:3", "cyclic:8", "t4n:2"):
        s = parse_scheme_spec(spec)
        masks = range(1, 1 << len(s))
        for m1, m2 in itertools.product(masks, masks):
            if bin(m1).count("1") > 2 or bin(m2).count("1") > 2:
                continue
            c = build_check_matrix(s, mask_to_indices(m1), mask_to_indices(m2))
            if not commutes(c):
                continue
            for drop in (0, 2):
                out.append((f"{spec}/{m1}/{m2}/{drop}", select_generators(c, drop)))
    return out


SMALL = _small_codes()
FIVE = _worked_code("cyclic:5", (1,), (2,), 1)


# ============================================================================
# exact enumeration against the oracle
# ============================================================================

@pytest.mark.parametrize("name, code", SMALL, ids=[name for name, _ in SMALL])
def test_exact_and_weight_enumeration_agree_with_oracle(name, code):
    oracle = distance_oracle(code)
    exact = distance_exact(code)
    bounded = distance_bounded(code, code.n)
    assert oracle.is_exact and exact.is_exact and bounded.is_exact
    assert exact.value == oracle.value == bounded.value
    assert exact.witness == oracle.witness == bounded.witness
    assert verify_witness(code, exact.witness, exact.value)


@pytest.mark.parametrize("workers", [1, 3])
def test_witness_does_not_depend_on_workers(workers):
    code = _worked_code("cyclic:11", (1, 4, 5), (2, 5), 1)
    single = distance_exact(code, workers=1, table_bits=4)
    other = distance_exact(code, workers=workers, table_bits=4)
    assert single.witness == other.witness
    assert distance_bounded(code, 5, workers=workers).witness == single.witness


@pytest.mark.parametrize("spec, b1, b2, drop, fixture, params", WORKED, ids=[w[0] for w in WORKED])
def test_worked_examples_have_stated_distance(spec, b1, b2, drop, fixture, params):
    code = _worked_code(spec, b1, b2, drop)
    cert = certify(code, "auto")
    assert cert.is_exact
    assert cert.value == params[2]
    assert verify_witness(code, cert.witness, cert.value)


def test_stabilizer_state_distance():
    # |00> stabilized by ZI, IZ: lightest nonidentity stabilizer has weight 1
    code = select_generators(from_pauli(["ZI", "IZ"]), 0)
    assert code.k == 0
    for cert in (distance_exact(code), distance_oracle(code), distance_bounded(code, 2)):
        assert cert.value == 1
        assert cert.witness.to_pauli() == "ZI"


# ============================================================================
# weight enumeration
# ============================================================================

def test_bounded_below_the_distance_is_a_lower_bound():
    cert = distance_bounded(FIVE, 2)
    assert cert.kind == CertificateKind.LOWER_BOUND
    assert cert.value == 3
    assert cert.witness is None
    assert cert.describe() == "LowerBound(3)"


def test_bounded_reaching_the_distance_is_exact():
    cert = distance_bounded(FIVE, 7)
    assert cert.describe() == "Exact(3)"


def test_bounded_rejects_zero_weight():
    with pytest.raises(DistanceInputError):
        distance_bounded(FIVE, 0)


def test_sampled_logical_is_a_valid_upper_bound():
    code = _worked_code("cyclic:13", (1, 3, 4, 5), (2, 3, 5), 1)
    e = sample_light_logical(code, samples=2000)
    assert e.weight() >= 5
    assert verify_witness(code, e, e.weight())


# ============================================================================
# input limits and method selection
# ============================================================================

def test_exact_refuses_codes_above_the_ceiling():
    with pytest.raises(DistanceCeilingError):
        distance_exact(FIVE, ceiling=5)


def test_oracle_refuses_long_codes():
    with pytest.raises(DistanceInputError):
        distance_oracle(_worked_code("cyclic:11", (1, 4, 5), (2, 5), 1))


@pytest.mark.parametrize("text, expected", [
    ("auto", MethodSpec("auto")),
    ("EXACT", MethodSpec("exact")),
    ("oracle", MethodSpec("oracle")),
    ("bounded:4", MethodSpec("bounded", 4)),
    ("bounded", MethodSpec("bounded", 7)),
])
def test_parse_method(text, expected):
    assert parse_method(text) == expected


@pytest.mark.parametrize("text", ["fast", "bounded:0", "bounded:x"])
def test_parse_method_errors(text):
    with pytest.raises(DistanceInputError):
        parse_method(text)


def test_auto_method_resolution():
    eleven = _worked_code("cyclic:11", (1, 4, 5), (2, 5), 1)
    auto = MethodSpec("auto")
    assert resolve_method(FIVE, auto).name == "oracle"
    assert resolve_method(eleven, auto).name == "exact"
    assert resolve_method(eleven, auto, ceiling=10) == MethodSpec("bounded", 7)
    assert str(resolve_method(eleven, auto, ceiling=10, auto_w_max=5)) == "bounded:5"


# ============================================================================
# witnesses and the normalizer
# ============================================================================

def test_normalizer_split_has_2k_logicals():
    code = _worked_code("u6n:2", (2,), (3, 5), 4)
    split = normalizer_split(code)
    assert len(split.stabilizers) == 8
    assert len(split.logicals) == 8


def test_verify_witness_rejects_stabilizers_and_wrong_weights():
    cert = distance_exact(FIVE)
    assert verify_witness(FIVE, cert.witness, 3)
    assert not verify_witness(FIVE, cert.witness, 4)
    # first generator IXZZX commutes with everything but lies in S
    stab = ErrorVector.from_ints(0b10010, 0b01100, 5)
    assert satisfies_syndrome(FIVE, stab)
    assert not verify_witness(FIVE, stab, 4)
    # single X on qubit 0 anticommutes with ZXIXZ
    assert not satisfies_syndrome(FIVE, ErrorVector.from_ints(0b1, 0, 5))


def test_error_vector_pauli():
    e = ErrorVector.from_ints(0b011, 0b110, 3)
    assert e.to_pauli() == "XYZ"
    assert e.weight() == 3


def test_certificate_json_round_trip():
    cert = distance_exact(FIVE)
    payload = cert.to_json(include_timing=False)
    assert payload["kind"] == "exact"
    assert payload["d"] == 3
    assert "elapsed_ms" not in payload
    back = DistanceCertificate.from_json(payload, 5)
    assert (back.kind, back.value, back.method, back.witness) == (cert.kind, cert.value, cert.method, cert.witness)


# ============================================================================
# bounds
# ============================================================================

def test_five_qubit_code_is_perfect():
    assert is_perfect(5, 1, 3)
    assert hamming_volume(5, 1, 3) == 32
    assert not is_perfect(7, 1, 3)


@pytest.mark.parametrize("n", range(1, 65))
def test_hamming_d3_closed_form_matches_sum(n):
    for k in range(n + 1):
        assert hamming_d3_closed_form(n, k) == hamming_bound_ok(n, k, 3)


def test_knill_laflamme():
    assert kl_bound_ok(5, 1, 3)
    assert not kl_bound_ok(4, 1, 3)
    assert kl_bound_ok(21, 5, 7)


def test_check_bounds_flags():
    b = check_bounds(11, 1, 5)
    assert b.hamming and b.kl and not b.perfect
    assert b.hamming_required
    assert not check_bounds(4, 1, 3).hamming
    assert not check_bounds(12, 4, 4).hamming_required


def test_exact_ceiling_is_inclusive():
    eleven = _worked_code("cyclic:11", (1, 4, 5), (2, 5), 1)
    assert distance_exact(FIVE, ceiling=6).is_exact
    assert resolve_method(eleven, MethodSpec("auto"), ceiling=12).name == "exact"
    assert resolve_method(eleven, MethodSpec("auto"), ceiling=11).name == "bounded"


@pytest.mark.slow
def test_twenty_one_qubit_code_is_exact_seven():
    code = _worked_code("cyclic:21", (3, 4, 6, 9, 10), (3, 5, 6, 7, 8), 5)
    assert (code.n, code.k) == (21, 5)
    cert = distance_exact(code, workers=4)
    assert cert.is_exact and cert.value == 7
    assert verify_witness(code, cert.witness, 7)
