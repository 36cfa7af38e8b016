from fractions import Fraction

import numpy as np
import pytest
from oracles import naive_min_distance

from twistcode import codes
from twistcode.codes import (
    LinearCode,
    format_code,
    min_distance_bruteforce,
    named_code,
    parse_code,
    random_code,
    rate,
    relative_distance,
)
from twistcode.errors import ParseError
from twistcode.gf2 import BitMatrix, BitVector, rank


def test_from_parity_check_examples():
    assert LinearCode.from_parity_check(BitMatrix(0, 6)).dimension == 6
    assert LinearCode.from_parity_check(BitMatrix.identity(6)).dimension == 0
    assert LinearCode.from_parity_check(BitMatrix.ones(1, 6)).dimension == 5


def test_generator_rows_reduced_to_basis():
    G = BitMatrix.from_array([[1, 1, 0, 0], [0, 1, 1, 0], [1, 0, 1, 0]])
    C = LinearCode.from_generator(G)
    assert C.dimension == 2 and C.generator.rows == 2


@pytest.mark.parametrize(
    "code",
    [codes.hamming_7_4(), codes.parity(5), codes.repetition(4), codes.full(3), random_code(12, 5, seed=1)],
    ids=["hamming", "parity", "repetition", "full", "random"],
)
def test_two_views_agree(code):
    G, H = code.generator, code.parity_check
    assert (G @ H.T).is_zero()
    assert rank(G) + rank(H) == code.length
    assert LinearCode.from_generator(G) == LinearCode.from_parity_check(H)
    assert LinearCode.from_parity_check(LinearCode.from_generator(G).parity_check) == code


def test_rate_examples():
    assert rate(codes.full(7)) == 1
    assert rate(codes.hamming_7_4()) == Fraction(4, 7)
    assert rate(codes.zero(5)) == 0
    with pytest.raises(ValueError):
        rate(codes.full(0))


def test_hamming_parameters_from_exhaustion():
    C = codes.hamming_7_4()
    weights = sorted(w.weight() for w in C.codewords())
    assert len(weights) == 16
    assert min(weights[1:]) == 3  # all 15 nonzero codewords enumerated
    assert min_distance_bruteforce(C) == 3
    assert relative_distance(C) == Fraction(3, 7)


@pytest.mark.parametrize("n", [1, 2, 5, 9, 70])
def test_repetition_and_parity_distances(n):
    assert min_distance_bruteforce(codes.repetition(n)) == n
    if 2 <= n <= 27:
        assert min_distance_bruteforce(codes.parity(n)) == 2


def test_zero_code_distance_is_an_error():
    with pytest.raises(ValueError, match="undefined"):
        min_distance_bruteforce(codes.zero(4))


def test_dimension_cap():
    with pytest.raises(ValueError, match="cap"):
        min_distance_bruteforce(codes.full(10), dim_cap=8)


def test_is_codeword():
    C = codes.parity(4)
    assert C.is_codeword(BitVector.from_bits([1, 1, 0, 0]))
    assert not C.is_codeword(BitVector.from_bits([1, 0, 0, 0]))


def test_named_codes():
    p = named_code("parity", 3)
    assert p.dimension == 2 and min_distance_bruteforce(p) == 2
    h = named_code("hamming_7_4")
    assert (h.length, h.dimension, min_distance_bruteforce(h)) == (7, 4, 3)
    with pytest.raises(ValueError):
        named_code("golay")


def test_random_code_determinism_and_dimension():
    a, b = random_code(10, 4, seed=99), random_code(10, 4, seed=99)
    assert a.generator == b.generator
    for k in range(11):
        assert random_code(10, k, seed=k).dimension == k
    with pytest.raises(ValueError):
        random_code(3, 4, seed=0)


def test_bruteforce_matches_naive_enumerator():
    rng = np.random.default_rng(17)
    for trial in range(40):
        n = int(rng.integers(2, 40))
        k = int(rng.integers(1, min(n, 12) + 1))
        C = random_code(n, k, seed=trial)
        d = min_distance_bruteforce(C)
        assert d == naive_min_distance(C.generator.tolist())
        assert 1 <= d <= n
        assert C.dimension + d <= n + 1


def test_bruteforce_uses_high_walk_and_long_words():
    # dim 20 > table bits, length 150 > one word
    C = random_code(150, 20, seed=5)
    d1 = min_distance_bruteforce(C)
    assert d1 == min_distance_bruteforce(C, workers=3)
    assert 1 <= d1 <= 150


def test_workers_do_not_change_result():
    for seed in range(5):
        C = random_code(40, 18, seed=seed)
        assert len({min_distance_bruteforce(C, workers=w) for w in (1, 2, 4, 7)}) == 1


def test_code_text_roundtrip():
    C = codes.hamming_7_4()
    assert parse_code(format_code(C, "parity")) == C
    assert parse_code(format_code(C, "generator")) == C
    with pytest.raises(ParseError):
        parse_code("checks\n1 2\n11\n")
