import pytest
from hypothesis import given, strategies as st

from unarynet.bitvec import BitWord, hamming_distance, hamming_weight
from unarynet.codes import (
    Codebook,
    CodeSpec,
    DecodeError,
    build_codebook,
    decode_basic,
    decode_fixed,
    decode_generalized,
    decode_one_hot,
    encode_basic,
    encode_fixed,
    encode_generalized,
    encode_one_hot,
    min_pairwise_distance,
    one_hot_to_thermometer,
)

bw = BitWord.from_string

# n -> (terminated unary, 10-bit thermometer), values 0..10
REFERENCE_ROWS = {
    0: ("0", "0000000000"),
    1: ("10", "0000000001"),
    2: ("110", "0000000011"),
    3: ("1110", "0000000111"),
    4: ("11110", "0000001111"),
    5: ("111110", "0000011111"),
    6: ("1111110", "0000111111"),
    7: ("11111110", "0001111111"),
    8: ("111111110", "0011111111"),
    9: ("1111111110", "0111111111"),
    10: ("11111111110", "1111111111"),
}


class TestBasic:
    @pytest.mark.parametrize("n", REFERENCE_ROWS)
    def test_reference_column(self, n):
        assert str(encode_basic(n)) == REFERENCE_ROWS[n][0]

    def test_length_is_n_plus_one(self):
        for n in range(40):
            assert len(encode_basic(n)) == n + 1

    def test_decode_reference(self):
        assert decode_basic(bw("1110")) == 3
        assert decode_basic(bw("0")) == 0

    def test_roundtrip(self):
        for n in range(200):
            assert decode_basic(encode_basic(n)) == n

    def test_decode_rejects_one_after_zero(self):
        with pytest.raises(DecodeError) as exc:
            decode_basic(bw("1011"))
        assert exc.value.position == 2
        assert "position 2" in str(exc.value)

    def test_decode_rejects_missing_terminator(self):
        with pytest.raises(DecodeError) as exc:
            decode_basic(bw("111"))
        assert exc.value.position == 3

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            encode_basic(-1)


class TestFixed:
    @pytest.mark.parametrize("n", REFERENCE_ROWS)
    def test_reference_column(self, n):
        assert str(encode_fixed(n, 10)) == REFERENCE_ROWS[n][1]

    def test_weight_equals_value(self):
        for n in range(11):
            assert hamming_weight(encode_fixed(n, 10)) == n

    def test_range_error(self):
        with pytest.raises(ValueError, match="exceeds"):
            encode_fixed(11, 10)

    def test_decode_reference(self):
        assert decode_fixed(bw("0000011111")) == 5
        assert decode_fixed(bw("0000000000")) == 0

    def test_decode_rejects_non_thermometer(self):
        with pytest.raises(DecodeError) as exc:
            decode_fixed(bw("0101010101"))
        assert exc.value.position == 2

    @pytest.mark.parametrize("L", [1, 2, 7, 16])
    def test_roundtrip(self, L):
        for n in range(L + 1):
            assert decode_fixed(encode_fixed(n, L)) == n

    @pytest.mark.parametrize("L", [4, 8, 16, 64])
    def test_uniform_distance_law(self, L):
        """Distance between thermometer codes is exactly |x - y|."""
        words = [encode_fixed(n, L) for n in range(L + 1)]
        for x in range(L + 1):
            for y in range(L + 1):
                assert hamming_distance(words[x], words[y]) == abs(x - y)

    def test_weight_strictly_monotone(self):
        weights = [hamming_weight(encode_fixed(n, 64)) for n in range(65)]
        assert all(b > a for a, b in zip(weights, weights[1:]))


class TestOneHot:
    @pytest.mark.parametrize(
        "v, expected", [(1, "1000"), (2, "0100"), (3, "0010"), (4, "0001")]
    )
    def test_four_value_listing(self, v, expected):
        assert str(encode_one_hot(v, 4)) == expected

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            encode_one_hot(0, 4)
        with pytest.raises(ValueError):
            encode_one_hot(5, 4)

    def test_decode(self):
        for v in range(1, 9):
            assert decode_one_hot(encode_one_hot(v, 8)) == v

    def test_decode_rejects_zero_or_multiple_ones(self):
        with pytest.raises(DecodeError):
            decode_one_hot(bw("0000"))
        with pytest.raises(DecodeError) as exc:
            decode_one_hot(bw("0101"))
        assert exc.value.position == 3


class TestThermometerTransform:
    @pytest.mark.parametrize(
        "word, expected",
        [("1000", "1000"), ("0100", "1100"), ("0010", "1110"), ("0001", "1111")],
    )
    def test_left_fill_listing(self, word, expected):
        assert str(one_hot_to_thermometer(bw(word))) == expected

    def test_rejects_zero_and_multiple_ones(self):
        with pytest.raises(ValueError, match="exactly one"):
            one_hot_to_thermometer(bw("0000"))
        with pytest.raises(ValueError, match="exactly one"):
            one_hot_to_thermometer(bw("0110"))

    @pytest.mark.parametrize("L", [1, 3, 4, 10, 32])
    def test_equals_reversed_fixed_code(self, L):
        for v in range(1, L + 1):
            left = one_hot_to_thermometer(encode_one_hot(v, L))
            assert left == encode_fixed(v, L).reverse()


class TestGeneralized:
    def test_examples(self):
        assert str(encode_generalized(2, 3, 2)) == "1111110"
        assert str(encode_generalized(0, 3, 2)) == "0000000"
        assert str(encode_generalized(1, 1, 3)) == "1000"

    def test_length_is_k_n_plus_one(self):
        for k in range(1, 6):
            for N in range(1, 9):
                assert len(encode_generalized(0, k, N)) == k * N + 1

    def test_range_error(self):
        with pytest.raises(ValueError, match="exceeds"):
            encode_generalized(4, 2, 3)

    def test_k_equals_one_is_padded_basic(self):
        for n in range(6):
            padded = encode_basic(n).bits + (0,) * (5 - n)
            assert encode_generalized(n, 1, 5) == BitWord(padded)

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_distance_scales_by_k(self, k):
        N = 16
        words = [encode_generalized(n, k, N) for n in range(N + 1)]
        for x in range(N + 1):
            for y in range(N + 1):
                assert hamming_distance(words[x], words[y]) == k * abs(x - y)

    def test_decode(self):
        for k in (1, 2, 5):
            for n in range(8):
                assert decode_generalized(encode_generalized(n, k, 8), k) == n

    def test_decode_rejects_partial_run(self):
        with pytest.raises(DecodeError, match="multiple"):
            decode_generalized(bw("1110000"), 2)

    def test_decode_rejects_one_after_zero(self):
        with pytest.raises(DecodeError) as exc:
            decode_generalized(bw("1101"), 2)
        assert exc.value.position == 3


class TestCodebook:
    def test_fixed_book_matches_reference_column(self):
        book = build_codebook(CodeSpec("fixed", max_value=10, length=10))
        assert [str(w) for w in book.words] == [
            REFERENCE_ROWS[n][1] for n in range(11)
        ]

    def test_basic_book_pads_right(self):
        book = build_codebook(CodeSpec("basic", max_value=10, length=11))
        for n, word in enumerate(book.words):
            assert len(word) == 11
            assert str(word).startswith(REFERENCE_ROWS[n][0])
            assert set(str(word)[n + 1:]) <= {"0"}

    def test_one_hot_book(self):
        book = build_codebook(CodeSpec("one_hot", length=4))
        assert [str(w) for w in book.words] == ["1000", "0100", "0010", "0001"]
        assert list(book.spec.values) == [1, 2, 3, 4]

    def test_words_pairwise_distinct(self):
        for family, kwargs in [
            ("basic", dict(max_value=8)),
            ("fixed", dict(max_value=8, length=8)),
            ("one_hot", dict(length=8)),
            ("generalized", dict(max_value=8, repetition=3)),
        ]:
            book = build_codebook(CodeSpec(family, **kwargs))
            assert len(set(book.words)) == len(book.words)

    def test_dump_format(self):
        book = build_codebook(CodeSpec("fixed", max_value=3, length=4))
        assert book.dump() == "0\t0000\n1\t0001\n2\t0011\n3\t0111\n"

    def test_invalid_specs(self):
        with pytest.raises(ValueError):
            CodeSpec("nonsense", max_value=3)
        with pytest.raises(ValueError):
            CodeSpec("fixed", max_value=10, length=5)
        with pytest.raises(ValueError):
            CodeSpec("one_hot", length=3, max_value=5)
        with pytest.raises(ValueError):
            CodeSpec("generalized", max_value=4)
        with pytest.raises(ValueError):
            CodeSpec("basic", max_value=4, length=4)

    def test_min_distance_fixed_is_one(self):
        book = build_codebook(CodeSpec("fixed", max_value=10, length=10))
        assert min_pairwise_distance(book) == 1

    def test_min_distance_one_hot_is_two(self):
        book = build_codebook(CodeSpec("one_hot", length=4))
        assert min_pairwise_distance(book) == 2

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_min_distance_generalized_is_k(self, k):
        # adjacent values differ in exactly k positions, so the measured
        # minimum is k, not k - 1
        book = build_codebook(CodeSpec("generalized", max_value=8, repetition=k))
        assert min_pairwise_distance(book) == k

    def test_min_distance_needs_two_words(self):
        book = build_codebook(CodeSpec("basic", max_value=0))
        with pytest.raises(ValueError, match="at least 2"):
            min_pairwise_distance(book)

    def test_rejects_mixed_lengths_and_duplicates(self):
        spec = CodeSpec("fixed", max_value=2, length=4)
        with pytest.raises(ValueError, match="length"):
            Codebook(spec, (bw("0101"), bw("01")))
        with pytest.raises(ValueError, match="distinct"):
            Codebook(spec, (bw("0101"), bw("0101")))


@given(st.integers(0, 500))
def test_basic_roundtrip_property(n):
    assert decode_basic(encode_basic(n)) == n


@given(st.integers(1, 64), st.data())
def test_fixed_roundtrip_property(L, data):
    n = data.draw(st.integers(0, L))
    assert decode_fixed(encode_fixed(n, L)) == n
