"""Unary code families: basic (terminated), fixed-length thermometer, one-hot,
and the k-repetition generalization, plus codebook construction and the
exhaustive minimum-distance oracle.

Orientation note: the fixed-length encoder fills 1s from the RIGHT
(0000000111 for 3 of 10) while the one-hot thermometer transform fills from
the LEFT (1110 for 3 of 4). The two conventions are related by BitWord.reverse
and have identical Hamming geometry.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bitvec import BitWord, HammingCount, hamming_distance, hamming_weight

FAMILIES = ("basic", "fixed", "one_hot", "generalized")


class DecodeError(ValueError):
    """A word does not have the shape the family requires.

    position is the index of the offending bit (or the word length when the
    required terminator is missing altogether).
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def encode_basic(n: int) -> BitWord:
    """n ones followed by a single terminating 0; length n + 1."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return BitWord((1,) * n + (0,))


def decode_basic(w: BitWord) -> int:
    """Count of leading ones; rejects any word that is not ones-then-zeros."""
    n = 0
    seen_zero = False
    for i, b in enumerate(w):
        if b == 1:
            if seen_zero:
                raise DecodeError("1 after terminating 0", i)
            n += 1
        else:
            seen_zero = True
    if not seen_zero:
        raise DecodeError("no terminating 0", len(w))
    return n


def encode_fixed(n: int, length: int) -> BitWord:
    """Thermometer word of the given length: (length - n) zeros then n ones."""
    if length < 1:
        raise ValueError("length must be >= 1")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > length:
        raise ValueError(f"n={n} exceeds code length {length}")
    return BitWord((0,) * (length - n) + (1,) * n)


def decode_fixed(w: BitWord) -> int:
    """Weight of a thermometer word; rejects words where a 1 precedes a 0."""
    seen_one = False
    for i, b in enumerate(w):
        if b == 1:
            seen_one = True
        elif seen_one:
            raise DecodeError("0 after first 1 in thermometer word", i)
    return hamming_weight(w)


def encode_one_hot(v: int, length: int) -> BitWord:
    """Single 1 at position v - 1; values run 1..length, leftmost = 1."""
    if length < 1:
        raise ValueError("length must be >= 1")
    if not 1 <= v <= length:
        raise ValueError(f"value {v} outside 1..{length}")
    return BitWord(tuple(1 if i == v - 1 else 0 for i in range(length)))


def decode_one_hot(w: BitWord) -> int:
    """Position (1-based) of the single 1."""
    ones = [i for i, b in enumerate(w) if b == 1]
    if len(ones) == 0:
        raise DecodeError("no 1 in one-hot word", len(w))
    if len(ones) > 1:
        raise DecodeError("more than one 1 in one-hot word", ones[1])
    return ones[0] + 1


def one_hot_to_thermometer(w: BitWord) -> BitWord:
    """Fill every position at or left of the single 1 with 1s."""
    ones = [i for i, b in enumerate(w) if b == 1]
    if len(ones) != 1:
        raise ValueError(f"expected exactly one 1, found {len(ones)}")
    pivot = ones[0]
    return BitWord((1,) * (pivot + 1) + (0,) * (len(w) - pivot - 1))


def encode_generalized(n: int, k: int, max_value: int) -> BitWord:
    """k*n ones then zeros, padded to the fixed length k*max_value + 1.

    The length keeps every codeword's terminating 0 in-band; k = 1 reduces to
    the basic code padded to max_value + 1.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > max_value:
        raise ValueError(f"n={n} exceeds max value {max_value}")
    length = k * max_value + 1
    return BitWord((1,) * (k * n) + (0,) * (length - k * n))


def decode_generalized(w: BitWord, k: int) -> int:
    """Count of leading ones divided by k; validates shape and multiplicity."""
    if k < 1:
        raise ValueError("k must be >= 1")
    ones = 0
    seen_zero = False
    for i, b in enumerate(w):
        if b == 1:
            if seen_zero:
                raise DecodeError("1 after terminating 0", i)
            ones += 1
        else:
            seen_zero = True
    if not seen_zero:
        raise DecodeError("no terminating 0", len(w))
    if ones % k != 0:
        raise DecodeError(f"run of {ones} ones is not a multiple of k={k}", ones)
    return ones // k


@dataclass(frozen=True)
class CodeSpec:
    """Parameters selecting one codebook.

    family        one of basic, fixed, one_hot, generalized
    max_value     largest encodable value (one_hot: defaults to length)
    length        codeword length for the fixed-length families
    repetition    k for the generalized family
    """

    family: str
    max_value: int | None = None
    length: int | None = None
    repetition: int | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "basic":
            if self.max_value is None or self.max_value < 0:
                raise ValueError("basic family needs max_value >= 0")
            if self.length is not None and self.length < self.max_value + 1:
                raise ValueError("basic family needs length >= max_value + 1")
        elif self.family == "fixed":
            if self.max_value is None or self.max_value < 0:
                raise ValueError("fixed family needs max_value >= 0")
            if self.word_length < max(self.max_value, 1):
                raise ValueError("fixed family needs length >= max_value")
        elif self.family == "one_hot":
            if self.length is None or self.length < 1:
                raise ValueError("one_hot family needs length >= 1")
            if self.max_value is not None and self.max_value > self.length:
                raise ValueError("one_hot family needs length >= max_value")
        else:  # generalized
            if self.repetition is None or self.repetition < 1:
                raise ValueError("generalized family needs repetition k >= 1")
            if self.max_value is None or self.max_value < 0:
                raise ValueError("generalized family needs max_value >= 0")

    @property
    def word_length(self) -> int:
        """Common length of every word in the codebook."""
        if self.family == "basic":
            return self.length if self.length is not None else self.max_value + 1
        if self.family == "fixed":
            if self.length is not None:
                return self.length
            return max(self.max_value, 1)
        if self.family == "one_hot":
            return self.length
        return self.repetition * self.max_value + 1

    @property
    def values(self) -> range:
        """Encodable values, in codebook order."""
        if self.family == "one_hot":
            return range(1, self.length + 1)
        return range(0, self.max_value + 1)


@dataclass(frozen=True)
class Codebook:
    """All codewords of a CodeSpec, ordered by encoded value."""

    spec: CodeSpec
    words: tuple[BitWord, ...]

    def __post_init__(self) -> None:
        lengths = {len(w) for w in self.words}
        if len(lengths) > 1:
            raise ValueError("codebook words differ in length")
        if len(set(self.words)) != len(self.words):
            raise ValueError("codebook words are not pairwise distinct")

    def dump(self) -> str:
        """One line per value: '<n>\\t<bitstring>', ordered by value."""
        lines = [f"{n}\t{w}" for n, w in zip(self.spec.values, self.words)]
        return "\n".join(lines) + "\n"


def _pad_right(w: BitWord, length: int) -> BitWord:
    if length < len(w):
        raise ValueError(f"cannot pad word of length {len(w)} to {length}")
    if length == len(w):
        return w
    return BitWord(w.bits + (0,) * (length - len(w)))


def build_codebook(spec: CodeSpec) -> Codebook:
    if spec.family == "basic":
        words = tuple(
            _pad_right(encode_basic(n), spec.word_length) for n in spec.values
        )
    elif spec.family == "fixed":
        words = tuple(encode_fixed(n, spec.word_length) for n in spec.values)
    elif spec.family == "one_hot":
        words = tuple(encode_one_hot(v, spec.word_length) for v in spec.values)
    else:
        words = tuple(
            encode_generalized(n, spec.repetition, spec.max_value)
            for n in spec.values
        )
    return Codebook(spec, words)


def min_pairwise_distance(book: Codebook) -> HammingCount:
    """Exact minimum Hamming distance over all unordered pairs of codewords."""
    if len(book.words) < 2:
        raise ValueError("minimum distance needs at least 2 codewords")
    return min(hamming_distance(a, b) for a, b in combinations(book.words, 2))
