"""Exhaustive property checks over small parameter grids.

Every library invariant is re-verified here against an independent route:
distances against |x - y|, hidden-neuron firing against an integer popcount
oracle, output bits against distance-derived votes. Checks are pure and
deterministic; random training sets come from the documented LCG, each
property family using its own fixed seed offset so cells are independent.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from . import bitvec, cc4, codes
from .bitvec import BitWord
from .rng import Lcg64

# enumeration guards: grids beyond these are rejected, not attempted
MAX_METRIC_LEN = 8
MAX_GRAY_WIDTH = 20
MAX_FIXED_LENGTH = 64
MAX_PATTERN_WIDTH = 12
MAX_REPETITION = 5
MAX_GEN_VALUE = 16

# seed offsets per property family that draws random data
OFFSET_RADIUS_LAW = 0
OFFSET_REPRODUCTION = 1
OFFSET_COMPLEMENT = 2
OFFSET_BIAS = 3
OFFSET_EXACTNESS = 4


@dataclass(frozen=True)
class CheckGrid:
    metric_max_len: int = 8
    gray_width: int = 10
    fixed_lengths: tuple[int, ...] = (8, 16, 32, 64)
    gen_ks: tuple[int, ...] = (2, 3, 4, 5)
    gen_max_value: int = 8
    widths: tuple[int, ...] = (4, 8, 10)
    radii: tuple[int, ...] = (0, 1, 2, 3)
    training_sets: int = 20
    max_samples: int = 10
    output_bits: int = 2
    bias_vectors: int = 200
    seed: int = 1

    def __post_init__(self) -> None:
        def guard(cond: bool, what: str) -> None:
            if not cond:
                raise ValueError(f"grid guard exceeded: {what}")

        guard(1 <= self.metric_max_len <= MAX_METRIC_LEN,
              f"metric length must be 1..{MAX_METRIC_LEN}")
        guard(1 <= self.gray_width <= MAX_GRAY_WIDTH,
              f"gray width must be 1..{MAX_GRAY_WIDTH}")
        guard(all(1 <= l <= MAX_FIXED_LENGTH for l in self.fixed_lengths),
              f"fixed lengths must be 1..{MAX_FIXED_LENGTH}")
        guard(all(1 <= k <= MAX_REPETITION for k in self.gen_ks),
              f"repetition k must be 1..{MAX_REPETITION}")
        guard(1 <= self.gen_max_value <= MAX_GEN_VALUE,
              f"generalized max value must be 1..{MAX_GEN_VALUE}")
        guard(all(1 <= w <= MAX_PATTERN_WIDTH for w in self.widths),
              f"pattern widths must be 1..{MAX_PATTERN_WIDTH}")
        guard(all(r >= 0 for r in self.radii), "radii must be nonnegative")
        guard(self.training_sets >= 1, "training_sets must be >= 1")
        guard(self.max_samples >= 1, "max_samples must be >= 1")
        guard(self.output_bits >= 1, "output_bits must be >= 1")
        guard(self.bias_vectors >= 1, "bias_vectors must be >= 1")


@dataclass
class PropertyResult:
    name: str
    params: dict[str, int]
    passed: bool
    measured: int | None = None
    claimed: int | None = None
    counterexample: str | None = None
    note: str | None = None

    def machine_line(self) -> str:
        params = ",".join(f"{k}={v}" for k, v in self.params.items()) or "-"
        tokens = ["pass" if self.passed else "fail"]
        if self.measured is not None:
            tokens.append(f"measured={self.measured}")
        if self.claimed is not None:
            tokens.append(f"claimed={self.claimed}")
        if self.counterexample is not None:
            tokens.append(f"counterexample={self.counterexample}")
        return f"{self.name}\t{params}\t{' '.join(tokens)}"

    def human_line(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        head = "ok  " if self.passed else "FAIL"
        line = f"{head} {self.name}" + (f" [{params}]" if params else "")
        if self.measured is not None:
            line += f" measured={self.measured}"
        if self.claimed is not None:
            line += f" claimed={self.claimed}"
        if self.counterexample is not None:
            line += f" counterexample: {self.counterexample}"
        if self.note:
            line += f" ({self.note})"
        return line


@dataclass
class PropertyReport:
    results: list[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def render_machine(self) -> str:
        return "\n".join(r.machine_line() for r in self.results) + "\n"

    def render_human(self) -> str:
        ok = sum(1 for r in self.results if r.passed)
        lines = [r.human_line() for r in self.results]
        lines.append(f"passed {ok}/{len(self.results)} checks")
        return "\n".join(lines) + "\n"


def _all_words(width: int) -> list[BitWord]:
    return [bitvec.binary_encode(v, width) for v in range(1 << width)]


def check_metric_axioms(length: int) -> PropertyResult:
    """Symmetry, identity, and triangle inequality over the whole hypercube."""
    words = _all_words(length)
    count = len(words)
    dist = [[bitvec.hamming_distance(a, b) for b in words] for a in words]
    for i in range(count):
        for j in range(i, count):
            if dist[i][j] != dist[j][i]:
                return PropertyResult(
                    "metric-symmetry", {"len": length}, False,
                    counterexample=f"a={words[i]},b={words[j]}")
            if (dist[i][j] == 0) != (i == j):
                return PropertyResult(
                    "metric-identity", {"len": length}, False,
                    counterexample=f"a={words[i]},b={words[j]},d={dist[i][j]}")
    for i in range(count):
        di = dist[i]
        for j in range(count):
            dij = di[j]
            dj = dist[j]
            for c in range(count):
                if di[c] > dij + dj[c]:
                    return PropertyResult(
                        "metric-triangle", {"len": length}, False,
                        counterexample=(
                            f"a={words[i]},b={words[j]},c={words[c]}"))
    return PropertyResult("metric-axioms", {"len": length}, True)


def check_gray_adjacency(width: int) -> PropertyResult:
    for n in range((1 << width) - 1):
        d = bitvec.hamming_distance(
            bitvec.gray_encode(n, width), bitvec.gray_encode(n + 1, width))
        if d != 1:
            return PropertyResult(
                "gray-adjacency", {"width": width}, False,
                counterexample=f"n={n},d={d}")
    return PropertyResult("gray-adjacency", {"width": width}, True)


def check_gray_roundtrip(width: int) -> PropertyResult:
    for n in range(1 << width):
        back = bitvec.gray_decode(bitvec.gray_encode(n, width))
        if back != n:
            return PropertyResult(
                "gray-roundtrip", {"width": width}, False,
                counterexample=f"n={n},back={back}")
    return PropertyResult("gray-roundtrip", {"width": width}, True)


def check_binary_nonuniformity() -> PropertyResult:
    """Close values (3,4) are farther apart in binary than distant ones (1,5)."""
    near = bitvec.hamming_distance(
        bitvec.binary_encode(3, 4), bitvec.binary_encode(4, 4))
    far = bitvec.hamming_distance(
        bitvec.binary_encode(1, 4), bitvec.binary_encode(5, 4))
    ok = near == 3 and far == 1 and near > far
    return PropertyResult(
        "binary-nonuniformity-witness", {"width": 4}, ok,
        counterexample=None if ok else f"d(3,4)={near},d(1,5)={far}")


def check_gray_nonuniformity() -> PropertyResult:
    """Gray distance 1 both for adjacent (3,4) and non-adjacent (1,6) values."""
    adjacent = bitvec.hamming_distance(
        bitvec.gray_encode(3, 4), bitvec.gray_encode(4, 4))
    distant = bitvec.hamming_distance(
        bitvec.gray_encode(1, 4), bitvec.gray_encode(6, 4))
    ok = adjacent == 1 and distant == 1
    return PropertyResult(
        "gray-nonuniformity-witness", {"width": 4}, ok,
        counterexample=None if ok else f"d(3,4)={adjacent},d(1,6)={distant}")


def check_uniform_distance_law(length: int) -> PropertyResult:
    """d(fixed(x), fixed(y)) == |x - y| for every pair of encodable values."""
    for x in range(length + 1):
        wx = codes.encode_fixed(x, length)
        for y in range(length + 1):
            d = bitvec.hamming_distance(wx, codes.encode_fixed(y, length))
            if d != abs(x - y):
                return PropertyResult(
                    "uniform-distance-law", {"L": length}, False,
                    counterexample=f"x={x},y={y},d={d},want={abs(x - y)}")
    return PropertyResult("uniform-distance-law", {"L": length}, True)


def check_weight_monotone(length: int) -> PropertyResult:
    weights = [bitvec.hamming_weight(codes.encode_fixed(n, length))
               for n in range(length + 1)]
    for n in range(length):
        if not weights[n + 1] > weights[n]:
            return PropertyResult(
                "weight-monotone", {"L": length}, False,
                counterexample=f"n={n},w={weights[n]},w_next={weights[n + 1]}")
    return PropertyResult("weight-monotone", {"L": length}, True)


def check_roundtrip_basic(max_value: int) -> PropertyResult:
    for n in range(max_value + 1):
        back = codes.decode_basic(codes.encode_basic(n))
        if back != n:
            return PropertyResult(
                "roundtrip-basic", {"N": max_value}, False,
                counterexample=f"n={n},back={back}")
    return PropertyResult("roundtrip-basic", {"N": max_value}, True)


def check_roundtrip_fixed(length: int) -> PropertyResult:
    for n in range(length + 1):
        back = codes.decode_fixed(codes.encode_fixed(n, length))
        if back != n:
            return PropertyResult(
                "roundtrip-fixed", {"L": length}, False,
                counterexample=f"n={n},back={back}")
    return PropertyResult("roundtrip-fixed", {"L": length}, True)


def check_thermometer_equivalence(length: int) -> PropertyResult:
    """Left-filled transform of one-hot v equals the reversed right-filled code."""
    for v in range(1, length + 1):
        left = codes.one_hot_to_thermometer(codes.encode_one_hot(v, length))
        right = codes.encode_fixed(v, length).reverse()
        if left != right:
            return PropertyResult(
                "thermometer-equivalence", {"L": length}, False,
                counterexample=f"v={v},transform={left},reversed={right}")
    return PropertyResult("thermometer-equivalence", {"L": length}, True)


def check_generalized_scaling(k: int, max_value: int) -> PropertyResult:
    """d(gen(x), gen(y)) == k * |x - y| for every pair."""
    for x in range(max_value + 1):
        wx = codes.encode_generalized(x, k, max_value)
        for y in range(max_value + 1):
            d = bitvec.hamming_distance(
                wx, codes.encode_generalized(y, k, max_value))
            if d != k * abs(x - y):
                return PropertyResult(
                    "generalized-scaling", {"k": k, "N": max_value}, False,
                    counterexample=f"x={x},y={y},d={d},want={k * abs(x - y)}")
    return PropertyResult("generalized-scaling", {"k": k, "N": max_value}, True)


def check_generalized_min_distance(k: int, max_value: int) -> PropertyResult:
    """Audit the k-repetition codebook's measured minimum distance.

    The measured value is compared against the claimed k - 1; adjacent values
    differ in exactly k positions, so the expected measurement is k.
    """
    book = codes.build_codebook(
        codes.CodeSpec("generalized", max_value=max_value, repetition=k))
    measured = codes.min_pairwise_distance(book)
    claimed = k - 1
    note = None
    if measured != claimed:
        note = f"measured minimum distance {measured} differs from claimed k-1={claimed}"
    return PropertyResult(
        "generalized-min-distance", {"k": k, "N": max_value},
        passed=measured == k, measured=measured, claimed=claimed, note=note)


def _oracle_distance(a: int, b: int) -> int:
    """Independent popcount route, bypassing BitWord arithmetic."""
    return (a ^ b).bit_count()


def check_radius_law(
    width: int, radius: int, sets: int, max_samples: int,
    output_bits: int, rng: Lcg64,
) -> PropertyResult:
    """Hidden neuron i fires on x iff oracle distance(x, x_i) <= r."""
    params = {"width": width, "r": radius, "sets": sets}
    inputs = _all_words(width)
    for t in range(sets):
        samples = rng.next_training_set(max_samples, width, output_bits)
        net = cc4.train(samples, radius)
        anchors = [s.input.to_int() for s in samples]
        for x in inputs:
            fired = cc4.hidden_activations(net, x)
            xi = x.to_int()
            for i, anchor in enumerate(anchors):
                expected = 1 if _oracle_distance(xi, anchor) <= radius else 0
                if fired[i] != expected:
                    return PropertyResult(
                        "radius-law", params, False,
                        counterexample=(
                            f"set={t},neuron={i},x={x},fired={fired[i]},"
                            f"dist={_oracle_distance(xi, anchor)}"))
    return PropertyResult("radius-law", params, True)


def check_training_reproduction(
    width: int, radius: int, sets: int, max_samples: int,
    output_bits: int, rng: Lcg64,
) -> PropertyResult:
    """infer on each training input matches the distance-derived vote.

    Ties and conflicts between overlapping regions resolve to 0 by the strict
    step rule, so the expected bit is vote > 0, not the sample's own bit.
    """
    params = {"width": width, "r": radius, "sets": sets}
    for t in range(sets):
        samples = rng.next_training_set(max_samples, width, output_bits)
        net = cc4.train(samples, radius)
        anchors = [s.input.to_int() for s in samples]
        for i, sample in enumerate(samples):
            fired = [j for j, a in enumerate(anchors)
                     if _oracle_distance(anchors[i], a) <= radius]
            expected_bits = []
            for o in range(output_bits):
                vote = sum(1 if samples[j].output[o] else -1 for j in fired)
                expected_bits.append(1 if vote > 0 else 0)
            got = cc4.infer(net, sample.input)
            if got != BitWord(tuple(expected_bits)):
                return PropertyResult(
                    "training-reproduction", params, False,
                    counterexample=f"set={t},sample={i},got={got},"
                                   f"want={''.join(map(str, expected_bits))}")
    return PropertyResult("training-reproduction", params, True)


def check_bias_rule(
    count: int, width: int, radius: int, rng: Lcg64
) -> PropertyResult:
    """Serialized bias weight is r - s + 1, and r + 1 for the all-zero vector."""
    params = {"count": count, "width": width, "r": radius}
    samples = [cc4.TrainingSample(rng.next_word(width), rng.next_word(1))
               for _ in range(count)]
    samples.append(cc4.TrainingSample(BitWord.zeros(width), rng.next_word(1)))
    net = cc4.train(samples, radius)
    rows = cc4.save_network(net).splitlines()[1:1 + len(samples)]
    for i, sample in enumerate(samples):
        s = sum(sample.input.bits)
        bias = int(rows[i].split()[-1])
        if bias != radius - s + 1:
            return PropertyResult(
                "bias-rule", params, False,
                counterexample=f"sample={i},s={s},bias={bias},want={radius - s + 1}")
    zero_bias = int(rows[-1].split()[-1])
    if zero_bias != radius + 1:
        return PropertyResult(
            "bias-rule", params, False,
            counterexample=f"all-zero bias={zero_bias},want={radius + 1}")
    return PropertyResult("bias-rule", params, True)


def check_complement_symmetry(
    width: int, max_samples: int, output_bits: int, radius: int, rng: Lcg64
) -> PropertyResult:
    """Negating output column i bit o == retraining with that bit complemented."""
    params = {"width": width, "r": radius}
    samples = rng.next_training_set(max_samples, width, output_bits)
    net = cc4.train(samples, radius)
    for i, sample in enumerate(samples):
        for o in range(output_bits):
            flipped_bits = list(sample.output.bits)
            flipped_bits[o] ^= 1
            flipped = samples.copy()
            flipped[i] = cc4.TrainingSample(sample.input, BitWord(tuple(flipped_bits)))
            retrained = cc4.train(flipped, radius)
            negated = [list(row) for row in net.output_weights]
            negated[o][i] = -negated[o][i]
            expected = replace(
                net, output_weights=tuple(tuple(row) for row in negated))
            if retrained != expected:
                return PropertyResult(
                    "complement-symmetry", params, False,
                    counterexample=f"sample={i},bit={o}")
    return PropertyResult("complement-symmetry", params, True)


class _CountingSamples(list):
    """List that counts how many times it is iterated."""

    iterations = 0

    def __iter__(self):
        self.iterations += 1
        return super().__iter__()


def check_one_pass(width: int, max_samples: int, output_bits: int,
                   rng: Lcg64) -> PropertyResult:
    params = {"width": width, "samples": max_samples}
    samples = _CountingSamples(
        rng.next_training_set(max_samples, width, output_bits))
    net = cc4.train(samples, 1)
    ok = samples.iterations == 1 and net.hidden_count == len(samples)
    return PropertyResult(
        "one-pass-training", params, ok,
        counterexample=None if ok else f"iterations={samples.iterations}")


def check_integer_exactness(width: int, rng: Lcg64) -> PropertyResult:
    """All weights and activations are exact ints over the full input space."""
    params = {"width": width}
    samples = rng.next_training_set(5, width, 2)
    net = cc4.train(samples, 1)
    weights_ok = all(
        type(w) is int for row in net.hidden_weights + net.output_weights
        for w in row)
    bits_ok = True
    for x in _all_words(width):
        acts = cc4.hidden_activations(net, x)
        out = cc4.infer(net, x)
        if not all(type(b) is int and b in (0, 1) for b in list(acts) + list(out)):
            bits_ok = False
            break
    ok = weights_ok and bits_ok
    return PropertyResult(
        "integer-exactness", params, ok,
        counterexample=None if ok else "non-integer value observed")


def run_property_checks(grid: CheckGrid) -> PropertyReport:
    """Execute every library invariant over the grid, in a fixed order."""
    report = PropertyReport()
    add = report.results.append

    for length in range(1, grid.metric_max_len + 1):
        add(check_metric_axioms(length))
    for width in range(1, grid.gray_width + 1):
        add(check_gray_adjacency(width))
        add(check_gray_roundtrip(width))
    add(check_binary_nonuniformity())
    add(check_gray_nonuniformity())

    for length in grid.fixed_lengths:
        add(check_uniform_distance_law(length))
        add(check_weight_monotone(length))
        add(check_roundtrip_fixed(length))
        add(check_thermometer_equivalence(length))
    add(check_roundtrip_basic(max(grid.fixed_lengths)))
    for k in grid.gen_ks:
        add(check_generalized_scaling(k, grid.gen_max_value))
        add(check_generalized_min_distance(k, grid.gen_max_value))

    rng = Lcg64(grid.seed + OFFSET_RADIUS_LAW)
    for width in grid.widths:
        for radius in grid.radii:
            add(check_radius_law(
                width, radius, grid.training_sets, grid.max_samples,
                grid.output_bits, rng))
    rng = Lcg64(grid.seed + OFFSET_REPRODUCTION)
    for width in grid.widths:
        for radius in grid.radii:
            add(check_training_reproduction(
                width, radius, grid.training_sets, grid.max_samples,
                grid.output_bits, rng))
    rng = Lcg64(grid.seed + OFFSET_BIAS)
    for radius in grid.radii:
        add(check_bias_rule(grid.bias_vectors, max(grid.widths), radius, rng))
    rng = Lcg64(grid.seed + OFFSET_COMPLEMENT)
    for radius in grid.radii:
        add(check_complement_symmetry(
            min(grid.widths), grid.max_samples, grid.output_bits, radius, rng))
    rng = Lcg64(grid.seed + OFFSET_EXACTNESS)
    add(check_one_pass(min(grid.widths), grid.max_samples, grid.output_bits, rng))
    add(check_integer_exactness(min(grid.widths), rng))
    return report


QUICK_GRID = CheckGrid(
    metric_max_len=4, gray_width=8, fixed_lengths=(8, 16), gen_ks=(2, 3),
    widths=(4, 6), radii=(0, 1, 2), training_sets=5, bias_vectors=50)

_GRID_KEYS = {
    "metric": "metric_max_len",
    "gray": "gray_width",
    "lengths": "fixed_lengths",
    "ks": "gen_ks",
    "n": "gen_max_value",
    "widths": "widths",
    "radii": "radii",
    "sets": "training_sets",
    "samples": "max_samples",
    "outbits": "output_bits",
    "bias": "bias_vectors",
    "seed": "seed",
}
_TUPLE_KEYS = {"fixed_lengths", "gen_ks", "widths", "radii"}


def parse_grid(spec: str) -> CheckGrid:
    """Parse a grid spec: 'default', 'quick', or comma-separated key=value.

    Multi-valued keys (lengths, ks, widths, radii) accept 'lo-hi' ranges and
    'a/b/c' lists, e.g. 'widths=4/8,radii=0-3,sets=5,seed=7'.
    """
    if spec == "default":
        return CheckGrid()
    if spec == "quick":
        return QUICK_GRID
    overrides: dict[str, object] = {}
    for item in spec.split(","):
        if "=" not in item:
            raise ValueError(f"bad grid item {item!r}, expected key=value")
        key, _, raw = item.partition("=")
        key = key.strip()
        if key not in _GRID_KEYS:
            raise ValueError(
                f"unknown grid key {key!r}; known: {', '.join(sorted(_GRID_KEYS))}")
        attr = _GRID_KEYS[key]
        try:
            if attr in _TUPLE_KEYS:
                if "-" in raw:
                    lo, _, hi = raw.partition("-")
                    overrides[attr] = tuple(range(int(lo), int(hi) + 1))
                else:
                    overrides[attr] = tuple(int(v) for v in raw.split("/"))
            else:
                overrides[attr] = int(raw)
        except ValueError as exc:
            raise ValueError(f"bad value for grid key {key!r}: {raw!r}") from exc
    return replace(CheckGrid(), **overrides)
