"""CC4 corner-classification network: one-pass integer training and
binary-step inference with a Hamming radius of generalization.

Training assigns every weight directly from the data, in a single pass and
in exact integer arithmetic. Each hidden neuron memorizes one training
vector: its pattern weights are +1 where that vector has a 1 and -1 where it
has a 0, and its bias weight is r - s + 1 (s = number of 1s in the vector).
For a query at Hamming distance d from the vector, the hidden summation is
exactly r + 1 - d, so the neuron fires precisely when d <= r. Output weights
are +1/-1 copies of the desired output bits, and both layers step at
"strictly positive": a summation of exactly 0 yields 0 (no decision).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitvec import BitWord, binary_encode

MODEL_MAGIC = "CC4"
MODEL_VERSION = 1

# generalization_region enumerates 2^(pattern width) words
ENUMERATION_LIMIT = 20


@dataclass(frozen=True)
class TrainingSample:
    input: BitWord
    output: BitWord


@dataclass(frozen=True)
class CC4Network:
    """Immutable trained network.

    hidden_weights is h rows of n integers (bias weight last); output_weights
    is m rows of h integers, all +1 or -1. n counts the bias position, so
    queries carry n - 1 pattern bits.
    """

    radius: int
    hidden_weights: tuple[tuple[int, ...], ...]
    output_weights: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.radius < 0:
            raise ValueError("radius must be nonnegative")
        if not self.hidden_weights:
            raise ValueError("network has no hidden neurons")
        n = len(self.hidden_weights[0])
        if n < 2:
            raise ValueError("input width must cover at least one pattern bit plus bias")
        for row in self.hidden_weights:
            if len(row) != n:
                raise ValueError("ragged hidden weight rows")
            for w in row[:-1]:
                if w not in (-1, 1):
                    raise ValueError(f"pattern weight {w} outside {{-1, 1}}")
        h = len(self.hidden_weights)
        for row in self.output_weights:
            if len(row) != h:
                raise ValueError("output weight row width does not match hidden count")
            for w in row:
                if w not in (-1, 1):
                    raise ValueError(f"output weight {w} outside {{-1, 1}}")

    @property
    def input_width(self) -> int:
        """n: pattern bits plus the trailing bias position."""
        return len(self.hidden_weights[0])

    @property
    def pattern_width(self) -> int:
        return self.input_width - 1

    @property
    def hidden_count(self) -> int:
        return len(self.hidden_weights)

    @property
    def output_count(self) -> int:
        return len(self.output_weights)


def train(samples: list[TrainingSample], radius: int) -> CC4Network:
    """Build the network in one pass over the samples.

    One hidden neuron per sample, in sample order; duplicate or contradictory
    inputs each still get their own neuron.
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    hidden_rows = []
    out_columns = []
    in_width = out_width = None
    for idx, sample in enumerate(samples):
        if in_width is None:
            in_width, out_width = len(sample.input), len(sample.output)
        elif len(sample.input) != in_width:
            raise ValueError(
                f"sample {idx} input length {len(sample.input)} != {in_width}"
            )
        elif len(sample.output) != out_width:
            raise ValueError(
                f"sample {idx} output length {len(sample.output)} != {out_width}"
            )
        s = sum(sample.input.bits)
        row = tuple(1 if b else -1 for b in sample.input.bits) + (radius - s + 1,)
        hidden_rows.append(row)
        out_columns.append(tuple(1 if b else -1 for b in sample.output.bits))
    if not hidden_rows:
        raise ValueError("no training samples")
    output_rows = tuple(zip(*out_columns))  # transpose to m rows x h columns
    return CC4Network(radius, tuple(hidden_rows), output_rows)


def _check_query(net: CC4Network, x: BitWord) -> None:
    if len(x) != net.pattern_width:
        raise ValueError(
            f"query length {len(x)} != pattern width {net.pattern_width}"
        )


def hidden_activations(net: CC4Network, x: BitWord) -> BitWord:
    """Hidden-layer step outputs for query x (bias input of 1 appended)."""
    _check_query(net, x)
    bits = []
    for row in net.hidden_weights:
        # Only positions where x has a 1 contribute; the bias weight always does.
        s = row[-1] + sum(w for w, b in zip(row, x.bits) if b)
        bits.append(1 if s > 0 else 0)
    return BitWord(tuple(bits))


def infer(net: CC4Network, x: BitWord) -> BitWord:
    """Output-layer step outputs; all-zero means no region claimed the query."""
    hidden = hidden_activations(net, x)
    bits = []
    for row in net.output_weights:
        s = sum(w for w, a in zip(row, hidden.bits) if a)
        bits.append(1 if s > 0 else 0)
    return BitWord(tuple(bits))


def generalization_region(net: CC4Network, hidden_index: int) -> set[BitWord]:
    """Every query that makes the given hidden neuron fire.

    By the weight assignment this is exactly the Hamming ball of radius r
    around that neuron's training vector.
    """
    if not 0 <= hidden_index < net.hidden_count:
        raise ValueError(f"hidden index {hidden_index} outside 0..{net.hidden_count - 1}")
    width = net.pattern_width
    if width > ENUMERATION_LIMIT:
        raise ValueError(
            f"pattern width {width} exceeds enumeration limit {ENUMERATION_LIMIT}"
        )
    row = net.hidden_weights[hidden_index]
    region = set()
    for value in range(1 << width):
        x = binary_encode(value, width)
        s = row[-1] + sum(w for w, b in zip(row, x.bits) if b)
        if s > 0:
            region.add(x)
    return region


def save_network(net: CC4Network) -> str:
    """Canonical line-oriented text form; round-trips bit-exactly."""
    lines = [
        f"{MODEL_MAGIC} {MODEL_VERSION} {net.input_width} "
        f"{net.hidden_count} {net.output_count} {net.radius}"
    ]
    for row in net.hidden_weights:
        lines.append(" ".join(str(w) for w in row))
    for row in net.output_weights:
        lines.append(" ".join(str(w) for w in row))
    return "\n".join(lines) + "\n"


def load_network(text: str) -> CC4Network:
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty model text")
    header = lines[0].split()
    if len(header) != 6 or header[0] != MODEL_MAGIC:
        raise ValueError(f"bad model header: {lines[0]!r}")
    try:
        version, n, h, m, radius = (int(f) for f in header[1:])
    except ValueError:
        raise ValueError(f"non-integer field in model header: {lines[0]!r}") from None
    if version != MODEL_VERSION:
        raise ValueError(f"unsupported model version {version}")
    if len(lines) != 1 + h + m:
        raise ValueError(f"expected {1 + h + m} lines, found {len(lines)}")

    def parse_row(line: str, width: int, what: str) -> tuple[int, ...]:
        fields = line.split()
        if len(fields) != width:
            raise ValueError(f"{what} row has {len(fields)} fields, expected {width}")
        try:
            return tuple(int(f) for f in fields)
        except ValueError:
            raise ValueError(f"non-integer weight in {what} row: {line!r}") from None

    hidden = tuple(parse_row(lines[1 + i], n, "hidden") for i in range(h))
    output = tuple(parse_row(lines[1 + h + i], h, "output") for i in range(m))
    return CC4Network(radius, hidden, output)
