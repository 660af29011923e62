"""Integer-feature datasets, unary quantization into training samples, and
exact-match evaluation of trained networks.

CSV contract: a header row naming the feature columns and ending in `label`,
then integer fields separated by commas, no quoting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .bitvec import BitWord
from .cc4 import CC4Network, TrainingSample, infer, train
from .codes import encode_fixed, encode_one_hot

QUANT_FAMILIES = ("fixed", "one_hot")


@dataclass(frozen=True)
class Dataset:
    feature_names: tuple[str, ...]
    rows: tuple[tuple[tuple[int, ...], int], ...]
    feature_ranges: tuple[tuple[int, int], ...]

    @property
    def num_classes(self) -> int:
        return max(label for _, label in self.rows) + 1


@dataclass(frozen=True)
class QuantizationSpec:
    """Per-feature binning and encoding parameters.

    Every feature is linearly binned into `bins` buckets and encoded into a
    segment of `length` bits; segments are concatenated in column order.
    """

    bins: int
    length: int
    family: str = "fixed"

    def __post_init__(self) -> None:
        if self.bins < 1:
            raise ValueError("bins must be >= 1")
        if self.length < self.bins:
            raise ValueError(f"length {self.length} < bins {self.bins}")
        if self.family not in QUANT_FAMILIES:
            raise ValueError(f"unknown quantization family {self.family!r}")


def parse_dataset(text: str, source: str = "<data>") -> Dataset:
    lines = text.splitlines()
    if not lines:
        raise ValueError(f"{source}: empty file")
    header = lines[0].split(",")
    if len(header) < 2 or header[-1] != "label":
        raise ValueError(
            f"{source}: line 1: header must name feature columns then 'label'"
        )
    names = tuple(h.strip() for h in header[:-1])
    arity = len(names)
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split(",")
        if len(fields) != arity + 1:
            raise ValueError(
                f"{source}: line {lineno}: expected {arity + 1} fields, got {len(fields)}"
            )
        try:
            values = tuple(int(f) for f in fields)
        except ValueError:
            raise ValueError(f"{source}: line {lineno}: non-integer field") from None
        label = values[-1]
        if label < 0:
            raise ValueError(f"{source}: line {lineno}: negative label {label}")
        rows.append((values[:-1], label))
    if not rows:
        raise ValueError(f"{source}: no rows")
    labels = {label for _, label in rows}
    missing = set(range(max(labels) + 1)) - labels
    if missing:
        raise ValueError(
            f"{source}: labels not dense in 0..{max(labels)}: missing {sorted(missing)}"
        )
    ranges = tuple(
        (min(r[0][i] for r in rows), max(r[0][i] for r in rows))
        for i in range(arity)
    )
    return Dataset(names, tuple(rows), ranges)


def load_dataset(path: str) -> Dataset:
    with open(path, "r", encoding="ascii") as fh:
        return parse_dataset(fh.read(), source=str(path))


def bin_index(value: int, lo: int, hi: int, bins: int, clamp: bool = False) -> int:
    """floor((value - lo) * bins / (hi - lo + 1)), always within 0..bins-1."""
    if value < lo or value > hi:
        if not clamp:
            raise ValueError(f"value {value} outside declared range {lo}..{hi}")
        value = min(max(value, lo), hi)
    return (value - lo) * bins // (hi - lo + 1)


def quantize_encode(
    ds: Dataset, q: QuantizationSpec, clamp: bool = False
) -> list[TrainingSample]:
    """Bin and encode every row; labels become one-hot output words."""
    classes = ds.num_classes
    samples = []
    for features, label in ds.rows:
        segments: list[int] = []
        for value, (lo, hi) in zip(features, ds.feature_ranges):
            b = bin_index(value, lo, hi, q.bins, clamp=clamp)
            if q.family == "fixed":
                segments.extend(encode_fixed(b, q.length).bits)
            else:
                segments.extend(encode_one_hot(b + 1, q.length).bits)
        samples.append(
            TrainingSample(
                BitWord(tuple(segments)), encode_one_hot(label + 1, classes)
            )
        )
    return samples


@dataclass
class EvalReport:
    total: int
    exact_matches: int
    no_decision: int
    # expected output bitstring -> (matches, total)
    per_class: dict[str, tuple[int, int]] = field(default_factory=dict)

    @property
    def accuracy(self) -> float:
        return self.exact_matches / self.total

    def lines(self) -> list[str]:
        out = [
            f"samples\t{self.total}",
            f"exact_matches\t{self.exact_matches}",
            f"accuracy\t{self.accuracy:.4f}",
            f"no_decision\t{self.no_decision}",
        ]
        for key in sorted(self.per_class):
            matches, total = self.per_class[key]
            out.append(f"class\t{key}\t{matches}/{total}")
        return out


def evaluate(net: CC4Network, samples: list[TrainingSample]) -> EvalReport:
    """Exact-match rates plus the count of all-zero (no decision) outputs."""
    if not samples:
        raise ValueError("no samples to evaluate")
    report = EvalReport(total=len(samples), exact_matches=0, no_decision=0)
    for sample in samples:
        got = infer(net, sample.input)
        key = str(sample.output)
        matches, total = report.per_class.get(key, (0, 0))
        hit = got == sample.output
        report.per_class[key] = (matches + (1 if hit else 0), total + 1)
        if hit:
            report.exact_matches += 1
        if sum(got.bits) == 0:
            report.no_decision += 1
    return report


def hamming_ball_volume(width: int, radius: int) -> int:
    """Number of words within the given radius of any fixed word."""
    return sum(math.comb(width, d) for d in range(min(radius, width) + 1))


@dataclass(frozen=True)
class SweepRow:
    radius: int
    accuracy: float
    exact_matches: int
    total: int
    no_decision: int
    ball_volume: int


def sweep_radius(
    samples: list[TrainingSample],
    radii: list[int],
    eval_samples: list[TrainingSample] | None = None,
) -> list[SweepRow]:
    """Train one network per radius and tabulate accuracy and conflicts.

    Evaluates on eval_samples when given (a held-out split), otherwise on the
    training samples themselves.
    """
    if not radii:
        raise ValueError("empty radius range")
    target = eval_samples if eval_samples else samples
    rows = []
    for r in radii:
        net = train(samples, r)
        rep = evaluate(net, target)
        rows.append(
            SweepRow(
                radius=r,
                accuracy=rep.accuracy,
                exact_matches=rep.exact_matches,
                total=rep.total,
                no_decision=rep.no_decision,
                ball_volume=hamming_ball_volume(net.pattern_width, r),
            )
        )
    return rows


def sweep_table(rows: list[SweepRow]) -> str:
    lines = ["r\taccuracy\texact\tno_decision\tball_volume"]
    for row in rows:
        lines.append(
            f"{row.radius}\t{row.accuracy:.4f}\t{row.exact_matches}/{row.total}"
            f"\t{row.no_decision}\t{row.ball_volume}"
        )
    return "\n".join(lines) + "\n"
