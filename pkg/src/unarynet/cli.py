"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 property-check failure.
"""

from __future__ import annotations

import argparse
import sys

from . import cc4, checks, codes, dataset, tables
from .bitvec import BitWord


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unarynet",
        description="Unary code families, Hamming tooling, and radius-based "
                    "integer-trained classification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="encode an integer into a code family")
    p.add_argument("--family", required=True,
                   choices=["basic", "fixed", "one-hot", "generalized"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--length", type=int)
    p.add_argument("--k", type=int)

    p = sub.add_parser("decode", help="decode a codeword back to its integer")
    p.add_argument("--family", required=True,
                   choices=["basic", "fixed", "one-hot", "generalized"])
    p.add_argument("--word", required=True)
    p.add_argument("--k", type=int)

    p = sub.add_parser("table", help="print a reference code table")
    p.add_argument("--which", required=True, choices=["1", "2"])

    p = sub.add_parser("train", help="train a model from a CSV dataset")
    p.add_argument("--data", required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--bins", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--family", choices=["fixed", "one-hot"], default="fixed")
    p.add_argument("--clamp", action="store_true",
                   help="clamp out-of-range feature values instead of failing")

    p = sub.add_parser("predict", help="run one encoded input through a model")
    p.add_argument("--model", required=True)
    p.add_argument("--input", required=True)

    p = sub.add_parser("eval", help="evaluate a model on a CSV dataset")
    p.add_argument("--model", required=True)
    p.add_argument("--data", required=True)
    p.add_argument("--bins", type=int,
                   help="bins used at training time (default: inferred length)")
    p.add_argument("--length", type=int,
                   help="per-feature code length used at training time "
                        "(default: model width / feature count)")
    p.add_argument("--family", choices=["fixed", "one-hot"], default="fixed")
    p.add_argument("--clamp", action="store_true")

    p = sub.add_parser("sweep", help="tabulate accuracy per radius")
    p.add_argument("--data", required=True)
    p.add_argument("--r-min", type=int, required=True)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--bins", type=int,
                   help="default: widest feature range in the data")
    p.add_argument("--length", type=int, help="default: same as bins")
    p.add_argument("--family", choices=["fixed", "one-hot"], default="fixed")
    p.add_argument("--holdout-every", type=int, metavar="N",
                   help="hold out every Nth row for evaluation")

    p = sub.add_parser("check", help="run the exhaustive property checks")
    p.add_argument("--grid", default="default",
                   help="'default', 'quick', or key=value list "
                        "(e.g. 'widths=4/8,radii=0-3,sets=5,seed=7')")
    p.add_argument("--machine", action="store_true",
                   help="emit the line-oriented machine format")
    return parser


def _family_key(family: str) -> str:
    return family.replace("-", "_")


def _cmd_encode(args) -> int:
    family = _family_key(args.family)
    if family == "basic":
        word = codes.encode_basic(args.n)
    elif family == "fixed":
        if args.length is None:
            raise ValueError("--length is required for the fixed family")
        word = codes.encode_fixed(args.n, args.length)
    elif family == "one_hot":
        if args.length is None:
            raise ValueError("--length is required for the one-hot family")
        word = codes.encode_one_hot(args.n, args.length)
    else:
        if args.k is None:
            raise ValueError("--k is required for the generalized family")
        if args.length is not None:
            if (args.length - 1) % args.k != 0:
                raise ValueError(
                    f"--length {args.length} is not k*N+1 for k={args.k}")
            max_value = (args.length - 1) // args.k
        else:
            max_value = args.n
        word = codes.encode_generalized(args.n, args.k, max_value)
    print(word)
    return 0


def _cmd_decode(args) -> int:
    family = _family_key(args.family)
    word = BitWord.from_string(args.word)
    if family == "basic":
        value = codes.decode_basic(word)
    elif family == "fixed":
        value = codes.decode_fixed(word)
    elif family == "one_hot":
        value = codes.decode_one_hot(word)
    else:
        if args.k is None:
            raise ValueError("--k is required for the generalized family")
        value = codes.decode_generalized(word, args.k)
    print(value)
    return 0


def _cmd_table(args) -> int:
    sys.stdout.write(tables.emit_table(int(args.which)))
    return 0


def _cmd_train(args) -> int:
    ds = dataset.load_dataset(args.data)
    q = dataset.QuantizationSpec(args.bins, args.length, _family_key(args.family))
    samples = dataset.quantize_encode(ds, q, clamp=args.clamp)
    net = cc4.train(samples, args.radius)
    with open(args.out, "w", encoding="ascii") as fh:
        fh.write(cc4.save_network(net))
    print(f"trained n={net.input_width} h={net.hidden_count} "
          f"m={net.output_count} r={net.radius} -> {args.out}")
    return 0


def _load_model(path: str) -> cc4.CC4Network:
    with open(path, "r", encoding="ascii") as fh:
        return cc4.load_network(fh.read())


def _cmd_predict(args) -> int:
    net = _load_model(args.model)
    print(cc4.infer(net, BitWord.from_string(args.input)))
    return 0


def _cmd_eval(args) -> int:
    net = _load_model(args.model)
    ds = dataset.load_dataset(args.data)
    length = args.length
    if length is None:
        if net.pattern_width % len(ds.feature_names) != 0:
            raise ValueError(
                f"cannot infer per-feature length: model width {net.pattern_width} "
                f"is not a multiple of {len(ds.feature_names)} features")
        length = net.pattern_width // len(ds.feature_names)
    bins = args.bins if args.bins is not None else length
    q = dataset.QuantizationSpec(bins, length, _family_key(args.family))
    samples = dataset.quantize_encode(ds, q, clamp=args.clamp)
    report = dataset.evaluate(net, samples)
    for line in report.lines():
        print(line)
    return 0


def _cmd_sweep(args) -> int:
    if args.r_min < 0 or args.r_max < args.r_min:
        raise ValueError(f"bad radius range {args.r_min}..{args.r_max}")
    ds = dataset.load_dataset(args.data)
    if args.bins is None:
        bins = max(hi - lo + 1 for lo, hi in ds.feature_ranges)
    else:
        bins = args.bins
    length = args.length if args.length is not None else bins
    q = dataset.QuantizationSpec(bins, length, _family_key(args.family))
    samples = dataset.quantize_encode(ds, q)
    eval_samples = None
    if args.holdout_every is not None:
        if args.holdout_every < 2:
            raise ValueError("--holdout-every must be >= 2")
        eval_samples = samples[::args.holdout_every]
        samples = [s for i, s in enumerate(samples) if i % args.holdout_every]
        if not samples or not eval_samples:
            raise ValueError("holdout split left an empty set")
    rows = dataset.sweep_radius(
        samples, list(range(args.r_min, args.r_max + 1)), eval_samples)
    sys.stdout.write(dataset.sweep_table(rows))
    return 0


def _cmd_check(args) -> int:
    grid = checks.parse_grid(args.grid)
    report = checks.run_property_checks(grid)
    if args.machine:
        sys.stdout.write(report.render_machine())
    else:
        sys.stdout.write(report.render_human())
    return 0 if report.passed else 2


_HANDLERS = {
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "table": _cmd_table,
    "train": _cmd_train,
    "predict": _cmd_predict,
    "eval": _cmd_eval,
    "sweep": _cmd_sweep,
    "check": _cmd_check,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; --help exits 0
        return 0 if exc.code == 0 else 1
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
