"""Unary code families with uniform Hamming geometry, plus a one-pass
integer-trained corner-classification network built on them."""

from .bitvec import (
    BitWord,
    HammingCount,
    binary_encode,
    gray_decode,
    gray_encode,
    hamming_distance,
    hamming_weight,
)
from .cc4 import (
    CC4Network,
    TrainingSample,
    generalization_region,
    hidden_activations,
    infer,
    load_network,
    save_network,
    train,
)
from .codes import (
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
from .dataset import (
    Dataset,
    EvalReport,
    QuantizationSpec,
    evaluate,
    load_dataset,
    quantize_encode,
    sweep_radius,
)

__all__ = [
    "BitWord",
    "HammingCount",
    "binary_encode",
    "gray_decode",
    "gray_encode",
    "hamming_distance",
    "hamming_weight",
    "CC4Network",
    "TrainingSample",
    "generalization_region",
    "hidden_activations",
    "infer",
    "load_network",
    "save_network",
    "train",
    "Codebook",
    "CodeSpec",
    "DecodeError",
    "build_codebook",
    "decode_basic",
    "decode_fixed",
    "decode_generalized",
    "decode_one_hot",
    "encode_basic",
    "encode_fixed",
    "encode_generalized",
    "encode_one_hot",
    "min_pairwise_distance",
    "one_hot_to_thermometer",
    "Dataset",
    "EvalReport",
    "QuantizationSpec",
    "evaluate",
    "load_dataset",
    "quantize_encode",
    "sweep_radius",
]
