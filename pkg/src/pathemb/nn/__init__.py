"""Minimal numerical core: dense float64 tensors with reverse-mode
automatic differentiation, the layer zoo needed by the sequence encoder
and probes, an Adam optimizer, a splittable counter-based RNG, and a
binary checkpoint format."""

from pathemb.nn.rng import Rng
from pathemb.nn.tensor import (
    NumericalError,
    ShapeError,
    Tensor,
    constant,
    no_grad,
)
from pathemb.nn.ops import (
    cosine_similarity,
    dense,
    dropout,
    embedding_lookup,
    gelu,
    layer_norm,
    masked_softmax,
    mean_pool_masked,
    multi_head_self_attention,
    sigmoid,
    sigmoid_binary_cross_entropy,
    softmax,
    softmax_cross_entropy,
    tanh,
)
from pathemb.nn.optim import ParamStore, adam_step
from pathemb.nn.checkpoint import load_checkpoint, save_checkpoint

__all__ = [
    "Rng",
    "Tensor",
    "ShapeError",
    "NumericalError",
    "constant",
    "no_grad",
    "gelu",
    "tanh",
    "sigmoid",
    "dense",
    "dropout",
    "layer_norm",
    "softmax",
    "masked_softmax",
    "multi_head_self_attention",
    "embedding_lookup",
    "mean_pool_masked",
    "cosine_similarity",
    "softmax_cross_entropy",
    "sigmoid_binary_cross_entropy",
    "ParamStore",
    "adam_step",
    "save_checkpoint",
    "load_checkpoint",
]
