from .engine import (
    MutationPalette,
    SynthBundle,
    Theme,
    batch_generate,
    load_palette,
    load_seeds,
    make_bundle,
    mutate,
    pair_seed,
    structure_hash,
    write_corpus,
)
from .random_spec import random_spec

__all__ = [
    "MutationPalette",
    "SynthBundle",
    "Theme",
    "batch_generate",
    "load_palette",
    "load_seeds",
    "make_bundle",
    "mutate",
    "pair_seed",
    "random_spec",
    "structure_hash",
    "write_corpus",
]
