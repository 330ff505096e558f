"""Schubert calculus on flag manifolds: classical and quantum products, k-Bruhat intervals, left operators."""

from ._flagmn import (
    Permutation,
    act,
    classify,
    fgp_product,
    grassmannian,
    hook,
    interval,
    is_zero_word,
    monk,
    powersum,
    quantum_lr,
    reproduce,
    run_cli,
)

__all__ = [
    "Permutation",
    "act",
    "classify",
    "fgp_product",
    "grassmannian",
    "hook",
    "interval",
    "is_zero_word",
    "monk",
    "powersum",
    "quantum_lr",
    "reproduce",
    "run_cli",
]
