"""Exact computations in quantized enveloping algebras of Kac-Moody type."""

from ._core import (
    CartanDatum,
    Error,
    InvalidInput,
    certificates,
    dims,
    multiplicities,
    pairing_determinant,
    peterson_multiplicities,
    preset_names,
    run_cli,
    weyl_kac,
)

__all__ = [
    "CartanDatum",
    "Error",
    "InvalidInput",
    "certificates",
    "dims",
    "multiplicities",
    "pairing_determinant",
    "peterson_multiplicities",
    "preset_names",
    "run_cli",
    "weyl_kac",
]
