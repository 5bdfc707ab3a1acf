"""Python bindings for the quatopuc C++ library."""

from ._core import (
    Quaternion,
    QuatopucError,
    SliceFrame,
    baxter_check,
    cd_identity_check,
    chi,
    chi_inv,
    moments_from_verblunsky,
    orthonormal_polys,
    sv_check,
    verblunsky_from_moments,
    zeros_theorem_check,
)

__version__ = "0.1.0"

__all__ = [
    "Quaternion",
    "QuatopucError",
    "SliceFrame",
    "baxter_check",
    "cd_identity_check",
    "chi",
    "chi_inv",
    "moments_from_verblunsky",
    "orthonormal_polys",
    "sv_check",
    "verblunsky_from_moments",
    "zeros_theorem_check",
]
