"""Exact constructive and non-Archimedean arithmetic: regular-sequence reals
with certified order relations, Creating-Subject choice sequences, the
pseudo-continuum twisted ring, and w-elimination for PA* proofs."""

from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
