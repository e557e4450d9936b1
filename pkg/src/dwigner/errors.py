"""Exception types shared across modules."""
from __future__ import annotations


class UnsupportedDimensionError(ValueError):
    """An operation is undefined for the requested dimension."""


class InvalidStateError(ValueError):
    """A matrix fails one of the density-matrix conditions."""
