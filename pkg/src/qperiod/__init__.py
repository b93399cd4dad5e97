"""Exact quantum invariants at prime roots of unity and congruence
obstructions to link and 3-manifold periodicity."""

__version__ = "0.1.0"
