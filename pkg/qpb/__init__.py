"""qpb - exact calculus, gauge theory and field equations on the two-point-space quantum principal bundle."""

__version__ = "0.1.0"
