"""Exact engine for the positive part of the two-parameter quantum group of type G2.

The package realizes the algebra as an iterated Ore extension with PBW
normal forms, walks it down to a quantum torus by deleting derivations,
and classifies its derivations; every step is verified by exact symbolic
computation over Q(r, s).
"""

from .ratfield import BiPoly, RatFunc, q_int, q_factorial

__all__ = ["BiPoly", "RatFunc", "q_int", "q_factorial"]
