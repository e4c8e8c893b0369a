"""numba-compiled hot kernels: @njit wrappers over the single-source loops."""

from numba import njit

from . import _loops

base_edges = njit(cache=True)(_loops.base_edges)
fiber_edges = njit(cache=True)(_loops.fiber_edges)
bellman_ford_passes = njit(cache=True)(_loops.bellman_ford_passes)
karp_table = njit(cache=True)(_loops.karp_table)
