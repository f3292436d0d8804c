"""d-invariants of Brieskorn homology spheres Sigma(p, q, r) with pq + pr - qr = 1."""
from .dinv import D_invariant, DResult, classify, d, d_even, d_full, d_refined
from .errors import BrieskornError
from .triples import Triple, decompose, enumerate_triples, make_triple

__version__ = "0.1.0"

__all__ = [
    "Triple", "make_triple", "enumerate_triples", "decompose",
    "DResult", "d", "d_full", "d_refined", "d_even", "D_invariant", "classify",
    "BrieskornError",
]
