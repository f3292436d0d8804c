"""How d is found: maximize a quadratic form over a small lattice.

Shows the form at a few points, the search set used by the fast method, and
timings of the fast method against the brute-force sweep.
"""
import time

from brieskorn import D_invariant, d_full, d_refined, decompose, make_triple
from brieskorn.dinv import F_eval, set_M


def show(p, q):
    t = make_triple(p, q)
    dec = decompose(t)
    print(f"{t}: n_p={dec.n_p} l={dec.l} t={dec.t} alpha={dec.alpha} s={dec.s}")
    print(f"  F(1,1) = {F_eval(t, 1, 1)} (always p - 1), F(1,t+1) = {F_eval(t, 1, dec.t + 1)} = D")
    M = set_M(t)
    print(f"  search set has {len(M)} points; best few:",
          sorted(M, key=lambda am: -F_eval(t, *am))[:4])
    r = d_refined(t)
    print(f"  d = {r.value} at {r.witness}, D = {D_invariant(t)}")


def timing():
    for p, q in [(89, 144), (499, 500), (1597, 2584)]:
        t = make_triple(p, q)
        t0 = time.perf_counter()
        a = d_refined(t)
        t1 = time.perf_counter()
        b = d_full(t)
        t2 = time.perf_counter()
        print(f"{t}: refined {a.value} in {1e3 * (t1 - t0):.2f} ms, "
              f"brute force {b.value} in {1e3 * (t2 - t1):.2f} ms")


if __name__ == "__main__":
    show(5, 8)
    show(89, 144)
    show(49, 79)
    timing()
