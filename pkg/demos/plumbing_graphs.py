"""Plumbing trees for almost simple Brieskorn spheres.

The star graph comes from the Seifert invariants and continued fractions.
The linear graph is a chain of -2 vertices with a single -p leaf. Both are
unimodular, so each bounds a homology sphere.
"""
from brieskorn import make_triple
from brieskorn.plumbing import (almost_simple_linear_graph, determinant, export, seifert_data,
                                star_graph)

t = make_triple(2, 3)
g = almost_simple_linear_graph(t)
print("Poincare sphere:", t, "->", len(g), "vertices, weights", set(g.weights),
      "det", determinant(g))
print(export(g, "dot"))

for p, q in [(3, 4), (5, 8), (13, 21)]:
    t = make_triple(p, q)
    sd = seifert_data(t)
    s, l = star_graph(t), almost_simple_linear_graph(t)
    print(f"{t}: e0={sd.e0} p'={sd.p1} q'={sd.q1} r'={sd.r1}; "
          f"{len(s)} vertices; det star {determinant(s)}, det linear {determinant(l)}")
