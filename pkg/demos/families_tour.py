"""Infinite families with known d, and where the lower-bound families break down.

Exact families are checked against the search. The two lower-bound families
predict F(3,4) exactly, but for small t the search finds d = p - 1 instead of
something larger. The last part lists the irregular regime, where d = D still
happens for many triples.
"""
from brieskorn.families import verify_family, verify_theorem

for name, grid in [("ks20-4", {"n": range(1, 8)}), ("alpha0", {"k1": range(1, 4), "k2": range(1, 4)}),
                   ("su", {"u": range(1, 4), "v": range(1, 4)})]:
    rep = verify_family(name, grid)
    print(f"{name:8} {rep.n_pass}/{len(rep.records)} instances match")

for name, grid in [("exm1", {"t": range(1, 4), "k": range(1, 4)}),
                   ("exm2", [(1, 2), (2, 1), (2, 2), (3, 4), (4, 2), (5, 2)])]:
    rep = verify_family(name, grid)
    print(f"\n{name}: params, triple, F(3,4), d")
    for r in rep.records:
        flag = "" if r.passed else "   <- d = p - 1"
        print(f"  {r.params} {r.triple} {r.extra['F(3,4)']} {r.computed}{flag}")

rep = verify_theorem("irregular", 200)
s = rep.summary
print(f"\nirregular regime, 41 <= p <= 200: {s['strict']} with d > D, {s['equal']} with d = D")
print("first equality cases:", s["equality_cases"][:6])
