"""Slow reference implementations used only by the tests.

Nothing here imports the package's search code: the quadratic form is
re-typed from its definition and the maximum is taken over the whole lattice
(negative a and m = 0 included) intersected with the region F >= F(1, 1).
"""
from fractions import Fraction


def F_ref(p, q, r, x, y):
    f = -(q + r) * x * x + 4 * q * x * y - 4 * (q - p) * y * y - 4 * y
    return Fraction(f + q + r, 4)


def d_ref(p, q, r):
    n_p = (p - 1) // 2
    floor = F_ref(p, q, r, 1, 1)
    best = None
    for a in range(-p, p + 1):
        if a % 2 == 0:
            continue
        for m in range(0, n_p + 1):
            v = F_ref(p, q, r, a, m)
            if v >= floor and (best is None or v > best):
                best = v
    return best


def det_ref(m):
    """Laplace expansion along the first row with exact integers (tiny matrices only)."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * det_ref(minor)
    return total


def triples_ref(p_max):
    out = []
    for p in range(2, p_max + 1):
        for q in range(p + 1, 2 * p):
            if (p * q - 1) % (q - p) == 0:
                r = (p * q - 1) // (q - p)
                if p * q + p * r - q * r == 1:
                    out.append((p, q, r))
    return out
