"""Brieskorn spheres on consecutive Fibonacci numbers.

(F_{2k+1}, F_{2k+2}, F_{2k+3}) always satisfies pq + pr - qr = 1. For even p
the invariant has a closed form. For odd p the lower bound D equals p - 1,
and from k = 5 on the lattice search beats it.
"""
from brieskorn.families import compare_cobordism, fibonacci_case, fibonacci_partners


def main():
    print("k   triple                    d      D   verdict")
    for k in range(2, 10):
        c = fibonacci_case(k)
        print(f"{k:<3} {str(c.triple):<25} {c.d.value:<6} {c.D:<4} {c.verdict}"
              + (f"   witness {c.d.witness}" if c.d.witness and c.d.witness[0] > 1 else ""))

    # The k = 5 sphere against two neighbours with the same p. Both have d = p - 1,
    # so d alone separates them from the Fibonacci sphere.
    c = fibonacci_case(5)
    for other in fibonacci_partners(5):
        rec = compare_cobordism(c.triple, other)
        print(f"{c.triple} vs {other}: d = {rec['d_a']} vs {rec['d_b']} -> {rec['verdict']}")


if __name__ == "__main__":
    main()
