"""Independent oracles used by the test suite.

These deliberately avoid the library's own elimination code: determinants
by brute-force cofactor expansion, ranks by Gaussian elimination over
F_p, and root-of-unity products in floating point.
"""

from __future__ import annotations

import cmath


def cofactor_det(rows: list[list[int]]) -> int:
    """Determinant by recursive cofactor expansion (fine for n <= 6)."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, c in enumerate(rows[0]):
        if c == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * c * cofactor_det(minor)
    return total


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank over the field F_p by straightforward Gaussian elimination."""
    a = [[x % p for x in row] for row in rows]
    rank = 0
    ncols = len(a[0]) if a else 0
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = pow(a[row][col], -1, p)
        a[row] = [(x * inv) % p for x in a[row]]
        for i in range(len(a)):
            if i != row and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[row])]
        row += 1
        rank += 1
    return rank


def unity_root_abs_product(coeffs: list[int], n: int) -> float:
    """|product of f(zeta)| over all n-th roots of unity zeta, in floats."""
    prod = 1.0 + 0.0j
    for j in range(n):
        z = cmath.exp(2j * cmath.pi * j / n)
        prod *= sum(c * z**k for k, c in enumerate(coeffs))
    return abs(prod)


def nontrivial_unity_root_abs_product(coeffs: list[int], n: int) -> float:
    """|product of f(zeta)| over the nontrivial n-th roots of unity."""
    prod = 1.0 + 0.0j
    for j in range(1, n):
        z = cmath.exp(2j * cmath.pi * j / n)
        prod *= sum(c * z**k for k, c in enumerate(coeffs))
    return abs(prod)
