"""Exact arithmetic substrate: big-integer matrices, Smith normal form,
fraction-free determinants, integer and Laurent polynomials, resultants,
and invariant-factor decompositions of finitely generated abelian groups.

Matrices in this package stay small (a few dozen rows at most) but their
entries can grow exponentially during elimination, so determinants use
Bareiss' exact-division scheme and the Smith reduction pivots on gcds.
Everything is an immutable value and every operation is a pure function;
Python ints give arbitrary precision for free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

__all__ = [
    "Rational",
    "BigIntMatrix",
    "SnfResult",
    "IntPoly",
    "AbelianGroup",
    "smith_normal_form",
    "determinant",
    "cokernel",
    "resultant",
    "cyclotomic_quotient",
    "circulant_of_poly",
    "normalize_up_to_units",
    "poly_divmod",
    "laurent_add",
    "laurent_sub",
    "laurent_mul",
    "laurent_neg",
]


@dataclass(frozen=True)
class Rational:
    """Reduced fraction num/den; den == 0 encodes the infinite coefficient.

    Only the gcd is removed here.  Component signs are preserved as given
    (3/-1 and -3/1 stay distinct), because two-bridge normalization is
    sensitive to the sign of the denominator; the surgery-spec convention
    "numerator nonnegative" is applied by manifolds.normalize_spec.
    """

    num: int
    den: int

    def __post_init__(self):
        if self.num == 0 and self.den == 0:
            raise ValueError("0/0 is not a valid coefficient")
        g = math.gcd(self.num, self.den)
        if g > 1:
            object.__setattr__(self, "num", self.num // g)
            object.__setattr__(self, "den", self.den // g)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def __neg__(self) -> "Rational":
        return Rational(-self.num, self.den)

    def __str__(self) -> str:
        if self.den == 0:
            return "inf" if self.num > 0 else "-inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"


@dataclass(frozen=True)
class BigIntMatrix:
    """Integer matrix stored row-major; rows or columns may number zero."""

    nrows: int
    ncols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        entries = tuple(self.entries)
        if len(entries) != self.nrows * self.ncols:
            raise ValueError("entry count does not match dimensions")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], ncols: int | None = None) -> "BigIntMatrix":
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != width:
                raise ValueError("ncols does not match row length")
            ncols = width
        elif ncols is None:
            ncols = 0
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "BigIntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, diag: Iterable[int]) -> "BigIntMatrix":
        d = list(diag)
        n = len(d)
        return cls(n, n, tuple(d[i] if i == j else 0 for i in range(n) for j in range(n)))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.ncols : (i + 1) * self.ncols]

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.nrows)]


@dataclass(frozen=True)
class SnfResult:
    """Diagonal of the Smith normal form: nonnegative, divisibility-chained,
    with zero factors (if any) at the end."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        facs = tuple(self.invariant_factors)
        object.__setattr__(self, "invariant_factors", facs)
        for d in facs:
            if d < 0:
                raise ValueError("invariant factors must be nonnegative")
        for a, b in zip(facs, facs[1:]):
            if a == 0 and b != 0:
                raise ValueError("zero factors must come last")
            if a != 0 and b != 0 and b % a != 0:
                raise ValueError("broken divisibility chain")

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d != 0)


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group in invariant-factor form.

    torsion holds the factors > 1, each dividing the next; free_rank counts
    the Z summands.  Equality is structural, which is exactly isomorphism.
    """

    torsion: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        tor = tuple(self.torsion)
        object.__setattr__(self, "torsion", tor)
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for d in tor:
            if d <= 1:
                raise ValueError("torsion factors must exceed 1")
        for a, b in zip(tor, tor[1:]):
            if b % a != 0:
                raise ValueError("broken divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        return math.prod(self.torsion)

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "trivial"


def _smallest_nonzero(a: list[list[int]], k: int, nrows: int, ncols: int) -> tuple[int, int] | None:
    best = None
    where = None
    for i in range(k, nrows):
        for j in range(k, ncols):
            v = a[i][j]
            if v != 0 and (best is None or abs(v) < best):
                best = abs(v)
                where = (i, j)
                if best == 1:
                    return where
    return where


def smith_normal_form(m: BigIntMatrix) -> SnfResult:
    """Invariant factors of an integer matrix by gcd-pivot reduction.

    Row and column operations are unimodular throughout, so the product of
    the nonzero factors equals the absolute value of the product of the
    elementary divisors of the input.
    """
    a = m.to_lists()
    nrows, ncols = m.nrows, m.ncols
    steps = min(nrows, ncols)
    k = 0
    while k < steps:
        piv = _smallest_nonzero(a, k, nrows, ncols)
        if piv is None:
            break
        i0, j0 = piv
        if i0 != k:
            a[k], a[i0] = a[i0], a[k]
        if j0 != k:
            for row in a:
                row[k], row[j0] = row[j0], row[k]
        while True:
            if a[k][k] < 0:
                a[k] = [-x for x in a[k]]
            p = a[k][k]
            restart = False
            for i in range(k + 1, nrows):
                v = a[i][k]
                if v:
                    q, r = divmod(v, p)
                    a[i] = [x - q * y for x, y in zip(a[i], a[k])]
                    if r:
                        # remainder becomes the new, strictly smaller pivot
                        a[k], a[i] = a[i], a[k]
                        restart = True
                        break
            if restart:
                continue
            for j in range(k + 1, ncols):
                v = a[k][j]
                if v:
                    q, r = divmod(v, p)
                    for row in a:
                        row[j] -= q * row[k]
                    if r:
                        for row in a:
                            row[k], row[j] = row[j], row[k]
                        restart = True
                        break
            if restart:
                continue
            break
        k += 1

    diag = [abs(a[i][i]) for i in range(steps)]
    # pairwise gcd/lcm passes enforce the divisibility chain; diag(x, y) is
    # unimodularly equivalent to diag(gcd, lcm)
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            x, y = diag[i], diag[j]
            g = math.gcd(x, y)
            if g == 0:
                continue
            diag[i], diag[j] = g, (x // g) * y
    return SnfResult(tuple(diag))


def cokernel(m: BigIntMatrix) -> AbelianGroup:
    """Z^ncols modulo the subgroup generated by the rows of m."""
    snf = smith_normal_form(m)
    torsion = tuple(d for d in snf.invariant_factors if d > 1)
    return AbelianGroup(torsion, m.ncols - snf.rank)


def determinant(m: BigIntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if m.nrows != m.ncols:
        raise ValueError("determinant requires a square matrix")
    n = m.nrows
    if n == 0:
        return 1
    a = m.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by the Desnanot-Jacobi identity
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients lowest degree first.

    The zero polynomial is the empty tuple; its degree is undefined and
    operations that need a degree reject it explicitly.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(tuple(out))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero or other.is_zero:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    def shifted(self, k: int) -> "IntPoly":
        """Multiply by t^k, k >= 0."""
        if k < 0:
            raise ValueError("negative shift")
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"


def poly_divmod(f: IntPoly, g: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Long division of f by g over Z.

    Every leading-coefficient division must be exact, which always holds
    for the monic (or sign-monic) divisors used in this package.
    """
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    dg = g.degree
    gl = g.coeffs[-1]
    rem = list(f.coeffs)
    if len(rem) < len(g.coeffs):
        return IntPoly(()), f
    quo = [0] * (len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        if c % gl:
            raise ValueError("non-exact division step; divisor not monic up to sign")
        k = c // gl
        quo[i - dg] = k
        for j in range(dg + 1):
            rem[i - dg + j] -= k * g.coeffs[j]
    return IntPoly(tuple(quo)), IntPoly(tuple(rem))


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant via the Sylvester determinant (Bareiss underneath).

    Sign convention: the deg(g) rows of f coefficients sit on top, so
    resultant(g, f) == (-1)**(deg f * deg g) * resultant(f, g).  Callers
    that compare group orders take absolute values.
    """
    if f.is_zero and g.is_zero:
        raise ValueError("resultant of two zero polynomials is undefined")
    if f.is_zero or g.is_zero:
        return 0
    m, n = f.degree, g.degree
    if m + n == 0:
        return 1
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    rows = [[0] * i + fc + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * i + gc + [0] * (m - 1 - i) for i in range(m)]
    return determinant(BigIntMatrix.from_rows(rows))


def cyclotomic_quotient(n: int) -> IntPoly:
    """(t^n - 1)/(t - 1) = 1 + t + ... + t^(n-1), for n >= 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return IntPoly((1,) * n)


def circulant_of_poly(f: IntPoly, n: int) -> BigIntMatrix:
    """Matrix of multiplication by f(t) on Z[t]/(t^n - 1).

    Column j holds the coefficients of f * t^j reduced mod t^n - 1, so
    |det| equals |resultant(f, t^n - 1)|.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    wrapped = [0] * n
    for k, c in enumerate(f.coeffs):
        wrapped[k % n] += c
    rows = [[wrapped[(i - j) % n] for j in range(n)] for i in range(n)]
    return BigIntMatrix.from_rows(rows, ncols=n)


def normalize_up_to_units(f: "IntPoly | Mapping[int, int]") -> IntPoly:
    """Multiply by +-t^k so the constant term is positive and nonzero.

    Accepts an IntPoly or a Laurent coefficient mapping {exponent: coeff};
    the zero polynomial maps to zero.  Idempotent.
    """
    if isinstance(f, IntPoly):
        items = {i: c for i, c in enumerate(f.coeffs) if c}
    else:
        items = {e: c for e, c in f.items() if c}
    if not items:
        return IntPoly(())
    lo, hi = min(items), max(items)
    coeffs = [items.get(e, 0) for e in range(lo, hi + 1)]
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    return IntPoly(tuple(coeffs))


# Laurent polynomials are plain {exponent: coefficient} dicts with zero
# coefficients stripped; enough machinery for Fox calculus and 2x2 Burau
# matrices, which never need division.

def _strip(d: dict[int, int]) -> dict[int, int]:
    return {e: c for e, c in d.items() if c}


def laurent_add(a: Mapping[int, int], b: Mapping[int, int]) -> dict[int, int]:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
    return _strip(out)


def laurent_neg(a: Mapping[int, int]) -> dict[int, int]:
    return {e: -c for e, c in a.items()}


def laurent_sub(a: Mapping[int, int], b: Mapping[int, int]) -> dict[int, int]:
    return laurent_add(a, laurent_neg(b))


def laurent_mul(a: Mapping[int, int], b: Mapping[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
    return _strip(out)
