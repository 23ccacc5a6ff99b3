"""Words over indexed generators, finite presentations, free reduction,
abelianization, and the two presentation families of a periodic Takahashi
manifold M_n(p/q, r/s): the 2n-generator surgery presentation and, when
r = 1, the n-generator cyclic presentation together with its rewritten
forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .exactalg import (
    AbelianGroup,
    BigIntMatrix,
    IntPoly,
    Rational,
    cokernel,
    normalize_up_to_units,
)

__all__ = [
    "Word",
    "Presentation",
    "RepresenterPoly",
    "free_reduce",
    "abelianize",
    "takahashi_presentation",
    "cyclic_presentation",
    "cyclic_presentation_rewritten",
    "relator_identity_check",
    "representer_polynomial",
    "h1_from_presentation",
]


@dataclass(frozen=True)
class Word:
    """Product of generator powers; letters are (generator index, exponent).

    Exponents are nonzero by construction.  Adjacent letters on the same
    generator are allowed (the word is then unreduced); free_reduce merges
    and cancels them.
    """

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        letters = tuple((int(g), int(e)) for g, e in self.letters)
        for g, e in letters:
            if g < 0:
                raise ValueError("generator indices are 0-based and nonnegative")
            if e == 0:
                raise ValueError("zero exponents are not representable")
        object.__setattr__(self, "letters", letters)

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, k: int) -> "Word":
        """k-th power; negative k means the (-k)-th power of the inverse."""
        if k == 0:
            return Word(())
        base = self if k > 0 else self.inverse()
        return Word(base.letters * abs(k))


def word(pairs: Iterable[tuple[int, int]]) -> Word:
    """Build a Word, silently dropping zero-exponent letters."""
    return Word(tuple((g, e) for g, e in pairs if e))


def free_reduce(w: Word) -> Word:
    """Unique freely reduced form: merged exponents, cancellations removed."""
    stack: list[list[int]] = []
    for g, e in w.letters:
        if stack and stack[-1][0] == g:
            stack[-1][1] += e
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([g, e])
    return Word(tuple((g, e) for g, e in stack))


@dataclass(frozen=True)
class Presentation:
    """Finite presentation: generator count plus relator words."""

    generator_count: int
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        relators = tuple(self.relators)
        object.__setattr__(self, "relators", relators)
        if self.generator_count < 0:
            raise ValueError("generator count must be nonnegative")
        for r in relators:
            for g, _ in r.letters:
                if g >= self.generator_count:
                    raise ValueError("relator uses an undeclared generator")


def abelianize(p: Presentation) -> BigIntMatrix:
    """Relation matrix: one row per relator, one column per generator,
    entries the exponent sums.  Invariant under free reduction."""
    rows = []
    for r in p.relators:
        row = [0] * p.generator_count
        for g, e in r.letters:
            row[g] += e
        rows.append(row)
    return BigIntMatrix.from_rows(rows, ncols=p.generator_count)


def h1_from_presentation(p: Presentation) -> AbelianGroup:
    """First homology of the presented group: abelianize, then Smith."""
    return cokernel(abelianize(p))


def takahashi_presentation(n: int, pq: Rational, rs: Rational) -> Presentation:
    """Surgery presentation of pi_1(M_n(p/q, r/s)) on 2n generators.

    For i = 1..n the relators are

        x(2i-1)^q x(2i)^-r x(2i+1)^-q     and     x(2i)^s x(2i+1)^p x(2i+2)^-s

    with 1-based subscripts taken mod 2n (so at n = 1 the generator x3
    wraps back to x1).  Internally generators are 0-based; zero-exponent
    letters are dropped at construction.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    p, q = pq.num, pq.den
    r, s = rs.num, rs.den
    m = 2 * n

    def x(k: int) -> int:  # 1-based paper subscript -> 0-based index mod 2n
        return (k - 1) % m

    relators = []
    for i in range(1, n + 1):
        relators.append(word([(x(2 * i - 1), q), (x(2 * i), -r), (x(2 * i + 1), -q)]))
        relators.append(word([(x(2 * i), s), (x(2 * i + 1), p), (x(2 * i + 2), -s)]))
    return Presentation(m, tuple(relators))


def cyclic_presentation(n: int, p: int, q: int, s: int) -> Presentation:
    """Cyclic presentation of pi_1(M_n(p/q, 1/s)) on n generators.

    Relator i (subscripts mod n):

        z(i)^p (z(i)^-q z(i+1)^q)^s (z(i)^-q z(i-1)^q)^s

    Every relator is the cyclic shift of the first, so the relation matrix
    is circulant.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    relators = []
    for i in range(n):
        head = word([(i, p)])
        up = word([(i, -q), ((i + 1) % n, q)])
        down = word([(i, -q), ((i - 1) % n, q)])
        relators.append(head * up**s * down**s)
    return Presentation(n, tuple(relators))


def cyclic_presentation_rewritten(n: int, p: int, q: int, s: int) -> Presentation:
    """Rewritten form of the cyclic presentation, split by the sign of s.

    s > 0:  z(i)^(p-q) (z(i+1)^q z(i)^-q)^s (z(i-1)^q z(i)^-q)^(s-1) z(i-1)^q
    s < 0:  z(i)^(p+q) (z(i+1)^-q z(i)^q)^-s (z(i-1)^-q z(i)^q)^(-s-1) z(i-1)^-q

    s = 0 is rejected: that degenerate manifold (a connected sum of n lens
    spaces) is already covered by cyclic_presentation itself.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if s == 0:
        raise ValueError("the rewritten presentation needs s != 0")
    relators = []
    for i in range(n):
        up, down = (i + 1) % n, (i - 1) % n
        if s > 0:
            w = word([(i, p - q)])
            w = w * word([(up, q), (i, -q)]) ** s
            w = w * word([(down, q), (i, -q)]) ** (s - 1)
            w = w * word([(down, q)])
        else:
            w = word([(i, p + q)])
            w = w * word([(up, -q), (i, q)]) ** (-s)
            w = w * word([(down, -q), (i, q)]) ** (-s - 1)
            w = w * word([(down, -q)])
        relators.append(w)
    return Presentation(n, tuple(relators))


def _atoms(w: Word) -> list[tuple[int, int]]:
    out = []
    for g, e in w.letters:
        step = 1 if e > 0 else -1
        out.extend([(g, step)] * abs(e))
    return out


def _cyclic_rotations_equal(a: list[tuple[int, int]], b: list[tuple[int, int]]) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    return any(b == a[k:] + a[:k] for k in range(len(a)))


def words_cyclically_equal(w1: Word, w2: Word) -> bool:
    """True iff the freely reduced words agree up to cyclic permutation,
    i.e. represent conjugate elements with cyclically reduced cores."""
    parts = []
    for w in (w1, w2):
        a = _atoms(free_reduce(w))
        while len(a) >= 2 and a[0][0] == a[-1][0] and a[0][1] == -a[-1][1]:
            a = a[1:-1]
        parts.append(a)
    return _cyclic_rotations_equal(parts[0], parts[1])


def relator_identity_check(n: int, p: int, q: int, s: int) -> bool:
    """Check that each rewritten relator equals the original one.

    For s > 0 the two relators are freely equal; for s < 0 the rewritten
    relator is the original conjugated by z(i)^q, so the comparison is
    made on freely reduced words up to cyclic permutation (which is what
    "the presentations coincide" means for relators).
    """
    if s == 0:
        raise ValueError("identity check needs s != 0")
    orig = cyclic_presentation(n, p, q, s)
    rewritten = cyclic_presentation_rewritten(n, p, q, s)
    for r1, r2 in zip(orig.relators, rewritten.relators):
        a, b = free_reduce(r1), free_reduce(r2)
        if a != b and not words_cyclically_equal(a, b):
            return False
    return True


@dataclass(frozen=True)
class RepresenterPoly:
    """Exponent pattern of the cyclic relator by generator offset, as a
    polynomial taken mod t^n - 1 and normalized up to units."""

    poly: IntPoly
    modulus: int


def representer_polynomial(n: int, p: int, q: int, s: int) -> RepresenterPoly:
    """Exponent sums of the cyclic relator, by offset from the base index.

    Offset 0 carries p - 2qs and offsets +-1 carry qs each, so for n >= 3
    the canonical representative is qs t^2 + (p - 2qs) t + qs up to units.
    For n <= 2 the offsets collide mod n and the polynomial collapses
    (n = 1 gives the constant p).  |resultant(poly, t^n - 1)| is then the
    order of the abelianized group whenever that is finite.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    qs = q * s
    lau: dict[int, int] = {}

    def add(e: int, c: int) -> None:
        lau[e] = lau.get(e, 0) + c

    add(0, p - 2 * qs)
    if n == 1:
        add(0, 2 * qs)
    elif n == 2:
        add(1, 2 * qs)
    else:
        add(-1, qs)
        add(1, qs)
    return RepresenterPoly(normalize_up_to_units(lau), n)
