"""Surgery-description layer: normalization of the coefficients of a
periodic Takahashi manifold, the homology routes through both
presentation families, the genus-one branching knot of the p = r = 1
family, and the cross-checks tying all of these together.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactalg import (
    AbelianGroup,
    BigIntMatrix,
    IntPoly,
    Rational,
    cokernel,
    determinant,
    resultant,
)
from .grouppres import (
    abelianize,
    cyclic_presentation,
    h1_from_presentation,
    representer_polynomial,
    takahashi_presentation,
)
from .knotkit import (
    ConwayForm,
    TwoBridge,
    alexander_two_bridge,
    branched_cover_homology,
    conway_to_fraction,
    normalize_two_bridge,
    two_bridge_equivalent,
)

__all__ = [
    "TakahashiSpec",
    "BranchData",
    "normalize_spec",
    "h1_takahashi",
    "h1_cyclic_route",
    "branch_knot",
    "base_space_h1",
    "branch_data",
    "cross_check_prop4",
    "symmetry_check",
]


@dataclass(frozen=True)
class TakahashiSpec:
    """Normalized surgery data (n, p/q, r/s): fractions reduced, numerators
    nonnegative, the infinite coefficient stored as 1/0."""

    n: int
    pq: Rational
    rs: Rational

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        for c in (self.pq, self.rs):
            if c.num < 0:
                raise ValueError("spec coefficients carry nonnegative numerators")
            if c.num == 0 and c.den != 1:
                raise ValueError("zero coefficient is stored as 0/1")
            if c.den == 0 and c.num != 1:
                raise ValueError("infinite coefficient is stored as 1/0")

    def __str__(self) -> str:
        return f"M_{self.n}({self.pq}, {self.rs})"


def _canonical(c: Rational) -> Rational:
    if c.num < 0:
        c = Rational(-c.num, -c.den)
    if c.num == 0:
        return Rational(0, 1)
    if c.den == 0:
        return Rational(1, 0)
    return c


def normalize_spec(n: int, a: Rational, b: Rational) -> TakahashiSpec:
    """Canonical surgery data: numerators made nonnegative by negating
    numerator and denominator together; 0 and the infinite coefficient
    canonicalized to 0/1 and 1/0."""
    return TakahashiSpec(n, _canonical(a), _canonical(b))


def h1_takahashi(spec: TakahashiSpec) -> AbelianGroup:
    """H_1 via the 2n-generator surgery presentation."""
    return h1_from_presentation(takahashi_presentation(spec.n, spec.pq, spec.rs))


def h1_cyclic_route(spec: TakahashiSpec) -> AbelianGroup:
    """H_1 via the n-generator cyclic presentation; requires r = 1 and
    agrees with h1_takahashi on the nose."""
    if spec.rs.num != 1:
        raise ValueError("cyclic route needs a coefficient of the form 1/s")
    return h1_from_presentation(
        cyclic_presentation(spec.n, spec.pq.num, spec.pq.den, spec.rs.den)
    )


def branch_knot(q: int, s: int) -> TwoBridge:
    """Branching knot b(|4sq - 1|, 2s) of the family M_n(1/q, 1/s).

    Self-test: the Conway form [-2q, 2s] must evaluate to the same
    Schubert class (up to mirror); this pins the continued-fraction
    orientation and fails loudly if it is ever reversed.
    """
    k = normalize_two_bridge(abs(4 * s * q - 1), 2 * s)
    frac = conway_to_fraction(ConwayForm((-2 * q, 2 * s)))
    k_conway = normalize_two_bridge(frac.num, frac.den)
    if not two_bridge_equivalent(k, k_conway, allow_mirror=True):
        raise AssertionError(
            f"Conway form [-2q, 2s] gave {k_conway}, not the class of {k}"
        )
    return k


def base_space_h1(pq: Rational, rs: Rational) -> AbelianGroup:
    """H_1 of the connected sum L(p, q) # L(r, s): Z/p + Z/r, where a zero
    numerator contributes a free Z summand."""
    return cokernel(BigIntMatrix.diagonal([abs(pq.num), abs(rs.num)]))


@dataclass(frozen=True)
class BranchData:
    """Base-space homology plus, when p = r = 1 (so the base is S^3), the
    two-bridge branching knot."""

    base_h1: AbelianGroup
    knot: TwoBridge | None


def branch_data(spec: TakahashiSpec) -> BranchData:
    knot = None
    if spec.pq.num == 1 and spec.rs.num == 1:
        knot = branch_knot(spec.pq.den, spec.rs.den)
    return BranchData(base_space_h1(spec.pq, spec.rs), knot)


def cross_check_prop4(q: int, s: int, n: int) -> bool:
    """Compare H_1 of M_n(1/q, 1/s) with H_1 of the n-fold cyclic cover of
    S^3 branched over b(|4sq - 1|, 2s), structurally."""
    if n < 1:
        raise ValueError("n must be at least 1")
    spec = normalize_spec(n, Rational(1, q), Rational(1, s))
    via_surgery = h1_takahashi(spec)
    via_cover = branched_cover_homology(alexander_two_bridge(branch_knot(q, s)), n)
    return via_surgery == via_cover


def symmetry_check(spec: TakahashiSpec) -> bool:
    """Homology-level check of the coefficient symmetries: H_1 must agree
    under (p/q, r/s) -> (-p/q, -r/s), (r/s, p/q) and (-r/s, -p/q)."""
    variants = [
        spec,
        normalize_spec(spec.n, -spec.pq, -spec.rs),
        normalize_spec(spec.n, spec.rs, spec.pq),
        normalize_spec(spec.n, -spec.rs, -spec.pq),
    ]
    groups = [h1_takahashi(v) for v in variants]
    return all(g == groups[0] for g in groups)


def takahashi_determinant(spec: TakahashiSpec) -> int:
    """Determinant of the 2n x 2n relation matrix; |det| is |H_1| whenever
    the homology is finite."""
    return determinant(abelianize(takahashi_presentation(spec.n, spec.pq, spec.rs)))


def representer_order(spec: TakahashiSpec) -> int:
    """|resultant(representer polynomial, t^n - 1)| for the r = 1 family;
    0 signals infinite homology."""
    if spec.rs.num != 1:
        raise ValueError("representer route needs a coefficient of the form 1/s")
    rep = representer_polynomial(spec.n, spec.pq.num, spec.pq.den, spec.rs.den)
    tn_minus_1 = IntPoly((-1,) + (0,) * (spec.n - 1) + (1,))
    return abs(resultant(rep.poly, tn_minus_1))
