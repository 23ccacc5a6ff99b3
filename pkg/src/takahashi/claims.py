"""Built-in claims suite: every published homology value and structural
identity for periodic Takahashi manifolds that this library can check is
recomputed here from scratch and compared against its recorded value.

Claim ids are stable strings so regressions can be tracked one claim at
a time.  A claim whose verification would need machinery that is out of
scope (rational-tangle closures) is reported as unverified-by-design and
never counts as a pass or a failure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exactalg import Rational
from .grouppres import relator_identity_check
from .knotkit import (
    BraidWord3,
    alexander_from_braid3,
    branched_cover_homology,
    branched_cover_order,
    normalize_two_bridge,
    two_bridge_equivalent,
)
from .manifolds import (
    base_space_h1,
    cross_check_prop4,
    h1_cyclic_route,
    h1_takahashi,
    normalize_spec,
    symmetry_check,
)

__all__ = ["ClaimReport", "run_claims", "PASS", "FAIL", "UNVERIFIED"]

PASS = "pass"
FAIL = "fail"
UNVERIFIED = "unverified-by-design"


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    description: str
    expected: str
    computed: str
    status: str


def _verdict(ok: bool) -> str:
    return PASS if ok else FAIL


def grid_rationals(bound: int) -> list[Rational]:
    """All reduced fractions with |numerator|, |denominator| <= bound,
    including the infinite coefficient, up to the sign normalization."""
    seen: dict[tuple[int, int], Rational] = {}
    for p in range(0, bound + 1):
        for q in range(-bound, bound + 1):
            if (p, q) == (0, 0) or math.gcd(p, q) != 1:
                continue
            r = Rational(p, q)
            if r.num == 0:
                r = Rational(0, 1)
            seen[(r.num, r.den)] = r
    return sorted(seen.values(), key=lambda v: (v.num, v.den))


def _claim_r1_manifold_1296() -> ClaimReport:
    g = h1_takahashi(normalize_spec(3, Rational(3, 1), Rational(-3, 1)))
    return ClaimReport(
        "R1-manifold-1296",
        "order of H1(M_3(3,-3)) from the 6x6 relation matrix of the surgery presentation",
        "1296",
        str(g.order()),
        _verdict(g.order() == 1296),
    )


def _claim_r1_manifold_15() -> ClaimReport:
    spec = normalize_spec(4, Rational(3, 2), Rational(1, 1))
    g_surgery = h1_takahashi(spec)
    g_cyclic = h1_cyclic_route(spec)
    ok = g_surgery == g_cyclic and g_surgery.order() == 15
    return ClaimReport(
        "R1-manifold-15",
        "order of H1(M_4(3/2,1)) by both the 8x8 surgery route and the cyclic route, "
        "with matching invariant factors",
        "15 by both routes, equal invariant factors",
        f"surgery {g_surgery.order()} ({g_surgery}), cyclic {g_cyclic.order()} ({g_cyclic})",
        _verdict(ok),
    )


def _claim_r1_braid_256() -> ClaimReport:
    braid = BraidWord3((1, 1, 1, -2, -2, -2) * 2)
    delta = alexander_from_braid3(braid)
    order = branched_cover_order(delta, 3)
    structure = branched_cover_homology(delta, 3)
    ok = order == 256 and structure.order() == 256
    return ClaimReport(
        "R1-braid-256",
        "order of H1 of the 3-fold cyclic branched cover of the closure of "
        "(sigma_1^3 sigma_2^-3)^2, via reduced Burau and the resultant with 1+t+t^2",
        "256",
        f"resultant {order}, Smith form {structure.order()} ({structure})",
        _verdict(ok),
    )


def _claim_r1_rational_135() -> ClaimReport:
    return ClaimReport(
        "R1-rational-135",
        "order of H1 of the 4-fold cyclic branched cover of the closure of the "
        "rational braid (sigma_1^(3/2) sigma_2)^2; rational-tangle closures are "
        "outside this library's scope",
        "135",
        "not computed (rational-tangle closure machinery not implemented)",
        UNVERIFIED,
    )


def _claim_l1_grid() -> ClaimReport:
    values = grid_rationals(3)
    total = ok = 0
    for a in values:
        for b in values:
            spec = normalize_spec(1, a, b)
            total += 1
            if h1_takahashi(spec) == base_space_h1(spec.pq, spec.rs):
                ok += 1
    return ClaimReport(
        "L1-grid",
        "H1(M_1(p/q,r/s)) = Z/p + Z/r structurally for all reduced coefficients "
        "bounded by 3, infinity included",
        f"{total} of {total} pairs agree",
        f"{ok} of {total} pairs agree",
        _verdict(ok == total),
    )


def _claim_p4_grid() -> ClaimReport:
    total = ok = 0
    for q in range(-3, 4):
        for s in range(-3, 4):
            for n in range(2, 7):
                total += 1
                if cross_check_prop4(q, s, n):
                    ok += 1
    return ClaimReport(
        "P4-grid",
        "H1(M_n(1/q,1/s)) matches H1 of the n-fold cyclic cover of S^3 branched "
        "over b(|4sq-1|,2s), structurally, for |q|,|s| <= 3 and 2 <= n <= 6",
        f"{total} of {total} points agree",
        f"{ok} of {total} points agree",
        _verdict(ok == total),
    )


def _claim_sym_grid() -> ClaimReport:
    values = grid_rationals(3)
    total = ok = 0
    for n in range(1, 6):
        for a in values:
            for b in values:
                total += 1
                if symmetry_check(normalize_spec(n, a, b)):
                    ok += 1
    return ClaimReport(
        "SYM-grid",
        "H1 invariance under (p/q,r/s) -> (-p/q,-r/s) and (r/s,p/q) for n <= 5 "
        "and coefficient entries bounded by 3",
        f"{total} of {total} specs invariant",
        f"{ok} of {total} specs invariant",
        _verdict(ok == total),
    )


def _claim_eq1_identity() -> ClaimReport:
    total = ok = 0
    for n in range(1, 6):
        for p in range(-3, 4):
            for q in range(-3, 4):
                for s in (-3, -2, -1, 1, 2, 3):
                    total += 1
                    if relator_identity_check(n, p, q, s):
                        ok += 1
    return ClaimReport(
        "EQ1-identity",
        "the rewritten cyclic relators match the original ones as reduced words "
        "(up to cyclic shift for s < 0) for n <= 5, |p|,|q| <= 3, 1 <= |s| <= 3",
        f"{total} of {total} identities hold",
        f"{ok} of {total} identities hold",
        _verdict(ok == total),
    )


def _claim_schubert() -> ClaimReport:
    total = ok = 0
    for q in range(-5, 6):
        for s in range(-5, 6):
            alpha = abs(4 * s * q - 1)
            if alpha < 2:
                continue
            total += 1
            k1 = normalize_two_bridge(alpha, 2 * s)
            k2 = normalize_two_bridge(alpha, 2 * q)
            if two_bridge_equivalent(k1, k2, allow_mirror=False):
                ok += 1
    return ClaimReport(
        "SCHUBERT-2s2q",
        "b(|4sq-1|,2s) and b(|4sq-1|,2q) are Schubert-equivalent (the congruence "
        "(2s)(2q) = 1 mod |4sq-1|) for |q|,|s| <= 5",
        f"{total} of {total} pairs equivalent",
        f"{ok} of {total} pairs equivalent",
        _verdict(ok == total),
    )


_CLAIMS = [
    _claim_eq1_identity,
    _claim_l1_grid,
    _claim_p4_grid,
    _claim_r1_braid_256,
    _claim_r1_manifold_1296,
    _claim_r1_manifold_15,
    _claim_r1_rational_135,
    _claim_schubert,
    _claim_sym_grid,
]


def run_claims() -> list[ClaimReport]:
    """Evaluate every claim; the report is sorted by claim id."""
    return sorted((c() for c in _CLAIMS), key=lambda r: r.claim_id)
