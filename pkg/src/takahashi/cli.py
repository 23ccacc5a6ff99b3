"""Command-line frontend.

Subcommands: h1, presentation, branch-knot, cover-order, two-bridge-equiv,
braid-alexander, verify-paper, conjecture-scan.  Every command accepts
--json for a single machine-readable document on stdout.  Exit codes:
0 success (all claims pass), 1 claim failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .claims import FAIL, grid_rationals, run_claims
from .exactalg import AbelianGroup, IntPoly, Rational
from .grouppres import cyclic_presentation, takahashi_presentation
from .knotkit import (
    BraidWord3,
    alexander_from_braid3,
    branched_cover_homology,
    normalize_two_bridge,
    two_bridge_equivalent,
)
from .manifolds import branch_knot, h1_takahashi, normalize_spec

__all__ = ["main", "entry"]


def rational_arg(text: str) -> Rational:
    """Parse p/q with optional signs, a bare integer k as k/1, or inf."""
    s = text.strip()
    if s.lower() in ("inf", "+inf", "-inf"):
        return Rational(1, 0)
    if "/" in s:
        a, b = s.split("/", 1)
        return Rational(int(a), int(b))
    return Rational(int(s), 1)


def poly_pretty(p: IntPoly) -> str:
    if p.is_zero:
        return "0"
    terms = []
    for e in range(p.degree, -1, -1):
        c = p.coeffs[e]
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "t" if e == 1 else f"t^{e}"
            body = var if mag == 1 else f"{mag}{var}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms)


def word_pretty(w, prefix: str) -> str:
    return " ".join(
        f"{prefix}{g + 1}" + ("" if e == 1 else f"^{e}") for g, e in w.letters
    )


def group_fields(g: AbelianGroup) -> dict:
    order = g.order()
    return {"torsion": list(g.torsion), "freeRank": g.free_rank, "order": order}


def print_group(g: AbelianGroup) -> None:
    print(f"H1 = {g}")
    print("invariant factors:", " ".join(str(d) for d in g.torsion) or "-")
    print("free rank:", g.free_rank)
    order = g.order()
    print("order:", "infinite" if order is None else order)


def emit_json(doc: dict) -> None:
    print(json.dumps(doc))


def cmd_h1(args) -> int:
    spec = normalize_spec(args.n, args.pq, args.rs)
    g = h1_takahashi(spec)
    if args.json:
        emit_json({"n": spec.n, "pq": str(spec.pq), "rs": str(spec.rs), **group_fields(g)})
    else:
        print(spec)
        print_group(g)
    return 0


def cmd_presentation(args) -> int:
    spec = normalize_spec(args.n, args.pq, args.rs)
    if args.cyclic:
        if spec.rs.num != 1:
            raise ValueError(
                f"--cyclic needs a second coefficient of the form 1/s, got {spec.rs}"
            )
        pres = cyclic_presentation(spec.n, spec.pq.num, spec.pq.den, spec.rs.den)
        prefix = "z"
    else:
        pres = takahashi_presentation(spec.n, spec.pq, spec.rs)
        prefix = "x"
    gens = [f"{prefix}{i + 1}" for i in range(pres.generator_count)]
    relators = [word_pretty(r, prefix) for r in pres.relators]
    if args.json:
        emit_json(
            {
                "n": spec.n,
                "pq": str(spec.pq),
                "rs": str(spec.rs),
                "cyclic": bool(args.cyclic),
                "generators": gens,
                "relators": relators,
            }
        )
    else:
        print(spec)
        print("generators:", " ".join(gens))
        for r in relators:
            print("relator:", r if r else "(empty)")
    return 0


_KNOT_NOTES = {(1, 0): "unknot", (3, 1): "trefoil", (3, 2): "trefoil",
               (5, 2): "figure-eight", (5, 3): "figure-eight"}


def cmd_branch_knot(args) -> int:
    k = branch_knot(args.q, args.s)
    conway = [-2 * args.q, 2 * args.s]
    alpha = abs(4 * args.s * args.q - 1)
    k2q = normalize_two_bridge(alpha, 2 * args.q)
    equivalent = two_bridge_equivalent(k, k2q, allow_mirror=True)
    note = _KNOT_NOTES.get((k.alpha, k.beta))
    if args.json:
        emit_json(
            {
                "q": args.q,
                "s": args.s,
                "alpha": k.alpha,
                "beta": k.beta,
                "conway": conway,
                "beta2q": k2q.beta,
                "equivalent": equivalent,
                "note": note,
            }
        )
    else:
        print("branch knot:", k)
        print("conway form:", conway)
        print(f"equivalent to {k2q}:", "yes" if equivalent else "no")
        if note:
            print("note:", note)
    return 0


def cmd_cover_order(args) -> int:
    k = normalize_two_bridge(args.alpha, args.beta)
    if not k.is_knot:
        raise ValueError(f"alpha must be odd (a knot); {k} is a two-component link")
    from .knotkit import alexander_two_bridge

    g = branched_cover_homology(alexander_two_bridge(k), args.n)
    if args.json:
        emit_json({"alpha": k.alpha, "beta": k.beta, "n": args.n, **group_fields(g)})
    else:
        print(f"{args.n}-fold cyclic branched cover of {k}")
        print_group(g)
    return 0


def cmd_two_bridge_equiv(args) -> int:
    k1 = normalize_two_bridge(args.alpha1, args.beta1)
    k2 = normalize_two_bridge(args.alpha2, args.beta2)
    equivalent = two_bridge_equivalent(k1, k2, allow_mirror=args.mirror)
    if args.json:
        emit_json(
            {
                "first": {"alpha": k1.alpha, "beta": k1.beta},
                "second": {"alpha": k2.alpha, "beta": k2.beta},
                "mirror": args.mirror,
                "equivalent": equivalent,
            }
        )
    else:
        rel = "equivalent" if equivalent else "not equivalent"
        scope = "up to mirror" if args.mirror else "strictly"
        print(f"{k1} and {k2} are {rel} ({scope})")
    return 0


def cmd_braid_alexander(args) -> int:
    letters = []
    for chunk in args.word:
        letters.extend(int(x) for x in chunk.split())
    braid = BraidWord3(tuple(letters))
    delta = alexander_from_braid3(braid)
    if args.json:
        emit_json({"word": letters, "coefficients": list(delta.poly.coeffs),
                   "pretty": poly_pretty(delta.poly)})
    else:
        print("Delta =", poly_pretty(delta.poly))
        print("coefficients (lowest degree first):", list(delta.poly.coeffs))
    return 0


def cmd_verify_paper(args) -> int:
    reports = run_claims()
    if args.json:
        emit_json(
            {
                "claims": [
                    {
                        "claimId": r.claim_id,
                        "description": r.description,
                        "expected": r.expected,
                        "computed": r.computed,
                        "status": r.status,
                    }
                    for r in reports
                ],
                "failures": sum(1 for r in reports if r.status == FAIL),
            }
        )
    else:
        wid = max(len(r.claim_id) for r in reports)
        wstat = max(len(r.status) for r in reports)
        for r in reports:
            print(f"{r.claim_id:<{wid}}  {r.status:<{wstat}}  "
                  f"expected: {r.expected} | computed: {r.computed}")
        failures = sum(1 for r in reports if r.status == FAIL)
        print(f"{sum(1 for r in reports if r.status == 'pass')} passed, "
              f"{failures} failed, "
              f"{sum(1 for r in reports if r.status not in ('pass', 'fail'))} unverified by design")
    return 1 if any(r.status == FAIL for r in reports) else 0


def cmd_conjecture_scan(args) -> int:
    values = grid_rationals(args.grid_max)
    rows = []
    for n in range(2, args.n_max + 1):
        for a in values:
            for b in values:
                spec = normalize_spec(n, a, b)
                g = h1_takahashi(spec)
                rows.append(
                    {
                        "n": n,
                        "pq": str(spec.pq),
                        "rs": str(spec.rs),
                        **group_fields(g),
                        "pOneROne": spec.pq.num == 1 and spec.rs.num == 1,
                    }
                )
    if args.json:
        emit_json({"nMax": args.n_max, "gridMax": args.grid_max, "rows": rows})
    else:
        print(f"{'n':>2}  {'p/q':>6}  {'r/s':>6}  {'order':>10}  {'torsion':<16} p=1=r")
        for row in rows:
            order = "infinite" if row["order"] is None else str(row["order"])
            torsion = " ".join(str(d) for d in row["torsion"]) or "-"
            if row["freeRank"]:
                torsion += f" +Z^{row['freeRank']}"
            mark = "*" if row["pOneROne"] else ""
            print(f"{row['n']:>2}  {row['pq']:>6}  {row['rs']:>6}  {order:>10}  {torsion:<16} {mark}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="takahashi",
        description="Exact homology invariants of periodic Takahashi 3-manifolds "
        "M_n(p/q, r/s) and their branching knots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit a single JSON document")

    p = sub.add_parser("h1", help="first homology of M_n(p/q, r/s)")
    p.add_argument("n", type=int)
    p.add_argument("pq", type=rational_arg)
    p.add_argument("rs", type=rational_arg)
    add_json(p)
    p.set_defaults(func=cmd_h1)

    p = sub.add_parser("presentation", help="fundamental group presentation")
    p.add_argument("n", type=int)
    p.add_argument("pq", type=rational_arg)
    p.add_argument("rs", type=rational_arg)
    p.add_argument("--cyclic", action="store_true",
                   help="n-generator cyclic presentation (needs r = 1)")
    add_json(p)
    p.set_defaults(func=cmd_presentation)

    p = sub.add_parser("branch-knot", help="branching knot of M_n(1/q, 1/s)")
    p.add_argument("q", type=int)
    p.add_argument("s", type=int)
    add_json(p)
    p.set_defaults(func=cmd_branch_knot)

    p = sub.add_parser("cover-order", help="H1 of the n-fold cyclic branched cover of b(alpha, beta)")
    p.add_argument("alpha", type=int)
    p.add_argument("beta", type=int)
    p.add_argument("n", type=int)
    add_json(p)
    p.set_defaults(func=cmd_cover_order)

    p = sub.add_parser("two-bridge-equiv", help="Schubert equivalence of two-bridge classes")
    p.add_argument("alpha1", type=int)
    p.add_argument("beta1", type=int)
    p.add_argument("alpha2", type=int)
    p.add_argument("beta2", type=int)
    p.add_argument("--mirror", action=argparse.BooleanOptionalAction, default=True,
                   help="allow mirror images (default: on)")
    add_json(p)
    p.set_defaults(func=cmd_two_bridge_equiv)

    p = sub.add_parser("braid-alexander",
                       help="Alexander polynomial of a 3-braid closure, e.g. \"1 1 1 2\"")
    p.add_argument("word", nargs="+",
                   help="whitespace-separated letters; 1, -1, 2, -2 mean "
                        "sigma_1, sigma_1^-1, sigma_2, sigma_2^-1")
    add_json(p)
    p.set_defaults(func=cmd_braid_alexander)

    p = sub.add_parser("verify-paper", help="run the built-in claims suite")
    add_json(p)
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("conjecture-scan", help="H1 table over a coefficient grid")
    p.add_argument("--grid-max", type=int, default=2, metavar="K",
                   help="coefficient entry bound (default 2)")
    p.add_argument("--n-max", type=int, default=4, metavar="N",
                   help="largest n to scan (default 4)")
    add_json(p)
    p.set_defaults(func=cmd_conjecture_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
