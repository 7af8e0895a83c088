"""Command-line frontend.

Subcommands: pair, alambda, hilbert, localdim, idealpoint, garland-check,
verify-all.  Output is deterministic text or JSON (schema documented in
docs/json-schema-v1.md; rationals are rendered as exact 'p/q' strings).
Exit codes: 0 success, 1 property failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import garland, weylcrit
from .bdspair import BdsPair, build_pair, eligible_nodes
from .rootsys import build, format_root, validate_type
from .srring import SRPresentation, Weight0, presentation
from .verify import distinct_fractions, run_all
from .weylcrit import DeltaWeight, EvalParams, EvalPoint

SCHEMA_VERSION = 1


def _frac(x: Fraction) -> str:
    return str(x)


def _parse_delta_weight(rank: int, spec: str) -> DeltaWeight:
    vals = {}
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        if not part.startswith("h") or "=" not in part:
            raise ValueError(f"bad weight component {part!r}; expected like 'h2=1'")
        key, _, val = part.partition("=")
        vals[int(key[1:])] = int(val)
    return DeltaWeight.of(rank, vals)


def _resolve_pair(args) -> BdsPair:
    validate_type(args.type, args.rank)
    rs = build(args.type, args.rank)
    if args.node is None:
        raise ValueError(f"--node is required; eligible nodes: {list(eligible_nodes(rs))}")
    return build_pair(rs, args.node)


def _resolve_weight(pair: BdsPair, args) -> Weight0:
    if getattr(args, "delta_weight", None):
        dw = _parse_delta_weight(pair.rs.rank, args.delta_weight)
        return weylcrit.weight_restrict(pair, dw)
    if getattr(args, "weight", None):
        return Weight0.parse(args.weight)
    return Weight0()


def _pair_payload(pair: BdsPair) -> dict:
    chain = pair.reflection_chain()
    return {
        "type": pair.rs.type_letter,
        "rank": pair.rs.rank,
        "node": pair.j,
        "a_j": pair.a_j,
        "alpha0": list(pair.alpha0),
        "alpha0_str": format_root(pair.alpha0),
        "delta0_labels": list(pair.delta0_labels),
        "delta0": [list(r) for r in pair.delta0],
        "marks_alpha0": list(pair.marks_alpha0),
        "comarks_alpha0": list(pair.comarks_alpha0),
        "g0_components": list(pair.g0_components),
        "graded_sizes": [len(pair.graded_roots(k)) for k in range(pair.a_j)],
        "graded_dims": [pair.graded_dim(s) for s in range(2 * pair.a_j)],
        "thetas": [list(pair.theta_k(k)) for k in range(1, pair.a_j)],
        "chain_nodes": list(chain.node_sequence),
        "chain_roots": [list(beta) for _, beta in chain.entries],
    }


def cmd_pair(args):
    pair = _resolve_pair(args)
    payload = _pair_payload(pair)
    text = [
        f"pair: {pair.rs.type_letter}{pair.rs.rank}, node {pair.j}, a_j = {pair.a_j}",
        f"alpha0 = {format_root(pair.alpha0)}",
        "delta0 = " + ", ".join(
            f"[{label}] {format_root(r)}" for label, r in zip(pair.delta0_labels, pair.delta0)),
        f"g0 components: {', '.join(pair.g0_components)}",
        f"comarks of alpha0: {list(pair.comarks_alpha0)}",
        "graded root counts: " + ", ".join(
            f"|R_{k}| = {len(pair.graded_roots(k))}" for k in range(pair.a_j)),
    ]
    for k in range(1, pair.a_j):
        text.append(f"theta_{k} = {format_root(pair.theta_k(k))}")
    text.append("reflection chain nodes: " + "-".join(map(str, payload["chain_nodes"])))
    text.append("graded dims s=0..%d: %s" % (2 * pair.a_j - 1, payload["graded_dims"]))
    return payload, text, 0


def _presentation_payload(pres: SRPresentation, degree: int) -> dict:
    sc = pres.facets()
    hs = pres.hilbert_series(degree)
    flags = pres.flags()
    pair = pres.pair
    out = {
        "weight": pres.lam.format(),
        "caps": {str(i): pres.caps[i] for i in pair.rs.nodes},
        "variables": [[v.node, v.level, v.degree] for v in pres.variables],
        "generators": [sorted([v.node, v.level] for v in g) for g in pres.generators],
        "presentation": pres.format(),
        "krull_dim": pres.krull_dim(),
        "d_lambda": pres.d_lambda() if pres.jac_zero else None,
        "facets": sorted(sorted([v.node, v.level] for v in f) for f in sc.facets),
        "hilbert": {
            "degree": hs.truncation_degree,
            "coefficients": list(hs.coefficients),
            "closed_form": None if hs.closed_form is None else {
                "numerator": list(hs.closed_form.numerator),
                "denominator": list(hs.closed_form.denominator),
                "display": hs.closed_form.format(),
            },
        },
        "flags": {
            "jac_zero": flags["jac_zero"],
            "koszul": "true" if flags["koszul"] else "unknown",
            "pure": flags["pure"],
            "cohen_macaulay_certified": flags["cohen_macaulay_certified"],
        },
        "verdicts": {
            "alambda_trivial": weylcrit.is_alambda_trivial(pair, pres.lam),
            "global_weyl_irreducible": weylcrit.is_global_weyl_irreducible(pair, pres.lam),
        },
    }
    return out


def cmd_alambda(args):
    pair = _resolve_pair(args)
    lam = _resolve_weight(pair, args)
    pres = presentation(pair, lam)
    payload = {"pair": _pair_payload(pair), **_presentation_payload(pres, args.degree)}
    v = payload["verdicts"]
    f = payload["flags"]
    text = [
        f"pair: {pair.describe()}",
        f"weight: {lam.format()}",
        f"presentation: {pres.format()}" + ("   (A_lambda = C)" if not pres.variables else ""),
        f"Krull dimension: {payload['krull_dim']}",
        "facets: " + ("; ".join(
            "{" + ", ".join(f"P({n},{r})" for n, r in fa) + "}" for fa in payload["facets"]) or "{}"),
        f"Hilbert coefficients to degree {args.degree}: {payload['hilbert']['coefficients']}",
    ]
    if payload["hilbert"]["closed_form"]:
        text.append(f"Hilbert closed form: {payload['hilbert']['closed_form']['display']}")
    lower = lambda b: str(b).lower() if isinstance(b, bool) else b
    text.append(
        f"flags: jac_zero={lower(f['jac_zero'])} koszul={f['koszul']} pure={lower(f['pure'])} "
        f"cohen_macaulay_certified={lower(f['cohen_macaulay_certified'])}")
    text.append(f"A_lambda trivial (one-dimensional modulo radical): {lower(v['alambda_trivial'])}")
    text.append(f"W(lambda) irreducible: {lower(v['global_weyl_irreducible'])}")
    return payload, text, 0


def cmd_hilbert(args):
    pair = _resolve_pair(args)
    lam = _resolve_weight(pair, args)
    pres = presentation(pair, lam)
    hs = pres.hilbert_series(args.degree)
    payload = {
        "weight": lam.format(),
        "degree": hs.truncation_degree,
        "coefficients": list(hs.coefficients),
        "closed_form": None if hs.closed_form is None else {
            "numerator": list(hs.closed_form.numerator),
            "denominator": list(hs.closed_form.denominator),
            "display": hs.closed_form.format(),
        },
    }
    text = [f"Hilbert coefficients to degree {args.degree}: {payload['coefficients']}"]
    if payload["closed_form"]:
        text.append(f"closed form: {payload['closed_form']['display']}")
    return payload, text, 0


def cmd_localdim(args):
    pair = _resolve_pair(args)
    rep = weylcrit.local_weyl_dim_report(pair, args.fundamental, args.power)
    payload = {
        "fundamental": rep.node,
        "power": rep.multiplicity,
        "value": rep.value,
        "displayed_value": rep.displayed_value,
        "displayed_mismatch": rep.mismatch,
        "spin_value": rep.spin_value,
    }
    return payload, rep.lines(), 0


def _draw_params(pair: BdsPair, lam: Weight0, rng: random.Random, k: int) -> EvalParams:
    c = pair.comarks_alpha0
    remaining = {i: lam[i] for i in pair.i_complement}
    remaining_h0 = lam[0]
    points = []
    powers = distinct_fractions(rng, k)
    for s in range(k):
        vals = {}
        for i in pair.i_complement:
            cap = remaining[i]
            if c[i - 1] > 0:
                cap = min(cap, remaining_h0 // c[i - 1])
            vals[i] = rng.randrange(0, cap + 1)
            remaining[i] -= vals[i]
            remaining_h0 -= c[i - 1] * vals[i]
        cap_j = remaining_h0 // c[pair.j - 1]
        vals[pair.j] = rng.randrange(0, cap_j + 1)
        remaining_h0 -= c[pair.j - 1] * vals[pair.j]
        points.append(EvalPoint(powers[s], DeltaWeight.of(pair.rs.rank, vals)))
    mu_vals = dict(remaining)
    mu_vals[0] = remaining_h0
    return EvalParams(mu=Weight0(mu_vals), points=tuple(points))


def cmd_idealpoint(args):
    pair = _resolve_pair(args)
    lam = _resolve_weight(pair, args)
    rng = random.Random(args.seed)
    params = _draw_params(pair, lam, rng, args.points)
    point = weylcrit.ideal_point_from_params(pair, lam, params)
    payload = {
        "weight": lam.format(),
        "seed": args.seed,
        "mu": params.mu.format(),
        "mu_h0": point.mu_h0,
        "points": [{"z_power": _frac(p.z_power), "weight": list(p.weight.values)}
                   for p in params.points],
        "pi": {f"{i},{r}": _frac(c) for (i, r), c in sorted(point.nonzero_entries().items())},
        "degrees": [point.degree(i) for i in pair.rs.nodes],
        "verified": True,
    }
    text = [
        f"weight: {lam.format()}  mu: {params.mu.format()}",
        "points: " + ("; ".join(
            f"z^a_j={_frac(p.z_power)}, weight={list(p.weight.values)}" for p in params.points) or "none"),
        "pi entries: " + (", ".join(f"pi[{k}]={v}" for k, v in payload["pi"].items()) or "all zero"),
        "presentation relations and degree identity: verified",
    ]
    return payload, text, 0


def cmd_garland_check(args):
    pair = _resolve_pair(args)
    failures = []
    for alpha in pair.rs.positive_roots:
        diff = garland.product_formula_diff(pair, alpha, args.order)
        if diff is not None:
            failures.append({"root": list(alpha), "check": "product_formula",
                             "order": diff[0], "lhs": repr(diff[1]), "rhs": repr(diff[2])})
        diff = garland.grouplike_diff(pair, alpha, args.order)
        if diff is not None:
            failures.append({"root": list(alpha), "check": "grouplike",
                             "order": diff[0], "lhs": repr(diff[1]), "rhs": repr(diff[2])})
        if not garland.newton_identity_holds(pair, alpha, args.order):
            failures.append({"root": list(alpha), "check": "newton", "order": args.order})
    payload = {
        "order": args.order,
        "roots_checked": len(pair.rs.positive_roots),
        "failures": failures,
        "status": "pass" if not failures else "fail",
    }
    text = [f"garland checks at order {args.order} over {payload['roots_checked']} positive roots: "
            + payload["status"]]
    for f in failures:
        text.append(f"  FAIL {f['check']} at root {f['root']}, first differing coefficient u^{f.get('order')}")
    return payload, text, 0 if not failures else 1


def cmd_verify_all(args):
    results = run_all(max_rank=args.max_rank, seed=args.seed)
    payload = {
        "max_rank": args.max_rank,
        "seed": args.seed,
        "results": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
        "status": "pass" if all(r.ok for r in results) else "fail",
    }
    text = [r.line() for r in results]
    text.append(f"overall: {payload['status']}")
    return payload, text, 0 if payload["status"] == "pass" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bdsweyl",
        description="Exact computations for Borel-de Siebenthal pairs, the "
                    "Stanley-Reisner presentation of global Weyl module endomorphism "
                    "algebras, and local Weyl module dimensions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pair_args(p, weight=False, degree=False):
        p.add_argument("type", choices=list("ABCDEFG"), help="simple type letter")
        p.add_argument("rank", type=int, help="rank of the root system")
        p.add_argument("--node", type=int, default=None, help="node j with mark >= 2")
        if weight:
            p.add_argument("--weight", default=None,
                           help="subalgebra weight, e.g. 'h2=1,h0=1' (default 0)")
            p.add_argument("--delta-weight", default=None,
                           help="ambient dominant weight, e.g. 'h1=0,h2=1,h3=0'; "
                                "converted to subalgebra coordinates")
        if degree:
            p.add_argument("--degree", type=int, default=24, help="Hilbert truncation degree")
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("pair", help="structure constants of the pair (g, g0)")
    add_pair_args(p)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("alambda", help="presentation, facets, Hilbert series, flags, criteria")
    add_pair_args(p, weight=True, degree=True)
    p.set_defaults(func=cmd_alambda)

    p = sub.add_parser("hilbert", help="Hilbert series only")
    add_pair_args(p, weight=True, degree=True)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("localdim", help="local Weyl module dimension for (B_n, D_n)")
    add_pair_args(p)
    p.add_argument("--fundamental", type=int, required=True,
                   help="index i of the fundamental subalgebra weight (0..n-1)")
    p.add_argument("--power", type=int, default=1, help="multiplicity r")
    p.set_defaults(func=cmd_localdim)

    p = sub.add_parser("idealpoint", help="random evaluation-parameter point, verified")
    add_pair_args(p, weight=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--points", type=int, default=2, help="number of evaluation points")
    p.set_defaults(func=cmd_idealpoint)

    p = sub.add_parser("garland-check", help="generating-series identities for P[alpha,r]")
    add_pair_args(p)
    p.add_argument("--order", type=int, default=3, help="truncation order N")
    p.set_defaults(func=cmd_garland_check)

    p = sub.add_parser("verify-all", help="run the whole invariant suite")
    p.add_argument("--max-rank", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, text, code = args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"property failure: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        payload = {"schema_version": SCHEMA_VERSION, "command": args.command, **payload}
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print("\n".join(text))
    return code


if __name__ == "__main__":
    sys.exit(main())
