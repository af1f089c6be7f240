"""Command-line front end.

Exit codes: 0 success / positive decision, 1 negative decision (with a
certificate), 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from .building import (
    BuildingSet,
    graphical_building_set,
    is_chordful,
    is_closed_under_intersection,
    intersection_witness,
)
from .errors import GammaTooSmall, ParseError, RemovahedraError
from .geometry import (
    FlipCertificate,
    SkewParams,
    btree_point,
    interior_functional,
    is_removahedron_realizable,
    iter_flip_certificates,
    removahedron_hrep,
    skew_point,
    skew_removahedron_hrep,
)
from .minkowski import canonical_weights, defo_hrep, face_of_nested, weights_to_rhs
from .nested import btree_from_nested, exchangeable_closure_holds, nested_complex
from .oracle import (
    enumerate_vertices,
    is_simple,
    normal_fan_matches,
    polytopes_equal,
)
from .serialization import (
    building_json,
    hrep_json,
    nested_json,
    parse_building_json,
    parse_graph_text,
    parse_rational,
    point_json,
    rational_str,
    tree_json,
    vrep_json,
    weights_json,
)


def _load(path: str, as_graph: bool):
    text = Path(path).read_text()
    if as_graph:
        g = parse_graph_text(text)
        return graphical_building_set(g), g
    return parse_building_json(text), None


def _gamma(value: str) -> SkewParams:
    return SkewParams(gamma=parse_rational(value))


def _certificate_json(cert: FlipCertificate) -> dict:
    ctx = cert.context
    return {
        "nested": [nested_json(n)["nested"] for n in cert.nested_pair],
        "exchanged": [sorted(cert.blocks[0]), sorted(cert.blocks[1])],
        "s": ctx.s,
        "s_prime": ctx.s_prime,
        "S": sorted(ctx.same_s),
        "S_prime": sorted(ctx.same_s_prime),
        "R": sorted(ctx.moved_to_s_prime),
        "R_prime": sorted(ctx.moved_to_s),
        "delta": rational_str(cert.coefficient),
    }


def _certificate_lines(cert: FlipCertificate) -> list[str]:
    j = _certificate_json(cert)
    return [
        f"flip: {j['exchanged'][0]} <-> {j['exchanged'][1]}",
        f"  nested sets: {j['nested'][0]} | {j['nested'][1]}",
        f"  s={j['s']} s'={j['s_prime']} S={j['S']} S'={j['S_prime']}"
        f" R={j['R']} R'={j['R_prime']}",
        f"  delta = {j['delta']}",
    ]


def cmd_validate(args) -> tuple[int, dict, list[str]]:
    b, _ = _load(args.input, args.graph)
    result = {"valid": True, "blocks": len(b.masks), "ground": list(b.ground)}
    return 0, result, [f"valid building set: {len(b.masks)} blocks on {b.n} elements"]


def cmd_analyze(args) -> tuple[int, dict, list[str]]:
    b, g = _load(args.input, args.graph)
    closed = is_closed_under_intersection(b)
    exch = exchangeable_closure_holds(b)
    decision = is_removahedron_realizable(b, collect_vertices=False)
    result = {
        "ground": list(b.ground),
        "blocks": len(b.masks),
        "connected": True,
        "intersection_closed": closed,
        "exchangeable_closure": exch,
        "realizable": decision.realizable,
    }
    lines = [
        f"ground: {b.n} elements, {len(b.masks)} blocks",
        "connected: true",
        f"intersection-closed: {str(closed).lower()}",
        f"exchangeable-closure: {str(exch).lower()}",
        f"realizable: {str(decision.realizable).lower()}",
    ]
    if not closed:
        w = intersection_witness(b)
        result["intersection_witness"] = [sorted(w[0]), sorted(w[1])]
        lines.insert(3, f"  witness: {sorted(w[0])}, {sorted(w[1])}")
    if g is not None:
        chordful = is_chordful(g)
        result["chordful"] = chordful
        lines.insert(2, f"chordful: {str(chordful).lower()}")
    return 0, result, lines


def cmd_nested(args) -> tuple[int, dict, list[str]]:
    b, _ = _load(args.input, args.graph)
    sets = nested_complex(b, maximal_only=args.maximal)
    result = {
        "maximal_only": args.maximal,
        "count": len(sets),
        "nested_sets": [nested_json(n)["nested"] for n in sets],
    }
    kind = "maximal nested sets" if args.maximal else "nested sets"
    lines = [f"{len(sets)} {kind}"] + [
        "  " + " ".join("{" + ",".join(blk) + "}" for blk in nested_json(n)["nested"])
        for n in sets
    ]
    return 0, result, lines


def cmd_realize(args) -> tuple[int, dict, list[str]]:
    b, _ = _load(args.input, args.graph)
    decision = is_removahedron_realizable(b)
    if decision.realizable:
        vertices = [
            {"nested": nested_json(n)["nested"], "point": point_json(pt)}
            for n, pt in decision.vertices
        ]
        result = {"realizable": True, "vertices": vertices}
        lines = [f"REALIZABLE: {len(vertices)} vertices"] + [
            "  (" + ", ".join(v["point"]) + ")" for v in vertices
        ]
        certs = []
        if args.certificates:
            certs = [_certificate_json(c) for c in iter_flip_certificates(b)]
            result["certificates"] = certs
        return 0, result, lines
    cert = decision.certificate
    result = {"realizable": False, "certificate": _certificate_json(cert)}
    lines = ["NOT_REALIZABLE"] + _certificate_lines(cert)
    return 1, result, lines


def cmd_skew(args) -> tuple[int, dict, list[str]]:
    b, _ = _load(args.input, args.graph)
    params = _gamma(args.gamma)
    certs = list(iter_flip_certificates(b, skew=params))
    bad = [c for c in certs if c.coefficient <= 0]
    maximal = nested_complex(b, maximal_only=True)
    vertices = [
        {
            "nested": nested_json(n)["nested"],
            "point": point_json(skew_point(btree_from_nested(b, n), params)),
        }
        for n in maximal
    ]
    result = {
        "gamma": rational_str(params.gamma),
        "realizable": not bad,
        "vertices": vertices,
    }
    if bad:
        result["certificate"] = _certificate_json(bad[0])
        return 1, result, ["NOT_REALIZABLE (skew)"] + _certificate_lines(bad[0])
    lines = [
        f"REALIZABLE with gamma={rational_str(params.gamma)}: "
        f"{len(vertices)} vertices"
    ] + ["  (" + ", ".join(v["point"]) + ")" for v in vertices]
    return 0, result, lines


def cmd_decompose(args) -> tuple[int, dict, list[str]]:
    b, _ = _load(args.input, args.graph)
    w = canonical_weights(b)
    result = weights_json(w)
    lines = ["Minkowski decomposition (dilated simplex faces):"]
    for block, y in w.items_by_block():
        lines.append(f"  {rational_str(y)} * simplex{{{','.join(block)}}}")
    return 0, result, lines


def cmd_verify(args) -> tuple[int, dict, list[str]]:
    b, g = _load(args.input, args.graph)
    rng = random.Random(args.seed)
    checks: list[tuple[str, bool]] = []
    decision = is_removahedron_realizable(b, collect_vertices=False)
    oracle_decision = normal_fan_matches(b, removahedron_hrep(b))
    checks.append(("flip criterion agrees with polytope oracle",
                   decision.realizable == oracle_decision))
    if g is not None:
        checks.append(("chordful iff realizable",
                       is_chordful(g) == decision.realizable))
    if is_closed_under_intersection(b):
        checks.append(("realizable (closed under intersection)",
                       decision.realizable))
        w = canonical_weights(b)
        checks.append((
            "removahedron equals its canonical Minkowski sum",
            polytopes_equal(removahedron_hrep(b), defo_hrep(weights_to_rhs(w))),
        ))
    gammas = [Fraction(3), Fraction(5, 2), Fraction(2) + Fraction(1, rng.randint(2, 9))]
    for gamma in gammas:
        params = SkewParams(gamma=gamma)
        ok = all(c.coefficient > 0 for c in iter_flip_certificates(b, skew=params))
        ok = ok and normal_fan_matches(b, skew_removahedron_hrep(b, params))
        checks.append((f"skew realization with gamma={rational_str(gamma)}", ok))
    result = {
        "realizable": decision.realizable,
        "checks": [{"name": name, "passed": ok} for name, ok in checks],
    }
    lines = [
        f"[{'PASS' if ok else 'FAIL'}] {name}" for name, ok in checks
    ]
    code = 0 if all(ok for _, ok in checks) else 1
    return code, result, lines


def cmd_export(args) -> tuple[int, dict, list[str]]:
    b, _ = _load(args.input, args.graph)
    params = _gamma(args.gamma) if args.gamma else None
    if args.format != "vrep":
        p = skew_removahedron_hrep(b, params) if params else removahedron_hrep(b)
        result = hrep_json(p)
    else:
        maximal = nested_complex(b, maximal_only=True)
        entries = []
        for n in maximal:
            t = btree_from_nested(b, n)
            pt = skew_point(t, params) if params else btree_point(t)
            entries.append((t, tuple(Fraction(x) for x in pt)))
        result = vrep_json(entries)
    return 0, result, [json.dumps(result, indent=2, sort_keys=True)]


COMMANDS = {
    "validate": cmd_validate,
    "analyze": cmd_analyze,
    "nested": cmd_nested,
    "realize": cmd_realize,
    "skew": cmd_skew,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
    "export": cmd_export,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="removahedra",
        description="Exact realizability analysis of nested fans by removahedra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, **extra):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="building-set JSON file (or graph file with --graph)")
        p.add_argument("--graph", action="store_true",
                       help="parse the input as a graph edge list")
        p.add_argument("--format", choices=["text", "json", "hrep", "vrep"],
                       default=extra.pop("default_format", "text"))
        if extra.pop("gamma", False):
            p.add_argument("--gamma", metavar="P/Q",
                           required=extra.pop("gamma_required", False),
                           help="skew parameter, a rational > 2")
        if extra.pop("maximal", False):
            p.add_argument("--maximal", action="store_true",
                           help="only inclusion-maximal nested sets")
        if extra.pop("certificates", False):
            p.add_argument("--certificates", action="store_true",
                           help="include one certificate per flip")
        if extra.pop("seed", False):
            p.add_argument("--seed", type=int, default=0,
                           help="seed for the randomized checks")
        return p

    add("validate", "check the building-set axioms")
    add("analyze", "structural predicates and the realizability decision")
    add("nested", "enumerate nested sets", maximal=True)
    add("realize", "decide removahedron realizability", certificates=True)
    add("skew", "skew realizability for a given gamma", gamma=True,
        gamma_required=True)
    add("decompose", "canonical Minkowski decomposition")
    add("verify", "full oracle cross-check suite", seed=True)
    add("export", "emit the H- or V-representation", gamma=True,
        default_format="hrep")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, result, lines = COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GammaTooSmall as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RemovahedraError as exc:
        if args.command == "validate":
            print(f"invalid: {exc}")
            return 1
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if getattr(args, "format", "text") == "json":
        envelope = {
            "command": args.command,
            "result": result,
            "certificates": result.get("certificates", []),
        }
        print(json.dumps(envelope, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
