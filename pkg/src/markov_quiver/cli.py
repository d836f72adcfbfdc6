"""Command-line interface.

Integers are read and written as decimal strings so arbitrarily large values
survive the JSON boundary unchanged.  Exit status: 0 on success, 1 on a domain
error (or a failed ``verify``), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, classify, hochschild, orbits, spectral
from .classify import Field
from .core import Triple, _parse_int, m_case, markov_constant
from .verify import CHECK_NAMES, run_verify


def big_int(text: str) -> int:
    try:
        return _parse_int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def positive_int(text: str) -> int:
    value = big_int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _matrix_json(m) -> list[list[str]]:
    return [[str(v) for v in row] for row in m]


# -- subcommands; each returns a JSON document or a list of JSON-lines records --


def cmd_decide(args):
    t = Triple(args.x, args.y, args.z)
    acyclic = classify.predicate_constant(t)
    cyclic = classify.predicate_band(t)
    result = classify.descend(t)
    body = result.to_json()
    out = {"verdict": body.pop("verdict"), "constant": body.pop("constant"), **body}
    out["predicates"] = {"constant_says_acyclic": acyclic, "band_says_cyclic": cyclic}
    out["agree"] = (acyclic != cyclic) and (cyclic == result.is_cyclic)
    return out


def cmd_descend(args):
    t = Triple(args.x, args.y, args.z)
    result = classify.descend(t)
    out = {"input": t.to_json(), **result.to_json()}
    out["steps"] = len(result.witness)
    return out


def _seeds(values) -> list[Triple]:
    return [Triple(*values[i : i + 3]) for i in range(0, len(values), 3)]


def cmd_orbit(args):
    seeds = _seeds(args.seeds)
    if args.dot and len(seeds) != 1:
        raise ValueError("--dot needs exactly one seed")
    records = []
    for seed in seeds:
        summary = orbits.summarize_orbit(seed, max_abs=args.max_abs, max_nodes=args.max_nodes)
        records.append(summary.to_json())
    if args.dot:
        graph = orbits.enumerate_orbit(seeds[0], args.max_abs, args.max_nodes, args.depth)
        Path(args.dot).write_text(orbits.export_dot(graph))
    return records


def cmd_dot(args):
    graph = orbits.enumerate_orbit(Triple(args.x, args.y, args.z), args.max_abs, args.max_nodes, args.depth)
    return orbits.export_dot(graph)


def cmd_reps(args):
    C = args.constant
    records = []
    if args.side in ("cyclic", "both"):
        if C == 4:
            raise orbits.InfiniteFamilyError(C)
        for t in orbits.cyclic_representatives(C):
            records.append({"verdict": "cyclic", "constant": str(C), "representative": t.to_json()})
    if args.side in ("acyclic", "both") and C >= 0:
        for cls in orbits.acyclic_representatives(C, max_abs=args.max_abs, max_nodes=args.max_nodes):
            records.append({"constant": str(C), **cls.to_json()})
    return records


def cmd_constant(args):
    t = Triple(args.x, args.y, args.z)
    c = markov_constant(t)
    out = {
        "triple": t.to_json(),
        "constant": str(c),
        "m_case": m_case(t).value,
        "in_fundamental_domain": classify.in_fundamental_domain(t),
        "in_open_domain": classify.in_open_domain(t),
    }
    if t.x >= 2 and t.y >= 2:
        try:
            b = classify.band(t.x, t.y)
            out["band"] = {"m_minus": b.m_minus, "m_plus": b.m_plus}
        except OverflowError:
            out["band"] = None  # beyond float range; the exact predicates still apply
    if 0 <= c <= 4 and t not in classify.singular_points(c):
        out["component"] = classify.component_of(t).value
    return out


def cmd_spectrum(args):
    t = Triple(args.x, args.y, args.z)
    d = spectral.cartan(t)
    phi = spectral.coxeter(d)
    out = {
        "triple": t.to_json(),
        "cartan": _matrix_json(d),
        "coxeter": _matrix_json(phi),
        "trace": str(spectral.trace(phi)),
        "det": str(spectral.det3(phi)),
        "char_poly": [str(c) for c in spectral.char_poly(phi)],
    }
    out.update(spectral.spectrum(t).to_json())
    return out


def cmd_slice(args):
    table = classify.component_table(args.C)
    return {
        "C": str(args.C),
        "z": str(args.z),
        "kind": classify.slice_classify(args.C, args.z).value,
        "components": table._asdict(),
        "singular_points": {
            f.value: [t.to_json() for t in sorted(classify.singular_points(args.C, f))] for f in Field
        },
    }


def cmd_hochschild(args):
    q = hochschild.AcyclicQuiver3(args.r, args.s, args.t)
    out = {
        "quiver": q.to_json(),
        "components": q.components(),
        "path_counts": {f"{a}->{b}": str(v) for (a, b), v in hochschild.path_counts(q).items()},
        "dim_h1": str(hochschild.dim_h1(q)),
    }
    if q.r > 0 and q.s > 0:
        mutated = hochschild.mutate_to_cyclic(q)
        out["mutated"] = mutated.to_json()
        out["constant"] = str(markov_constant(mutated))
        out["theorem_holds"] = hochschild.verify_appendix_theorem(q)
    else:
        out["mutated"] = None
        out["theorem_holds"] = None
    return out


def cmd_candidates(args):
    return [{"constant": str(args.C), **q.to_json()} for q in hochschild.hereditary_candidates(args.C)]


def cmd_verify(args):
    report = run_verify(
        box=args.box,
        samples=args.samples,
        seed=args.seed,
        only=args.check,
        workers=args.workers,
        figures_dir=args.figures,
    )
    return report.to_json()


# -- output -------------------------------------------------------------------


def _flat(value) -> str:
    if isinstance(value, list):
        return "(" + ", ".join(_flat(v) for v in value) + ")"
    if isinstance(value, dict):
        return ", ".join(f"{k}={_flat(v)}" for k, v in value.items())
    return str(value)


def render_pretty(payload) -> str:
    if isinstance(payload, str):
        return payload.rstrip("\n")
    if isinstance(payload, dict) and "checks" in payload:
        lines = [f"{'check':45} {'result':6} {'checked':>9}  detail"]
        for c in payload["checks"]:
            status = "PASS" if c["passed"] else "FAIL"
            lines.append(f"{c['name']:45} {status:6} {c['checked']:>9}  {c['detail']}")
            for ex in c["counterexamples"]:
                lines.append(f"    counterexample: {_flat(ex)}")
        lines.append(f"overall: {'PASS' if payload['passed'] else 'FAIL'} (box {payload['box']})")
        lines.extend(f"figure: {p}" for p in payload["figures"])
        return "\n".join(lines)
    if isinstance(payload, dict):
        width = max(len(k) for k in payload)
        return "\n".join(f"{k:<{width}}  {_flat(v)}" for k, v in payload.items())
    if not payload:
        return "(no results)"
    keys = list(payload[0])
    rows = [[_flat(r.get(k, "")) for k in keys] for r in payload]
    widths = [max(len(k), *(len(r[i]) for r in rows)) for i, k in enumerate(keys)]
    lines = ["  ".join(k.ljust(w) for k, w in zip(keys, widths))]
    lines += ["  ".join(v.ljust(w) for v, w in zip(r, widths)) for r in rows]
    return "\n".join(line.rstrip() for line in lines)


def emit(payload, pretty: bool, stream=None) -> None:
    stream = stream or sys.stdout
    if pretty:
        print(render_pretty(payload), file=stream)
    elif isinstance(payload, str):
        stream.write(payload)
    elif isinstance(payload, list):
        for record in payload:
            print(json.dumps(record, separators=(",", ":")), file=stream)
    else:
        print(json.dumps(payload, separators=(",", ":")), file=stream)


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", help="JSON output (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", help="human-readable table")
    common.set_defaults(pretty=False)

    parser = argparse.ArgumentParser(
        prog="markov-quiver",
        description="Cluster-cyclic rank-3 quivers and the Markov constant.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def triple_cmd(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for coord in ("x", "y", "z"):
            p.add_argument(coord, type=big_int)
        p.set_defaults(func=func)
        return p

    def bounds(p, depth=False):
        p.add_argument("--max-abs", type=positive_int, default=None, help="largest |entry| visited")
        p.add_argument("--max-nodes", type=positive_int, default=10_000, help="node limit")
        if depth:
            p.add_argument("--depth", type=positive_int, default=None, help="BFS depth limit")

    triple_cmd("decide", cmd_decide, "cyclic/acyclic verdict from all three procedures")
    triple_cmd("descend", cmd_descend, "mutation descent with witness word")
    triple_cmd("constant", cmd_constant, "Markov constant, M-case, domain tests, band values")
    triple_cmd("spectrum", cmd_spectrum, "Cartan/Coxeter matrices and eigenvalue data")

    p = sub.add_parser("orbit", parents=[common], help="orbit summaries as JSON lines")
    p.add_argument("seeds", nargs="+", type=big_int, metavar="N", help="one or more triples x y z")
    bounds(p, depth=True)
    p.add_argument("--dot", metavar="FILE", help="write the orbit graph of the seed as DOT")
    p.set_defaults(func=cmd_orbit)

    p = triple_cmd("dot", cmd_dot, "orbit graph in DOT format")
    bounds(p, depth=True)

    p = sub.add_parser("reps", parents=[common], help="orbit representatives for a Markov constant")
    p.add_argument("--constant", "-C", type=big_int, required=True)
    p.add_argument("--side", choices=("cyclic", "acyclic", "both"), default="both")
    p.add_argument("--max-abs", type=positive_int, default=None, help="search bound for acyclic merges")
    p.add_argument("--max-nodes", type=positive_int, default=50_000)
    p.set_defaults(func=cmd_reps)

    p = sub.add_parser("slice", parents=[common], help="real slice shape and surface components")
    p.add_argument("C", type=big_int)
    p.add_argument("z", type=big_int)
    p.set_defaults(func=cmd_slice)

    p = sub.add_parser("hochschild", parents=[common], help="dim H^1 of the path algebra of Q(r,s,t)")
    for name in ("r", "s", "t"):
        p.add_argument(name, type=big_int)
    p.set_defaults(func=cmd_hochschild)

    p = sub.add_parser("candidates", parents=[common], help="Q(r,s,t) with dim H^1 + 2 = C, as JSON lines")
    p.add_argument("C", type=big_int)
    p.set_defaults(func=cmd_candidates)

    p = sub.add_parser("verify", parents=[common], help="run every check on a box")
    p.add_argument("--box", type=int, default=20)
    p.add_argument("--samples", type=positive_int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--check", action="append", choices=CHECK_NAMES, help="run only this check (repeatable)")
    p.add_argument("--workers", type=positive_int, default=1)
    p.add_argument("--figures", metavar="DIR", help="also render figures into DIR")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "orbit" and len(args.seeds) % 3:
        parser.error("orbit seeds must come in groups of three integers")
    try:
        payload = args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    emit(payload, args.pretty)
    if args.command == "verify" and not payload["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
