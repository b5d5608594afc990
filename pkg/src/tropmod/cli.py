"""Command-line front end: enumeration, embedding, certification, export.

Exit codes: 0 on success, 1 on usage or input errors, 2 when a requested
certificate fails.  Output ordering is canonical, so runs are byte-for-byte
reproducible.  The TROPMOD_THREADS environment variable caps the number of
worker threads used for per-face certificate checks.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import divisors, maps, moduli, serialization, trees
from .errors import TropmodError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CERTIFICATE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _thread_cap() -> int:
    raw = os.environ.get("TROPMOD_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"TROPMOD_THREADS must be a positive integer, got {raw!r}")
    if cap < 1:
        raise UsageError(f"TROPMOD_THREADS must be a positive integer, got {raw!r}")
    return cap


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}")


def _dump(obj, out) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


def build_parser() -> _Parser:
    parser = _Parser(prog="tropmod", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list combinatorial types")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("embed", help="embed a point (vector JSON to stdout)")
    p.add_argument("--point", metavar="FILE", required=True)
    p.add_argument("--format", choices=("text", "json"), default="json")

    p = sub.add_parser("reconstruct", help="invert the embedding on a finite vector")
    p.add_argument("--vector", metavar="FILE", required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("check", help="run a certificate; exit 2 on failure")
    p.add_argument("what", choices=("balancing", "smooth", "psi"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--fan", metavar="FILE")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("forget", help="apply a forgetful map to a point")
    p.add_argument("--point", metavar="FILE", required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--relabel", action="store_true", help="relabel leaves densely to 1..n")

    p = sub.add_parser("section", help="apply the section of marking k to a point")
    p.add_argument("--point", metavar="FILE", required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("decompose", help="cut a boundary point along infinite edges")
    p.add_argument("--point", metavar="FILE", required=True)

    p = sub.add_parser("export", help="export the link graph, a fan, or an embedding")
    p.add_argument("target", choices=("link", "fan", "embed"))
    p.add_argument("--n", type=int)
    p.add_argument("--point", metavar="FILE")
    p.add_argument("--format", choices=("dot", "json"), default=None)
    p.add_argument("--output", metavar="FILE")

    return parser


def _require(value, flag: str, command: str):
    if value is None:
        raise UsageError(f"{command} requires {flag}")
    return value


def _cmd_enumerate(args, out) -> int:
    types = trees.enumerate_types(args.n, args.dim)
    if args.format == "json":
        _dump(
            {
                "n": args.n,
                "dim": args.dim,
                "count": len(types),
                "types": [serialization.type_to_json(t) for t in types],
            },
            out,
        )
    else:
        out.write(f"{len(types)}\n")
        for t in types:
            out.write(t.text + "\n")
    return EXIT_OK


def _cmd_embed(args, out) -> int:
    point = serialization.point_from_json(_load_json(args.point))
    vector = moduli.embed(point)
    if args.format == "text":
        for r, value in zip(vector.coordinates, vector.entries):
            out.write(f"{r.first}{r.second}: {serialization.format_extended(value)}\n")
    else:
        _dump(serialization.vector_to_json(vector), out)
    return EXIT_OK


def _cmd_reconstruct(args, out) -> int:
    vector = serialization.vector_from_json(_load_json(args.vector), args.n)
    point = moduli.reconstruct(vector, args.n)
    _dump(serialization.point_to_json(point), out)
    return EXIT_OK


def _report_lines(reports, out, kind: str) -> bool:
    all_ok = True
    for rep in reports:
        ok = rep.balanced if rep.smooth is None else (rep.balanced and rep.smooth)
        all_ok = all_ok and ok
        verdict = []
        verdict.append("balanced" if rep.balanced else "UNBALANCED")
        if rep.smooth is not None:
            verdict.append("smooth" if rep.smooth else "NOT SMOOTH")
        out.write(
            f"{kind} {rep.face.text}: {len(rep.adjacent)} adjacent, "
            + ", ".join(verdict)
            + "\n"
        )
    return all_ok


def _cmd_check(args, out) -> int:
    workers = _thread_cap()
    if args.what == "balancing":
        if args.fan is not None:
            fan = serialization.fan_from_json(_load_json(args.fan))
        else:
            fan = divisors.moduli_fan(_require(args.n, "--n", "check balancing"))
        reports = divisors.check_balanced(fan, max_workers=workers)
    elif args.what == "psi":
        n = _require(args.n, "--n", "check psi")
        k = _require(args.k, "--k", "check psi")
        try:
            reports = divisors.check_psi_balanced(n, k, max_workers=workers)
        except ValueError as exc:
            raise UsageError(str(exc))
    else:  # smooth
        n = _require(args.n, "--n", "check smooth")
        taus = trees.enumerate_types(n, n - 4)
        reports = [divisors.check_smooth_local(n, t) for t in taus]

    if args.format == "json":
        payload = {
            "check": args.what,
            "reports": [serialization.report_to_json(r) for r in reports],
        }
        ok = all(
            r.balanced and (r.smooth is None or r.smooth) for r in reports
        )
        payload["all_passed"] = ok
        _dump(payload, out)
    else:
        label = "face" if args.what != "smooth" else "codim-1 type"
        ok = _report_lines(reports, out, label)
        out.write(("all checks passed" if ok else "CERTIFICATE FAILED") + "\n")
    return EXIT_OK if ok else EXIT_CERTIFICATE


def _cmd_forget(args, out) -> int:
    point = serialization.point_from_json(_load_json(args.point))
    image = maps.forget(point, args.j)
    if args.relabel:
        image = maps.relabel(image)
    _dump(serialization.point_to_json(image), out)
    return EXIT_OK


def _cmd_section(args, out) -> int:
    point = serialization.point_from_json(_load_json(args.point))
    _dump(serialization.point_to_json(maps.section(point, args.k)), out)
    return EXIT_OK


def _cmd_decompose(args, out) -> int:
    point = serialization.point_from_json(_load_json(args.point))
    _dump(serialization.decomposition_to_json(maps.decompose_boundary(point)), out)
    return EXIT_OK


def _link_dot(graph: moduli.LinkGraph) -> str:
    lines = [f"graph link_n{graph.n} {{"]
    for ray in graph.vertices:
        split = next(iter(ray.splits))
        lines.append(f'  "{split.text}";')
    for (a, b), quadrant in zip(graph.edges, graph.quadrants):
        ta = next(iter(graph.vertices[a].splits)).text
        tb = next(iter(graph.vertices[b].splits)).text
        lines.append(f'  "{ta}" -- "{tb}"; // {quadrant.text}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_export(args, out) -> int:
    target = args.target
    if target == "link":
        n = _require(args.n, "--n", "export link")
        if n < 5:
            raise UsageError("export link needs --n >= 5")
        graph = moduli.link_graph(n)
        fmt = args.format or "dot"
        if fmt == "dot":
            text = _link_dot(graph)
        else:
            text = (
                json.dumps(
                    {
                        "n": n,
                        "vertices": [serialization.type_to_json(t) for t in graph.vertices],
                        "edges": [list(e) for e in graph.edges],
                    },
                    indent=2,
                )
                + "\n"
            )
    elif target == "fan":
        n = _require(args.n, "--n", "export fan")
        text = json.dumps(serialization.fan_to_json(divisors.moduli_fan(n)), indent=2) + "\n"
    else:  # embed
        path = _require(args.point, "--point", "export embed")
        point = serialization.point_from_json(_load_json(path))
        vector = moduli.embed(point)
        text = json.dumps(serialization.vector_to_json(vector), indent=2) + "\n"

    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc}")
    else:
        out.write(text)
    return EXIT_OK


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "embed": _cmd_embed,
    "reconstruct": _cmd_reconstruct,
    "check": _cmd_check,
    "forget": _cmd_forget,
    "section": _cmd_section,
    "decompose": _cmd_decompose,
    "export": _cmd_export,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TropmodError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
