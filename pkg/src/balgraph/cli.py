"""Command-line interface: constructions, checks, censuses, verifications.

One binary with verb-noun subcommands.  Exit codes follow a fixed
contract: 0 on success (including "verified, no counterexample"), 1 when
a verification run finds a counterexample (details printed as JSON), and
2 on usage errors such as malformed graph6, bad group specs, or
out-of-range bounds.

Graphs travel as graph6 lines (stdin or file), embeddings as one line
per vertex (``v: neighbors in cyclic order``), and structured results as
JSON.  The environment variable BALGRAPH_MAX_VERTICES lowers the size
cap of the isomorphism and planarity machinery.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

from .balance import balance_report
from .cayley import (
    ConnectionSetError,
    cayley_graph,
    lt_cycle,
    verify_cayley_classification,
    verify_circulant_structure,
)
from .census import CensusError, count_balanced_cubic, enumerate_cubic_bipartite
from .census import check_conjecture_consequences, check_conjecture_twins
from .cover import CoverError, verify_divisibility
from .graph6 import from_graph6, to_graph6
from .graphs import Graph, GraphError
from .groups import GroupError, parse_group_spec
from .planar import batagelj_enumerate, embedding_to_text, verify_sv_claims

__all__ = ["main"]


def _print_json(obj: object) -> None:
    print(json.dumps(obj))


def _read_graph6_input(source: str) -> list[Graph]:
    """Graphs from a file path or stdin ('-'), one graph6 line each."""
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, "r", encoding="ascii") as handle:
                text = handle.read()
        except OSError as exc:
            raise GraphError(f"cannot read {source}: {exc}") from None
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            graphs.append(from_graph6(line))
        except (GraphError, ValueError) as exc:
            raise GraphError(f"line {lineno}: malformed graph6 {line!r}: {exc}") from None
    if not graphs:
        raise GraphError(f"no graph6 lines found in {source!r}")
    return graphs


def _write_payload(lines: Iterable[str], out: str | None) -> None:
    text = "".join(f"{line}\n" for line in lines)
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii") as handle:
            handle.write(text)


# ---------------------------------------------------------------- balance


def _cmd_balance_check(args: argparse.Namespace) -> int:
    for g in _read_graph6_input(args.input):
        report = balance_report(g)
        _print_json(
            {
                "vertices": g.n,
                "balanced": report.balanced,
                "reason": report.reason,
                "witness": list(report.witness) if report.witness is not None else None,
            }
        )
    return 0


# -------------------------------------------------------------------- gen


def _cmd_gen_lt_cycle(args: argparse.Namespace) -> int:
    g = lt_cycle(args.length, args.size)
    _write_payload([to_graph6(g)], args.out)
    return 0


def _parse_element(text: str, rank: int) -> tuple[int, ...]:
    try:
        coords = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise GroupError(f"malformed element {text!r}: coordinates must be integers") from None
    if len(coords) != rank:
        raise GroupError(f"element {text!r} has {len(coords)} coordinates, expected {rank}")
    return coords


def _cmd_gen_cayley(args: argparse.Namespace) -> int:
    group = parse_group_spec(args.group)
    rank = len(group.factors)
    connection = set()
    for token in args.element:
        x = tuple(c % d for c, d in zip(_parse_element(token, rank), group.factors))
        connection.add(x)
        connection.add(group.neg(x))
    g, _ = cayley_graph(group, frozenset(connection))
    _write_payload([to_graph6(g)], args.out)
    return 0


# ----------------------------------------------------------------- census


def _census_shard(
    d: int, mod: int | None, res: int | None, keep_all: bool
) -> tuple[int, int, list[str], list[str]]:
    """One (possibly partial) census run: totals, witnesses, optional listing."""
    from .balance import is_balanced_after_twin_collapse

    total = 0
    balanced = 0
    witnesses: list[str] = []
    listing: list[str] = []
    for g in enumerate_cubic_bipartite(d, mod=mod, res=res):
        total += 1
        code = to_graph6(g)
        if keep_all:
            listing.append(code)
        if is_balanced_after_twin_collapse(g):
            balanced += 1
            witnesses.append(code)
    return total, balanced, witnesses, listing


def _cmd_census(args: argparse.Namespace) -> int:
    if args.jobs < 1:
        raise CensusError(f"--jobs must be at least 1, got {args.jobs}")
    if args.jobs > 1 and (args.mod is not None or args.res is not None):
        raise CensusError("--jobs cannot be combined with an explicit --mod/--res shard")
    keep_all = not args.balanced and not args.json
    start = time.monotonic()
    if args.jobs == 1:
        shards = [_census_shard(args.vertices, args.mod, args.res, keep_all)]
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [
                pool.submit(_census_shard, args.vertices, args.jobs, r, keep_all)
                for r in range(args.jobs)
            ]
            shards = [f.result() for f in futures]
    total = sum(s[0] for s in shards)
    balanced = sum(s[1] for s in shards)
    witnesses = sorted(w for s in shards for w in s[2])
    listing = sorted(c for s in shards for c in s[3])
    elapsed = round(time.monotonic() - start, 2)
    if not args.json:
        _write_payload(witnesses if args.balanced else listing, args.out)
    _print_json({"d": args.vertices, "total": total, "balanced": balanced, "elapsed": elapsed})
    return 0


# ----------------------------------------------------------------- verify


def _cmd_verify_main_abelian(args: argparse.Namespace) -> int:
    report = verify_cayley_classification(args.max_order)
    _print_json(
        {
            "max_order": report.max_order,
            "groups": report.groups_checked,
            "graphs": report.graphs_checked,
            "balanced": report.balanced_count,
            "counterexamples": [
                {
                    "group": str(c.group),
                    "connection": sorted(list(s) for s in c.connection),
                    "balanced": c.balanced,
                    "recognized": [c.recognized.l, c.recognized.t] if c.recognized else None,
                }
                for c in report.counterexamples
            ],
        }
    )
    return 0 if report.ok else 1


def _cmd_verify_circulant(args: argparse.Namespace) -> int:
    report = verify_circulant_structure(args.max_n)
    _print_json(
        {
            "max_n": report.max_n,
            "graphs": report.graphs_checked,
            "balanced": report.balanced_count,
            "violations": [
                {"n": v.n, "connection": list(v.connection), "detail": v.detail}
                for v in report.violations
            ],
        }
    )
    return 0 if report.ok else 1


def _cmd_verify_divisibility(args: argparse.Namespace) -> int:
    failures = 0
    for g in _read_graph6_input(args.input):
        try:
            report = verify_divisibility(g)
        except CoverError as exc:
            failures += 1
            _print_json({"vertices": g.n, "counterexample": str(exc)})
            continue
        _print_json(
            {
                "vertices": report.vertex_count,
                "degree": report.degree,
                "balanced": report.balanced,
                "classes": report.class_count,
                "divisibility_holds": report.divisibility_holds,
            }
        )
    return 1 if failures else 0


def _cmd_verify_planar(args: argparse.Namespace) -> int:
    by_vertices: dict[int, int] = {}
    failures: list[dict[str, object]] = []
    for emb in batagelj_enumerate(args.max_n):
        by_vertices[emb.graph.n] = by_vertices.get(emb.graph.n, 0) + 1
        report = verify_sv_claims(emb)
        if not report.ok:
            failures.append(
                {
                    "graph": to_graph6(emb.graph),
                    "non_induced": list(report.non_induced),
                    "balanced_centers": list(report.balanced_centers),
                    "shared_edges": [list(e) for e in report.shared_edges],
                    "graph_balanced": report.graph_balanced,
                    "balanced_after_deletion": [
                        list(e) for e in report.balanced_after_deletion
                    ],
                }
            )
    _print_json(
        {
            "max_n": args.max_n,
            "graphs": sum(by_vertices.values()),
            "by_vertices": {str(k): v for k, v in sorted(by_vertices.items())},
            "failures": failures,
        }
    )
    return 1 if failures else 0


def _cmd_verify_conjectures(args: argparse.Namespace) -> int:
    census = count_balanced_cubic(args.vertices)
    twins = check_conjecture_twins(args.vertices, report=census)
    consequences = check_conjecture_consequences(args.vertices, report=census)
    _print_json(
        {
            "d": args.vertices,
            "total": census.total_cubic_bipartite,
            "balanced": census.balanced_count,
            "twin_violations": list(twins.violations),
            "girth_violations": list(consequences.girth_violations),
            "vertex_transitive": list(consequences.vertex_transitive),
            "unexpected_vertex_transitive": list(
                consequences.unexpected_vertex_transitive
            ),
        }
    )
    return 0 if twins.ok and consequences.ok else 1


# ----------------------------------------------------------------- planar


def _cmd_planar_batagelj(args: argparse.Namespace) -> int:
    embeddings = list(batagelj_enumerate(args.max_n))
    if args.json:
        by_vertices: dict[str, int] = {}
        for emb in embeddings:
            key = str(emb.graph.n)
            by_vertices[key] = by_vertices.get(key, 0) + 1
        _print_json({"max_n": args.max_n, "count": len(embeddings), "by_vertices": by_vertices})
        return 0
    if args.format == "graph6":
        _write_payload([to_graph6(emb.graph) for emb in embeddings], args.out)
    else:
        blocks = [embedding_to_text(emb).rstrip("\n") for emb in embeddings]
        _write_payload(["\n\n".join(blocks)] if blocks else [], args.out)
    return 0


# ------------------------------------------------------------------ wiring


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="balgraph",
        description="Balanced bipartite graphs: check, construct, enumerate, verify.",
        epilog="Set BALGRAPH_MAX_VERTICES to lower the vertex cap of the "
        "isomorphism and planarity machinery.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_balance = sub.add_parser("balance", help="balance checks")
    balance_sub = p_balance.add_subparsers(dest="subcommand", required=True)
    p_check = balance_sub.add_parser("check", help="check graph6 input for balance")
    p_check.add_argument("input", nargs="?", default="-", help="graph6 file, or - for stdin")
    p_check.set_defaults(func=_cmd_balance_check)

    p_gen = sub.add_parser("gen", help="construct named graphs")
    gen_sub = p_gen.add_subparsers(dest="subcommand", required=True)
    p_lt = gen_sub.add_parser("lt-cycle", help="blow-up of a cycle by independent sets")
    p_lt.add_argument("length", type=int, help="cycle length l (2, or a multiple of 4 >= 8)")
    p_lt.add_argument("size", type=int, help="independent-set size t >= 1")
    p_lt.add_argument("--out", help="write graph6 here instead of stdout")
    p_lt.set_defaults(func=_cmd_gen_lt_cycle)
    p_cay = gen_sub.add_parser("cayley", help="Cayley graph on an abelian group")
    p_cay.add_argument("group", help="invariant factors, e.g. 12 or 2x4")
    p_cay.add_argument(
        "element",
        nargs="+",
        help="connection-set elements as comma-separated coordinates; "
        "closed under negation automatically",
    )
    p_cay.add_argument("--out", help="write graph6 here instead of stdout")
    p_cay.set_defaults(func=_cmd_gen_cayley)

    p_census = sub.add_parser("census", help="connected cubic bipartite census")
    p_census.add_argument("--vertices", type=int, required=True, help="even count, 6..36")
    p_census.add_argument(
        "--balanced", action="store_true", help="list only the balanced graphs"
    )
    p_census.add_argument("--mod", type=int, help="run one generation shard: counter modulus")
    p_census.add_argument("--res", type=int, help="shard residue, 0 <= res < mod")
    p_census.add_argument("--jobs", type=int, default=1, help="worker count (default 1)")
    p_census.add_argument("--json", action="store_true", help="print only the JSON summary")
    p_census.add_argument("--out", help="write graph6 lines here instead of stdout")
    p_census.set_defaults(func=_cmd_census)

    p_verify = sub.add_parser("verify", help="run a verification sweep")
    verify_sub = p_verify.add_subparsers(dest="subcommand", required=True)
    p_vm = verify_sub.add_parser(
        "main-abelian", help="balance = cycle blow-up on all abelian Cayley graphs"
    )
    p_vm.add_argument("--max-order", type=int, default=12, help="largest group order")
    p_vm.set_defaults(func=_cmd_verify_main_abelian)
    p_vc = verify_sub.add_parser("circulant", help="structure of balanced circulants with step 1")
    p_vc.add_argument("--max-n", type=int, default=24, help="largest circulant order")
    p_vc.set_defaults(func=_cmd_verify_circulant)
    p_vd = verify_sub.add_parser("divisibility", help="2k | n via exact covers on graph6 input")
    p_vd.add_argument("input", nargs="?", default="-", help="graph6 file, or - for stdin")
    p_vd.set_defaults(func=_cmd_verify_divisibility)
    p_vp = verify_sub.add_parser("planar", help="witness subgraphs on the generated planar family")
    p_vp.add_argument("--max-n", type=int, default=16, help="largest vertex count")
    p_vp.set_defaults(func=_cmd_verify_planar)
    p_vj = verify_sub.add_parser("conjectures", help="twin and consequence checks on the census")
    p_vj.add_argument("--vertices", type=int, required=True, help="even count, 6..36")
    p_vj.set_defaults(func=_cmd_verify_conjectures)

    p_planar = sub.add_parser("planar", help="planar generation")
    planar_sub = p_planar.add_subparsers(dest="subcommand", required=True)
    p_bat = planar_sub.add_parser("batagelj", help="close the cube under both expansions")
    p_bat.add_argument("--max-n", type=int, required=True, help="largest vertex count (<= cap)")
    p_bat.add_argument(
        "--format", choices=("rot", "graph6"), default="rot", help="embeddings or graph6 lines"
    )
    p_bat.add_argument("--json", action="store_true", help="print only the JSON summary")
    p_bat.add_argument("--out", help="write the listing here instead of stdout")
    p_bat.set_defaults(func=_cmd_planar_batagelj)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, GroupError, ConnectionSetError, CensusError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
