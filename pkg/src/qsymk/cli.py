"""Command-line front end.

Subcommands:
  verify CHECK       run a named verification over a degree range
  dims               tabulate kernel and quotient dimensions
  graph              export a relation graph (dot/json/csv)
  shufflecheck       brute-force shuffle-compatibility run

Exit codes: 0 all checks passed, 1 a check failed (report carries a
witness), 2 usage error.  Reports are UTF-8 JSON with sorted keys, so
output is byte-for-byte deterministic for identical flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import config
from .compositions import mask_to_set
from .errors import QsymkError
from .kernel import (
    RelationId,
    check_basis_F,
    check_section4_props,
    check_spanning_F,
    check_spanning_M,
    check_symmetry_bridges,
    edge_vectors,
    graphs_to_csv,
    graphs_to_dot,
    graphs_to_json_dict,
    is_ideal_upto,
    kernel_space,
    quotient_dimension,
    relation_edges,
)
from .linalg import reduce as reduce_rows
from .qsym import QSymElement, f_to_m, lemma22b_combination, lemma22c_combination, m_to_f
from .statistics import StatisticId, check_shuffle_compatible, parse_statistic

SCHEMA_VERSION = 1

RELATION_SETS: dict[str, frozenset[RelationId]] = {
    "arrow1": frozenset({RelationId.Arrow1}),
    "arrow2": frozenset({RelationId.Arrow2}),
    "arrow3": frozenset({RelationId.Arrow3}),
    "arrow12": frozenset({RelationId.Arrow1, RelationId.Arrow2}),
    "arrow123": frozenset({RelationId.Arrow1, RelationId.Arrow2, RelationId.Arrow3}),
    "tri1": frozenset({RelationId.Tri1}),
    "tri2": frozenset({RelationId.Tri2}),
    "tri12": frozenset({RelationId.Tri1, RelationId.Tri2}),
    "tri12ctilde": frozenset({RelationId.Tri1, RelationId.Tri2, RelationId.CTilde}),
    "pkbasis": frozenset({RelationId.PkBasisArrow}),
    "pknumbasis": frozenset({RelationId.PkNumBasisArrow}),
    "val1": frozenset({RelationId.ValArrow1}),
    "val2": frozenset({RelationId.ValArrow2}),
    "val3": frozenset({RelationId.ValArrow3}),
    "val12": frozenset({RelationId.ValArrow1, RelationId.ValArrow2}),
    "val123": frozenset({RelationId.ValArrow1, RelationId.ValArrow2, RelationId.ValArrow3}),
    "epkarrow": frozenset({RelationId.EpkArrow}),
    "epktri": frozenset({RelationId.EpkTri}),
}

# (stat, relation-set name) pairs whose graph/rank and forest/independence
# verdicts are cross-checked; the list mixes spanning and non-spanning,
# forest and non-forest cases.
THM1_SUITE: tuple[tuple[StatisticId, str], ...] = (
    (StatisticId.Pk, "arrow12"),
    (StatisticId.Pk, "arrow1"),
    (StatisticId.Pk, "arrow2"),
    (StatisticId.Pk, "pkbasis"),
    (StatisticId.pk, "arrow123"),
    (StatisticId.pk, "arrow12"),
    (StatisticId.pk, "arrow3"),
    (StatisticId.pk, "pknumbasis"),
    (StatisticId.Val, "val12"),
    (StatisticId.Val, "val1"),
    (StatisticId.val, "val123"),
    (StatisticId.val, "val3"),
    (StatisticId.Epk, "epkarrow"),
)


def _row(check: str, degree: int, passed: bool, stat: str | None = None, **extra) -> dict:
    row: dict = {"check": check, "degree": degree, "pass": passed}
    if stat is not None:
        row["stat"] = stat
    row.update(extra)
    return row


def _spanning_rows(check: str, stat: StatisticId, relname: str, n: int) -> list[dict]:
    passed = check_spanning_F(stat, n, RELATION_SETS[relname])
    row = _row(check, n, passed, stat.value, rels=relname)
    if not passed:
        graph = relation_edges(RELATION_SETS[relname], n)
        row["witness"] = {
            "kernel_dim": kernel_space(stat, n).dim,
            "edge_rank": reduce_rows(edge_vectors(graph), n).rank,
        }
    return [row]


def _basis_rows(check: str, stat: StatisticId, relname: str, n: int) -> list[dict]:
    passed = check_basis_F(stat, n, RELATION_SETS[relname])
    row = _row(check, n, passed, stat.value, rels=relname)
    if not passed:
        graph = relation_edges(RELATION_SETS[relname], n)
        row["witness"] = {
            "kernel_dim": kernel_space(stat, n).dim,
            "edges": len(graph.edges),
        }
    return [row]


def _monomial_rows(check: str, stat: StatisticId, n: int) -> list[dict]:
    passed = check_spanning_M(stat, n)
    row = _row(check, n, passed, stat.value)
    if not passed:
        row["witness"] = {"kernel_dim": kernel_space(stat, n).dim}
    return [row]


def _thm0_rows(n: int) -> list[dict]:
    f_ok = check_spanning_F(StatisticId.Epk, n, RELATION_SETS["epkarrow"])
    m_ok = check_spanning_M(StatisticId.Epk, n)
    return [
        _row("thm0", n, f_ok and m_ok, "Epk",
             details={"fundamental": f_ok, "monomial": m_ok}),
    ]


def _thm1_rows(which: str, n: int) -> list[dict]:
    # the kernel checks raise AssertionError if a graph verdict ever
    # disagrees with the direct rank computation; here that disagreement
    # is exactly what is under test, so it becomes a failing row
    rows = []
    for stat, relname in THM1_SUITE:
        try:
            if which == "thm1a":
                check_spanning_F(stat, n, RELATION_SETS[relname])
            else:
                check_basis_F(stat, n, RELATION_SETS[relname])
            rows.append(_row(which, n, True, stat.value, rels=relname))
        except AssertionError as exc:
            rows.append(_row(which, n, False, stat.value, rels=relname,
                             witness=str(exc)))
    return rows


def _props4_rows(n: int) -> list[dict]:
    report = check_section4_props(n)
    row = _row("props4", n, report["pass"], details=report["results"])
    return [row]


def _lemma22_rows(n: int) -> list[dict]:
    size = 1 << max(n - 1, 0)
    round_trip = True
    for mask in range(size):
        m_elem = QSymElement(n, "M", {mask: 1})
        f_elem = QSymElement(n, "F", {mask: 1})
        if f_to_m(m_to_f(m_elem)) != m_elem or m_to_f(f_to_m(f_elem)) != f_elem:
            round_trip = False
    part_b = True
    part_c = True
    for mask in range(size):
        c_set = mask_to_set(mask)
        for k in range(1, n):
            if (mask >> (k - 1)) & 1:
                continue
            pair = m_to_f(QSymElement(n, "M", {mask: 1, mask | (1 << (k - 1)): 1}))
            if lemma22b_combination(n, c_set, k) != pair:
                part_b = False
            if k >= 2 and not (mask >> (k - 2)) & 1:
                if lemma22c_combination(n, c_set, k) != pair:
                    part_c = False
    passed = round_trip and part_b and part_c
    return [_row("lemma22", n, passed,
                 details={"round_trip": round_trip, "part_b": part_b, "part_c": part_c})]


def _bridges_rows(n: int) -> list[dict]:
    report = check_symmetry_bridges(n)
    return [_row("bridges", n, report["pass"], details=report["results"])]


PER_DEGREE_CHECKS = {
    "thm0": _thm0_rows,
    "thm1a": lambda n: _thm1_rows("thm1a", n),
    "thm1b": lambda n: _thm1_rows("thm1b", n),
    "thm2a": lambda n: _spanning_rows("thm2a", StatisticId.Pk, "arrow12", n),
    "thm2b": lambda n: _spanning_rows("thm2b", StatisticId.pk, "arrow123", n),
    "thm33": lambda n: _basis_rows("thm33", StatisticId.Pk, "pkbasis", n),
    "thm35": lambda n: _basis_rows("thm35", StatisticId.pk, "pknumbasis", n),
    "thm3a": lambda n: _monomial_rows("thm3a", StatisticId.Pk, n),
    "thm3b": lambda n: _monomial_rows("thm3b", StatisticId.pk, n),
    "thm53a": lambda n: _spanning_rows("thm53a", StatisticId.Val, "val12", n),
    "thm53b": lambda n: _spanning_rows("thm53b", StatisticId.val, "val123", n),
    "props4": _props4_rows,
    "lemma22": _lemma22_rows,
    "bridges": _bridges_rows,
}

CHECK_NAMES = tuple(PER_DEGREE_CHECKS) + ("ideal",)


def _parse_degrees(text: str) -> list[int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo < 0 or hi < lo:
        raise ValueError(f"bad degree range {text!r}")
    return list(range(lo, hi + 1))


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _report_json(check: str, rows: list[dict]) -> str:
    report = {
        "schema_version": SCHEMA_VERSION,
        "check": check,
        "pass": all(row["pass"] for row in rows),
        "rows": rows,
    }
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _cmd_verify(args: argparse.Namespace) -> int:
    degrees = _parse_degrees(args.deg if args.deg else ("1..10" if args.deep else "1..8"))
    if args.check == "ideal":
        stats = [parse_statistic(args.stat)] if args.stat else list(StatisticId)
        total = max(degrees)
        rows = []
        for stat in stats:
            report = is_ideal_upto(stat, total)
            row = _row("ideal", total, report["ideal"], stat.value)
            if not report["ideal"]:
                row["witness"] = report["violations"]
            rows.append(row)
    else:
        runner = PER_DEGREE_CHECKS[args.check]
        if len(degrees) > 1:
            with ThreadPoolExecutor(max_workers=min(4, len(degrees))) as pool:
                chunks = list(pool.map(runner, degrees))
        else:
            chunks = [runner(n) for n in degrees]
        rows = [row for chunk in chunks for row in chunk]
    _emit(_report_json(args.check, rows), args.out)
    return 0 if all(row["pass"] for row in rows) else 1


def _cmd_dims(args: argparse.Namespace) -> int:
    degrees = _parse_degrees(args.deg if args.deg else "1..8")
    stats = [parse_statistic(name) for name in args.stat] if args.stat else list(StatisticId)
    records = [
        {
            "stat": stat.value,
            "degree": n,
            "kernel_dim": kernel_space(stat, n).dim,
            "quotient_dim": quotient_dimension(stat, n),
        }
        for stat in stats
        for n in degrees
    ]
    if args.format == "json":
        text = json.dumps(records, indent=2, sort_keys=True) + "\n"
    else:
        sep = "\t" if args.format == "tsv" else ","
        lines = [sep.join(("stat", "degree", "kernel_dim", "quotient_dim"))]
        lines += [
            sep.join((r["stat"], str(r["degree"]), str(r["kernel_dim"]), str(r["quotient_dim"])))
            for r in records
        ]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def _cmd_graph(args: argparse.Namespace) -> int:
    degrees = _parse_degrees(args.deg if args.deg else "1..5")
    graphs = [relation_edges(RELATION_SETS[args.rels], n) for n in degrees]
    if args.format == "dot":
        text = graphs_to_dot(graphs)
    elif args.format == "json":
        text = json.dumps(graphs_to_json_dict(graphs), indent=2, sort_keys=True) + "\n"
    else:
        text = graphs_to_csv(graphs)
    _emit(text, args.out)
    return 0


def _cmd_shufflecheck(args: argparse.Namespace) -> int:
    stat = parse_statistic(args.stat)
    report = check_shuffle_compatible(stat, args.max_total_len)
    payload = {"schema_version": SCHEMA_VERSION, **report.as_dict()}
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return 0 if report.compatible else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsymk",
        description="Exact verification of kernel subspaces of descent statistics.",
    )
    parser.add_argument("--max-degree", type=int, default=None,
                        help="override the configured maximum degree")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a named check over a degree range")
    p_verify.add_argument("check", choices=CHECK_NAMES)
    p_verify.add_argument("--deg", default=None, help="degree range LO..HI (default 1..8)")
    p_verify.add_argument("--deep", action="store_true", help="default range becomes 1..10")
    p_verify.add_argument("--stat", default=None, help="restrict the ideal check to one statistic")
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=_cmd_verify)

    p_dims = sub.add_parser("dims", help="kernel/quotient dimension table")
    p_dims.add_argument("--stat", action="append", default=None,
                        help="statistic name (repeatable; default all)")
    p_dims.add_argument("--deg", default=None)
    p_dims.add_argument("--format", choices=("csv", "tsv", "json"), default="csv")
    p_dims.add_argument("--out", default=None)
    p_dims.set_defaults(func=_cmd_dims)

    p_graph = sub.add_parser("graph", help="export a relation graph")
    p_graph.add_argument("--rels", choices=sorted(RELATION_SETS), required=True)
    p_graph.add_argument("--deg", default=None, help="degree or range (default 1..5)")
    p_graph.add_argument("--format", choices=("dot", "json", "csv"), default="dot")
    p_graph.add_argument("--out", default=None)
    p_graph.set_defaults(func=_cmd_graph)

    p_shuf = sub.add_parser("shufflecheck", help="shuffle-compatibility brute force")
    p_shuf.add_argument("stat")
    p_shuf.add_argument("max_total_len", type=int)
    p_shuf.add_argument("--out", default=None)
    p_shuf.set_defaults(func=_cmd_shufflecheck)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    previous = None
    if args.max_degree is not None:
        previous = config.set_max_degree(args.max_degree)
    try:
        return args.func(args)
    except (QsymkError, ValueError) as exc:
        parser.exit(2, f"error: {exc}\n")
        return 2  # unreachable; parser.exit raises SystemExit
    finally:
        if args.max_degree is not None:
            config.set_max_degree(previous)


if __name__ == "__main__":
    sys.exit(main())
