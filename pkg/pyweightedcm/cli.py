"""Command line entry: analyze, decompose, oracle, crossvalidate, generate."""
from __future__ import annotations

import argparse
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import hashlib
import json
import logging
import random
import sys
import time
from typing import Any

import pandas as pd

from .constants import CrossValidationMode, Force, GeneratorKind, Verdict
from .covers import (
    cover_to_document,
    irreducible_decomposition,
    is_unmixed,
    minimal_support_covers,
    minimal_weighted_covers,
)
from .exceptions import BudgetExceededError, SizeBoundError, WeightedCMError
from .generator import DEFAULT_MAX_WEIGHT, generate, random_instance
from .graph import WeightedGraph, dump_graph, load_graph, serialize_graph
from .ideals import ideal_to_document
from .oracle import is_cm_oracle, oracle_report
from .structure import NotPC, is_cm_graph
from .weights import classify_cm

_LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2


@dataclass
class RunReport:
    """What one command produced; timing only when asked for."""

    command: str
    input_digest: str | None
    results: dict[str, Any] = field(default_factory=dict)
    seed: int | None = None
    timing: float | None = None

    def to_document(self) -> dict[str, Any]:
        _document: dict[str, Any] = {
            "command": self.command,
            "input_digest": self.input_digest,
            "results": self.results,
            "seed": self.seed,
        }
        if self.timing is not None:
            _document["timing"] = round(self.timing, 6)
        return _document

    def dumps(self) -> str:
        return json.dumps(self.to_document(), sort_keys=True, indent=2)


def digest(document: Any) -> str:
    """sha256 of the canonical JSON form."""
    return hashlib.sha256(json.dumps(document, sort_keys=True).encode("UTF-8")).hexdigest()


def _graph_digest(g: WeightedGraph) -> str:
    return hashlib.sha256(dump_graph(g).encode("UTF-8")).hexdigest()


def _skipped(err: WeightedCMError) -> dict[str, Any]:
    _LOGGER.warning("Skipped: %s", err)
    return {"skipped": True, "reason": str(err)}


def cmd_analyze(path: str) -> RunReport:
    """Girth, PC classification, condition report and certificate."""
    g = load_graph(path)
    certificate = classify_cm(g)
    _results: dict[str, Any] = {
        "girth": certificate.to_document()["girth"],
        "certificate": certificate.to_document(),
        "out_of_scope": certificate.verdict is Verdict.OUT_OF_SCOPE,
    }

    if certificate.verdict is not Verdict.OUT_OF_SCOPE:
        _results["components"] = []
        for result in certificate.components:
            _part: dict[str, Any] = {"vertices": list(result.vertices)}
            if isinstance(result.pc, NotPC):
                _part["pc"] = {"in_class": False, **result.pc.to_document()}
            elif result.pc is not None:
                _part["pc"] = {"in_class": True, "witness": result.pc.to_document()}
            if result.report is not None:
                _part["conditions"] = result.report.to_document()
            _results["components"].append(_part)

    return RunReport("analyze", _graph_digest(g), _results)


def cmd_decompose(path: str, budget: int | None = None) -> RunReport:
    """Minimal covers, irreducible components and the unmixed report."""
    g = load_graph(path)
    try:
        _results = {
            "minimal_weighted_covers": [cover_to_document(g, c) for c in minimal_weighted_covers(g, budget)],
            "minimal_support_covers": [cover_to_document(g, c) for c in minimal_support_covers(g, budget)],
            "irreducible_decomposition": [
                ideal_to_document(p) for p in irreducible_decomposition(g, budget)
            ],
            "unmixed": is_unmixed(g, budget).to_document(),
        }
    except (BudgetExceededError, SizeBoundError) as err:
        _results = _skipped(err)
    return RunReport("decompose", _graph_digest(g), _results)


def cmd_oracle(path: str, characteristic: int = 0, budget: int | None = None) -> RunReport:
    """Run the homology oracle on the graph stored at ``path``."""
    g = load_graph(path)
    try:
        _results = oracle_report(g, characteristic, budget).to_document()
    except BudgetExceededError as err:
        _results = _skipped(err)
    return RunReport("oracle", _graph_digest(g), _results)


def check_instance(job: tuple[int, int, int, int, str, int | None, int]) -> dict[str, Any]:
    """Build instance ``index`` from its seed and run both sides."""
    index, seed, max_vertices, max_weight, mode, budget, characteristic = job
    g = random_instance(random.Random(seed), max_vertices, max_weight)
    _row: dict[str, Any] = {"index": index, "vertices": len(g), "skipped": False, "agree": True}

    classified = classify_cm(g).verdict is Verdict.COHEN_MACAULAY
    try:
        if CrossValidationMode(mode) is CrossValidationMode.THEOREM_VS_UNMIXED:
            other = is_cm_graph(g) and is_unmixed(g, budget).unmixed
        else:
            other = is_cm_oracle(g, characteristic, budget)
    except (BudgetExceededError, SizeBoundError) as err:
        _LOGGER.debug("Instance %d skipped: %s", index, err)
        _row["skipped"] = True
        return _row

    _row["agree"] = classified == other
    if not _row["agree"]:
        _row["counterexample"] = {"graph": serialize_graph(g), "classified": classified, "other": other}
    return _row


def cmd_crossvalidate(
    count: int,
    max_vertices: int,
    max_weight: int,
    seed: int,
    mode: CrossValidationMode | str,
    budget: int | None = None,
    characteristic: int = 0,
    workers: int = 1,
) -> RunReport:
    """Run one equivalence over ``count`` seeded random instances."""
    mode = CrossValidationMode(mode)
    rng = random.Random(seed)
    jobs = [
        (i, rng.randrange(2**32), max_vertices, max_weight, mode.value, budget, characteristic)
        for i in range(count)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(check_instance, jobs))
    else:
        rows = [check_instance(job) for job in jobs]
    rows.sort(key=lambda row: row["index"])

    checked = [row for row in rows if not row["skipped"]]
    _results = {
        "mode": mode.value,
        "instances": count,
        "checked": len(checked),
        "skipped": count - len(checked),
        "agreements": sum(1 for row in checked if row["agree"]),
        "disagreements": [row["counterexample"] for row in checked if not row["agree"]],
    }
    _parameters = {
        "count": count,
        "max_vertices": max_vertices,
        "max_weight": max_weight,
        "mode": mode.value,
        "characteristic": characteristic,
    }
    report = RunReport("crossvalidate", digest(_parameters), _results, seed=seed)
    report.results["summary"] = [
        {key: int(value) for key, value in record.items()}
        for record in summary_table(rows).reset_index().to_dict(orient="records")
    ]
    return report


def summary_table(rows: Sequence[dict[str, Any]]) -> pd.DataFrame:
    """Instances, agreements and skips grouped by vertex count."""
    frame = pd.DataFrame(list(rows), columns=["index", "vertices", "skipped", "agree"])
    frame["agree"] = frame["agree"] & ~frame["skipped"]
    return frame.groupby("vertices").agg(
        instances=("index", "count"),
        agreements=("agree", "sum"),
        skipped=("skipped", "sum"),
    ).astype(int)


def cmd_generate(
    kind: GeneratorKind | str,
    n: int,
    seed: int,
    max_weight: int = DEFAULT_MAX_WEIGHT,
    force: Force | str = Force.RANDOM,
) -> dict[str, Any]:
    """A graph document for the requested family."""
    return serialize_graph(generate(kind, n, seed, max_weight, force))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", "-v", action="count", default=0)
    common.add_argument("--timing", action="store_true", help="add wall time to the report")
    common.add_argument("--budget", type=int, default=None, help="search and face budget")
    common.add_argument("--field-char", type=int, default=0, help="0 or a prime")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(
        prog="pyweightedcm",
        description="Cohen-Macaulay tests for edge ideals of weighted graphs.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    for name in ("analyze", "decompose", "oracle"):
        command = commands.add_parser(name, parents=[common])
        command.add_argument("path", help="graph document")

    cross = commands.add_parser("crossvalidate", parents=[common])
    cross.add_argument(
        "--mode",
        choices=[m.value for m in CrossValidationMode],
        default=CrossValidationMode.THEOREM_VS_UNMIXED.value,
    )
    cross.add_argument("--count", type=int, default=100)
    cross.add_argument("--max-vertices", type=int, default=10)
    cross.add_argument("--max-weight", type=int, default=DEFAULT_MAX_WEIGHT)
    cross.add_argument("--workers", type=int, default=1)

    gen = commands.add_parser("generate", parents=[common])
    gen.add_argument("--kind", choices=[k.value for k in GeneratorKind], default=GeneratorKind.CLASS_PC.value)
    gen.add_argument("-n", type=int, default=10)
    gen.add_argument("--max-weight", type=int, default=DEFAULT_MAX_WEIGHT)
    gen.add_argument(
        "--force",
        choices=[f.value for f in Force if f is not Force.RANDOM],
        default=None,
    )
    return parser


def _summary(report: RunReport) -> str:
    results = report.results
    if report.command == "analyze":
        return f"analyze: {results['certificate']['verdict']}"
    if report.command == "crossvalidate":
        return (
            f"crossvalidate {results['mode']}: {results['agreements']}/{results['checked']} agree, "
            f"{results['skipped']} skipped, {len(results['disagreements'])} disagreements"
        )
    if report.command == "oracle" and "cohen_macaulay" in results:
        return f"oracle: cohen-macaulay={results['cohen_macaulay']}"
    return report.command


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command; JSON on stdout, summary on stderr."""

    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose > 1 else logging.INFO if args.verbose else logging.WARNING
    )

    started = time.perf_counter()
    try:
        if args.command == "generate":
            _document = cmd_generate(args.kind, args.n, args.seed, args.max_weight, args.force or Force.RANDOM)
            print(json.dumps(_document, sort_keys=True, indent=2))
            return EXIT_OK
        if args.command == "analyze":
            report = cmd_analyze(args.path)
        elif args.command == "decompose":
            report = cmd_decompose(args.path, args.budget)
        elif args.command == "oracle":
            report = cmd_oracle(args.path, args.field_char, args.budget)
        else:
            report = cmd_crossvalidate(
                args.count,
                args.max_vertices,
                args.max_weight,
                args.seed,
                args.mode,
                args.budget,
                args.field_char,
                args.workers,
            )
            print(pd.DataFrame(report.results["summary"]).to_string(index=False), file=sys.stderr)
    except (WeightedCMError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE

    if args.timing:
        report.timing = time.perf_counter() - started
    print(report.dumps())
    print(_summary(report), file=sys.stderr)

    if report.command == "crossvalidate" and report.results["disagreements"]:
        return EXIT_DISAGREEMENT
    return EXIT_OK
