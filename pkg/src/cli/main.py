"""Command-line front end: construct, analyze, dual, verify, sweep, griesmer."""

import argparse
import csv
import json
import logging
import sys
from dataclasses import dataclass, field, replace
from datetime import datetime
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional

import config
from analysis import (
    CodeReport,
    ParameterRange,
    analyze_code,
    analyze_linear_code,
    griesmer_check,
    load_optimality_table,
    singleton_check,
    verify_theorem,
)
from codes import (
    DefiningSet,
    build_code,
    difference_set,
    dual_code,
    load_defining_set,
    partition_set,
    union_set,
    weight_ball_set,
    weight_shell_set,
)
from config import Budget
from errors import (
    BudgetExceededError,
    ConstructionError,
    DimensionMismatchError,
    OptimalityTableError,
    RankConsistencyError,
)
from gf2core import BitVector
from utils.hashing import canonical_json, report_digest
from utils.logger import setup_logger
from utils.run_log import setup_run_logging
from utils.slug import generate_slug

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_IO = 4


class Command(str, Enum):
    CONSTRUCT = "construct"
    ANALYZE = "analyze"
    DUAL = "dual"
    VERIFY = "verify"
    SWEEP = "sweep"
    GRIESMER = "griesmer"


class Construction(str, Enum):
    DIFF = "diff"
    UNION = "union"
    PARTITION = "partition"
    SHELL = "shell"
    BALL = "ball"
    FILE = "file"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


@dataclass(frozen=True)
class RunConfig:
    """Everything one invocation needs, resolved from the command line."""

    command: Command
    construction: Optional[Construction] = None
    m: Optional[int] = None
    a: Optional[List[int]] = None
    b: Optional[List[int]] = None
    t: Optional[int] = None
    file: Optional[Path] = None
    theorem: Optional[str] = None
    a_max: Optional[int] = None
    m_max: Optional[int] = None
    n: Optional[int] = None
    k: Optional[int] = None
    d: Optional[int] = None
    out_dir: Optional[Path] = None
    table: Optional[Path] = None
    output_format: OutputFormat = OutputFormat.JSON
    budget: Budget = field(default_factory=Budget.from_env)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        command = Command(args.command)
        construction = getattr(args, "construction", None)
        if command == Command.ANALYZE:
            construction = Construction.FILE.value

        budget = Budget.from_env()
        overrides = {
            "max_message_bits": args.max_m,
            "max_codeword_bits": args.max_k,
            "max_length": args.max_n,
            "member_cap": args.member_cap,
            "workers": args.workers,
        }
        budget = replace(budget, **{k: v for k, v in overrides.items() if v is not None})

        cfg = cls(
            command=command,
            construction=Construction(construction) if construction else None,
            m=getattr(args, "m", None),
            a=_coordinates(getattr(args, "a", None)),
            b=_coordinates(getattr(args, "b", None)),
            t=getattr(args, "t", None),
            file=Path(args.file) if getattr(args, "file", None) else None,
            theorem=getattr(args, "theorem", None),
            a_max=getattr(args, "a_max", None),
            m_max=getattr(args, "m_max", None),
            n=getattr(args, "n", None),
            k=getattr(args, "k", None),
            d=getattr(args, "d", None),
            out_dir=Path(args.out_dir) if getattr(args, "out_dir", None) else None,
            table=Path(args.table) if args.table else None,
            output_format=OutputFormat(args.format),
            budget=budget,
        )
        cfg.validate()
        return cfg

    def validate(self):
        """
        Raises:
            ConstructionError: missing or conflicting construction parameters
        """
        if self.command in (Command.CONSTRUCT, Command.DUAL, Command.ANALYZE):
            if self.construction == Construction.FILE:
                if self.file is None:
                    raise ConstructionError("a file construction needs a defining-set path")
                if self.m is not None or self.a is not None or self.b is not None:
                    raise ConstructionError("--file cannot be combined with --m/--a/--b")
            else:
                if self.file is not None:
                    raise ConstructionError(f"--file conflicts with the {self.construction.value} construction")
                if self.m is None:
                    raise ConstructionError(f"the {self.construction.value} construction needs --m")
                if self.construction in (Construction.DIFF, Construction.UNION) and self.a is None:
                    raise ConstructionError(f"the {self.construction.value} construction needs --a")
                if self.construction == Construction.UNION and not self.b:
                    raise ConstructionError("the union construction needs a nonempty --b")
                if self.construction in (Construction.SHELL, Construction.BALL) and self.t is None:
                    raise ConstructionError(f"the {self.construction.value} construction needs --t")
        if self.command == Command.SWEEP and self.construction == Construction.FILE:
            raise ConstructionError("sweep enumerates generated constructions, not files")


def _coordinates(spec: Optional[str]) -> Optional[List[int]]:
    """Parse "1,2,3" into [1, 2, 3]; an empty string is the empty set."""
    if spec is None:
        return None
    try:
        return [int(part) for part in spec.split(",") if part.strip()]
    except ValueError:
        raise ConstructionError(f"coordinate list must be comma-separated integers, got {spec!r}")


def _face(coordinates: Optional[List[int]], m: int) -> BitVector:
    return BitVector.from_support(coordinates or [], m)


def build_defining_set(cfg: RunConfig) -> DefiningSet:
    kind = cfg.construction
    if kind == Construction.FILE:
        return load_defining_set(cfg.file)
    if kind == Construction.DIFF:
        return difference_set(_face(cfg.a, cfg.m), _face(cfg.b, cfg.m), cfg.budget)
    if kind == Construction.UNION:
        return union_set(_face(cfg.a, cfg.m), _face(cfg.b, cfg.m), cfg.budget)
    if kind == Construction.PARTITION:
        return partition_set(cfg.m, cfg.budget)
    if kind == Construction.SHELL:
        return weight_shell_set(cfg.m, cfg.t, cfg.budget)
    return weight_ball_set(cfg.m, cfg.t, cfg.budget)


def _table(cfg: RunConfig):
    return load_optimality_table(cfg.table)


def cmd_construct(cfg: RunConfig) -> CodeReport:
    defining_set = build_defining_set(cfg)
    return analyze_code(defining_set, cfg.budget, _table(cfg))


def cmd_analyze(cfg: RunConfig) -> CodeReport:
    return cmd_construct(cfg)


def cmd_dual(cfg: RunConfig) -> CodeReport:
    defining_set = build_defining_set(cfg)
    dual = dual_code(build_code(defining_set))
    label = f"dual of {defining_set.label}" if defining_set.label else "dual"
    return analyze_linear_code(dual, cfg.budget, _table(cfg), label=label)


def cmd_verify(cfg: RunConfig) -> List[Dict[str, Any]]:
    ranges = ParameterRange(a_max=cfg.a_max, m_max=cfg.m_max)
    return [v.to_dict() for v in verify_theorem(cfg.theorem, ranges, cfg.budget)]


def cmd_griesmer(cfg: RunConfig) -> Dict[str, Any]:
    try:
        total, meets = griesmer_check(cfg.n, cfg.k, cfg.d)
        singleton, mds = singleton_check(cfg.n, cfg.k, cfg.d)
    except RankConsistencyError as e:
        raise ConstructionError(str(e))
    return {
        "n": cfg.n,
        "k": cfg.k,
        "d": cfg.d,
        "griesmer_sum": total,
        "meets_griesmer": meets,
        "singleton_bound": singleton,
        "meets_singleton": mds,
    }


def sweep_instances(cfg: RunConfig) -> Iterator[RunConfig]:
    """Per-instance configs for the sweep ranges."""
    a_max = cfg.a_max if cfg.a_max is not None else 4
    m_max = cfg.m_max if cfg.m_max is not None else 8
    single = replace(cfg, command=Command.CONSTRUCT)
    kind = cfg.construction
    if kind == Construction.DIFF:
        for a in range(1, a_max + 1):
            for b in range(0, a):
                yield replace(single, m=a, a=list(range(1, a + 1)), b=list(range(1, b + 1)))
    elif kind == Construction.UNION:
        for a in range(2, a_max + 1):
            for b in range(1, a):
                yield replace(
                    single,
                    m=a + b,
                    a=list(range(1, a + 1)),
                    b=list(range(a + 1, a + b + 1)),
                )
    elif kind == Construction.PARTITION:
        for m in range(2, m_max + 1, 2):
            yield replace(single, m=m)
    else:
        for m in range(2, m_max + 1):
            for t in range(1, m):
                yield replace(single, m=m, t=t)


def cmd_sweep(cfg: RunConfig) -> List[Dict[str, Any]]:
    """
    Analyze every construction in the sweep ranges.

    With ``out_dir`` set, each report is written to ``<slug>.json`` and a
    ``manifest.json`` lists file, label, parameters and SHA256 digest; the
    returned list is the manifest. Otherwise the reports themselves are
    returned.
    """
    instances = list(sweep_instances(cfg))
    if not instances:
        raise ConstructionError("sweep ranges are empty")
    logger.info(f"Sweeping {len(instances)} {cfg.construction.value} constructions")

    table = _table(cfg)
    reports = [analyze_code(build_defining_set(i), cfg.budget, table).to_dict() for i in instances]
    if cfg.out_dir is None:
        return reports

    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    manifest = []
    for report in reports:
        name = f"{generate_slug(report['label'])}.json"
        (cfg.out_dir / name).write_text(canonical_json(report) + "\n", encoding="utf-8")
        manifest.append(
            {
                "file": name,
                "label": report["label"],
                "params": report["params"],
                "sha256": report_digest(report),
            }
        )
    (cfg.out_dir / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    logger.info(f"Wrote {len(manifest)} reports to {cfg.out_dir}")
    return manifest


def _cell(value: Any) -> Any:
    return canonical_json(value) if isinstance(value, (dict, list)) else value


def _distribution_rows(report: Dict[str, Any]) -> Iterator[List[Any]]:
    for weight, count in enumerate(report["distribution"]):
        yield [report.get("label", ""), weight, count]


def emit(payload: Any, fmt: OutputFormat, stream=None):
    """Write a report, report list, verdict list or bound result to stdout."""
    stream = stream or sys.stdout
    if isinstance(payload, CodeReport):
        payload = payload.to_dict()

    if fmt == OutputFormat.JSON:
        stream.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        return

    items = payload if isinstance(payload, list) else [payload]
    if fmt == OutputFormat.CSV:
        writer = csv.writer(stream, lineterminator="\n")
        if items and "distribution" in items[0]:
            if isinstance(payload, list):
                writer.writerow(["label", "weight", "count"])
                for item in items:
                    writer.writerows(_distribution_rows(item))
            else:
                writer.writerow(["weight", "count"])
                writer.writerows(row[1:] for row in _distribution_rows(payload))
            return
        keys = sorted({k for item in items for k in item})
        writer.writerow(keys)
        for item in items:
            writer.writerow([_cell(item.get(k, "")) for k in keys])
        return

    for item in items:
        for key in sorted(item):
            stream.write(f"{key}: {_cell(item[key])}\n")
        stream.write("\n")


COMMANDS = {
    Command.CONSTRUCT: cmd_construct,
    Command.ANALYZE: cmd_analyze,
    Command.DUAL: cmd_dual,
    Command.VERIFY: cmd_verify,
    Command.SWEEP: cmd_sweep,
    Command.GRIESMER: cmd_griesmer,
}


def _add_construction_args(parser: argparse.ArgumentParser, choices: List[str]):
    parser.add_argument("construction", choices=choices, help="Defining-set construction")
    parser.add_argument("--m", type=int, help="Ambient dimension")
    parser.add_argument("--a", help="Support of A as comma-separated coordinates")
    parser.add_argument("--b", help="Support of B as comma-separated coordinates (may be empty)")
    parser.add_argument("--t", type=int, help="Weight layer for shell/ball constructions")
    parser.add_argument("--file", help="Defining-set file for the file construction")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default="json")
    common.add_argument("--table", help="Optimality CSV (defaults to the bundled table)")
    common.add_argument("--max-m", type=int, help="Message-space budget, log2")
    common.add_argument("--max-k", type=int, help="Codeword-space budget, log2")
    common.add_argument("--max-n", type=int, help="Defining-set length cap")
    common.add_argument("--member-cap", type=int, help="Complex enumeration cap")
    common.add_argument("--workers", type=int, help="Worker threads")
    common.add_argument("--log-level", help="Logging level (default from SIMPLICIAL_CODES_LOG_LEVEL)")
    common.add_argument(
        "--log-file",
        nargs="?",
        const=str(config.LOG_FILE),
        help="Append log records to a run log (default data/run.log)",
    )

    parser = argparse.ArgumentParser(
        prog="simplicial-codes",
        description="Binary linear codes from simplicial complexes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    all_constructions = [c.value for c in Construction]
    construct = sub.add_parser("construct", parents=[common], help="Build and analyze a code")
    _add_construction_args(construct, all_constructions)

    dual = sub.add_parser("dual", parents=[common], help="Analyze the dual of a code")
    _add_construction_args(dual, all_constructions)

    analyze = sub.add_parser("analyze", parents=[common], help="Analyze a defining-set file")
    analyze.add_argument("file", help="Defining-set file")

    verify = sub.add_parser("verify", parents=[common], help="Sweep a claim against brute force")
    verify.add_argument("--theorem", required=True, help="Claim id or numbered alias")
    verify.add_argument("--a-max", type=int, help="Largest |A| in the sweep")
    verify.add_argument("--m-max", type=int, help="Largest m in the sweep")

    sweep = sub.add_parser("sweep", parents=[common], help="Analyze a range of constructions")
    sweep.add_argument(
        "construction", choices=[c.value for c in Construction if c != Construction.FILE]
    )
    sweep.add_argument("--a-max", type=int, help="Largest |A| (diff, union)")
    sweep.add_argument("--m-max", type=int, help="Largest m (partition, shell, ball)")
    sweep.add_argument(
        "--out-dir",
        nargs="?",
        const=str(config.OUTPUT_DIR),
        help="Write one report per instance plus a manifest (default data/reports)",
    )

    griesmer = sub.add_parser("griesmer", parents=[common], help="Evaluate the Griesmer bound")
    griesmer.add_argument("--n", type=int, required=True)
    griesmer.add_argument("--k", type=int, required=True)
    griesmer.add_argument("--d", type=int, required=True)
    return parser


def main(argv: List[str] = None) -> int:
    """Main entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    setup_logger(None, args.log_level)
    run_log = setup_run_logging(args.log_file) if args.log_file else None
    start_time = datetime.now()
    status = EXIT_FAILURE

    try:
        cfg = RunConfig.from_args(args)
        payload = COMMANDS[cfg.command](cfg)
        emit(payload, cfg.output_format)
        status = EXIT_OK
    except (ConstructionError, DimensionMismatchError, OptimalityTableError) as e:
        logger.error(f"Invalid input: {e}")
        status = EXIT_USAGE
    except BudgetExceededError as e:
        logger.error(f"Budget exceeded: {e}")
        status = EXIT_BUDGET
    except OSError as e:
        logger.error(f"I/O error: {e}")
        status = EXIT_IO
    except Exception as e:
        logger.exception(f"Run failed: {e}")
        status = EXIT_FAILURE
    finally:
        elapsed = datetime.now() - start_time
        logger.info(
            f"[{start_time.strftime('%Y-%m-%d %H:%M:%S')}] {args.command} "
            f"exit={status} (Elapsed: {elapsed.total_seconds():.1f}s)"
        )
        if run_log is not None:
            logging.getLogger().removeHandler(run_log)

    return status


if __name__ == "__main__":
    sys.exit(main())
