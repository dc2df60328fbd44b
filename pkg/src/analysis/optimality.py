"""Table-relative distance optimality."""

import csv
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

import config
from errors import OptimalityTableError

logger = logging.getLogger(__name__)

KINDS = ("linear", "lcd")
REQUIRED_COLUMNS = ("n", "k", "d_best", "kind")

DISTANCE_OPTIMAL = "distance optimal"
ALMOST_OPTIMAL = "almost optimal"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class OptimalityEntry:
    n: int
    k: int
    d_best: int
    kind: str


@dataclass(frozen=True)
class OptimalityTable:
    """Best known distances keyed by (n, k, kind)."""

    entries: Dict[Tuple[int, int, str], OptimalityEntry]
    source: str = ""

    def get(self, n: int, k: int, kind: str) -> Optional[OptimalityEntry]:
        return self.entries.get((n, k, kind))

    def __len__(self) -> int:
        return len(self.entries)


def _parse_row(row: Dict[str, str], line_number: int) -> OptimalityEntry:
    try:
        n, k, d_best = (int(row[c]) for c in ("n", "k", "d_best"))
    except (TypeError, ValueError):
        raise OptimalityTableError(f"line {line_number}: n, k and d_best must be integers")
    kind = (row["kind"] or "").strip().lower()
    if kind not in KINDS:
        raise OptimalityTableError(f"line {line_number}: kind must be one of {KINDS}, got {kind!r}")
    if not 1 <= k <= n or not 1 <= d_best <= n - k + 1:
        raise OptimalityTableError(
            f"line {line_number}: [{n},{k},{d_best}] is not a valid parameter triple"
        )
    return OptimalityEntry(n, k, d_best, kind)


def load_optimality_table(path: Union[str, Path] = None) -> OptimalityTable:
    """
    Read an optimality CSV with header ``n,k,d_best,kind``.

    Args:
        path: CSV file (defaults to the bundled fixture)

    Raises:
        OptimalityTableError: missing columns, bad values or duplicate rows
    """
    path = Path(path or config.OPTIMALITY_TABLE_FILE)
    entries: Dict[Tuple[int, int, str], OptimalityEntry] = {}
    with path.open(newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        missing = [c for c in REQUIRED_COLUMNS if c not in (reader.fieldnames or [])]
        if missing:
            raise OptimalityTableError(f"{path.name}: missing columns {missing}")
        for line_number, row in enumerate(reader, 2):
            entry = _parse_row(row, line_number)
            key = (entry.n, entry.k, entry.kind)
            if key in entries:
                raise OptimalityTableError(
                    f"line {line_number}: duplicate {entry.kind} row for [{entry.n},{entry.k}]"
                )
            entries[key] = entry
    logger.debug(f"Loaded {len(entries)} optimality rows from {path}")
    return OptimalityTable(entries, source=str(path))


def optimality_lookup(
    n: int, k: int, d: int, table: OptimalityTable = None, kind: str = None
) -> str:
    """
    Classify [n, k, d] against the table.

    Args:
        n, k, d: Code parameters
        table: Optimality table (defaults to the bundled fixture)
        kind: "lcd" or "linear"; when omitted an LCD row is preferred

    Returns:
        "distance optimal" / "almost optimal", prefixed with "LCD " for LCD
        rows, or "unknown" when the table has no row or contradicts d
    """
    if table is None:
        table = load_optimality_table()
    kinds = (kind,) if kind else ("lcd", "linear")
    entry = next((e for e in (table.get(n, k, c) for c in kinds) if e), None)
    if entry is None:
        return UNKNOWN

    prefix = "LCD " if entry.kind == "lcd" else ""
    if d == entry.d_best:
        return prefix + DISTANCE_OPTIMAL
    if d + 1 == entry.d_best:
        return prefix + ALMOST_OPTIMAL
    if d > entry.d_best:
        logger.warning(
            f"[{n},{k},{d}] beats the tabulated {entry.kind} best distance {entry.d_best}"
        )
    return UNKNOWN
