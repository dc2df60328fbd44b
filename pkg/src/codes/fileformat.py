"""Read and write the defining-set text format.

    # comment
    m=3
    100
    110   # trailing comments are fine too

The first non-comment line declares the dimension; every following line is an
m-character 0/1 string whose leftmost character is coordinate 1. Vectors are
re-sorted to canonical order on load.
"""

import logging
from pathlib import Path
from typing import Dict, List, Union

from errors import DefiningSetParseError
from gf2core import BitVector
from .defining_set import DefiningSet, Provenance, from_vectors

logger = logging.getLogger(__name__)


def parse_defining_set(text: str, label: str = "") -> DefiningSet:
    """
    Parse defining-set text.

    Args:
        text: File contents
        label: Name recorded on the result (usually the file name)

    Returns:
        DefiningSet with CUSTOM provenance

    Raises:
        DefiningSetParseError: with the offending line number
    """
    m = None
    vectors: List[BitVector] = []
    first_seen: Dict[int, int] = {}

    for line_number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        if m is None:
            key, sep, value = line.partition("=")
            if not sep or key.strip() != "m":
                raise DefiningSetParseError(line_number, f"expected 'm=<int>', got {line!r}")
            try:
                m = int(value.strip())
            except ValueError:
                raise DefiningSetParseError(line_number, f"invalid dimension {value.strip()!r}")
            if not 1 <= m <= 64:
                raise DefiningSetParseError(line_number, f"dimension {m} outside [1, 64]")
            continue

        if len(line) != m or set(line) - {"0", "1"}:
            raise DefiningSetParseError(
                line_number, f"expected a {m}-character 0/1 string, got {line!r}"
            )
        v = BitVector.from_string(line)
        if v.is_zero():
            raise DefiningSetParseError(line_number, "the zero vector is not allowed")
        if v.bits in first_seen:
            raise DefiningSetParseError(
                line_number,
                f"duplicate vector {line} (first seen on line {first_seen[v.bits]})",
            )
        first_seen[v.bits] = line_number
        vectors.append(v)

    if m is None:
        raise DefiningSetParseError(0, "missing 'm=<int>' header")
    if not vectors:
        raise DefiningSetParseError(0, "no vectors listed")

    return from_vectors(m, vectors, Provenance.CUSTOM, label=label)


def load_defining_set(path: Union[str, Path]) -> DefiningSet:
    path = Path(path)
    raw = path.read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise DefiningSetParseError(raw[: e.start].count(b"\n") + 1, "file is not valid UTF-8")
    defining_set = parse_defining_set(text, label=path.name)
    logger.info(f"Loaded {defining_set.n} vectors in F_2^{defining_set.m} from {path}")
    return defining_set


def dump_defining_set(defining_set: DefiningSet) -> str:
    lines = []
    if defining_set.label:
        lines.append(f"# {defining_set.label}")
    lines.append(f"m={defining_set.m}")
    lines.extend(v.to_string() for v in defining_set.vectors)
    return "\n".join(lines) + "\n"


def save_defining_set(defining_set: DefiningSet, path: Union[str, Path]):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_defining_set(defining_set), encoding="utf-8")
    logger.info(f"Saved {defining_set.n} vectors to {path}")
