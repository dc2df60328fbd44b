"""Hashing utilities for report integrity."""

import hashlib
import json
from typing import Any


def canonical_json(payload: Any) -> str:
    """Compact JSON with sorted keys; identical inputs give identical text."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def hash_content(content: str, algorithm: str = "sha256") -> str:
    """
    Generate hash of content.

    Args:
        content: Content to hash
        algorithm: Hash algorithm name accepted by hashlib

    Returns:
        Hexadecimal hash string
    """
    hasher = hashlib.new(algorithm)
    hasher.update(content.encode('utf-8'))
    return hasher.hexdigest()


def report_digest(payload: Any) -> str:
    """SHA256 of the canonical JSON form of a report."""
    return hash_content(canonical_json(payload))
