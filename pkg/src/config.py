"""Configuration and constants."""

import os
from dataclasses import dataclass
from pathlib import Path
from dotenv import load_dotenv

# Load .env from project root (budget overrides only)
PROJECT_ROOT = Path(__file__).parent.parent
load_dotenv(PROJECT_ROOT / ".env")

# Directories
DATA_DIR = PROJECT_ROOT / "data"
OUTPUT_DIR = Path(os.getenv("SIMPLICIAL_CODES_OUTPUT_DIR", str(DATA_DIR / "reports")))
LOG_FILE = Path(os.getenv("SIMPLICIAL_CODES_LOG_FILE", str(DATA_DIR / "run.log")))
OPTIMALITY_TABLE_FILE = DATA_DIR / "lcd_optimal_codes.csv"

LOG_LEVEL = os.getenv("SIMPLICIAL_CODES_LOG_LEVEL", "INFO")

# Enumeration budgets
MAX_MESSAGE_BITS = int(os.getenv("SIMPLICIAL_CODES_MAX_M", "24"))
MAX_CODEWORD_BITS = int(os.getenv("SIMPLICIAL_CODES_MAX_K", "24"))
MAX_LENGTH = int(os.getenv("SIMPLICIAL_CODES_MAX_N", str(2**16)))
MEMBER_CAP = int(os.getenv("SIMPLICIAL_CODES_MEMBER_CAP", str(2**20)))
MAX_MAXIMAL_ELEMENTS = 20
DUAL_SEARCH_MAX_WEIGHT = int(os.getenv("SIMPLICIAL_CODES_DUAL_MAX_W", "6"))

# Worker pool
WORKERS = int(os.getenv("SIMPLICIAL_CODES_WORKERS", str(os.cpu_count() or 1)))
CHUNK_CELLS = 2**22  # message x column cells per enumeration chunk

# Hull cross-check is skipped above this length
HULL_CHECK_MAX_LENGTH = int(os.getenv("SIMPLICIAL_CODES_HULL_CHECK_MAX_N", "1024"))

# MacWilliams dual distributions are reported up to this length
MACWILLIAMS_MAX_LENGTH = int(os.getenv("SIMPLICIAL_CODES_MACWILLIAMS_MAX_N", "1024"))

# Vector width
MAX_DIMENSION = 64


@dataclass(frozen=True)
class Budget:
    """Limits for every exhaustive enumeration in the package."""

    max_message_bits: int = MAX_MESSAGE_BITS
    max_codeword_bits: int = MAX_CODEWORD_BITS
    max_length: int = MAX_LENGTH
    member_cap: int = MEMBER_CAP
    workers: int = WORKERS

    @classmethod
    def from_env(cls) -> "Budget":
        """Build a budget from the module-level constants."""
        return cls(
            max_message_bits=MAX_MESSAGE_BITS,
            max_codeword_bits=MAX_CODEWORD_BITS,
            max_length=MAX_LENGTH,
            member_cap=MEMBER_CAP,
            workers=WORKERS,
        )


DEFAULT_BUDGET = Budget.from_env()
