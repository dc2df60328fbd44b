"""Run log handler - append formatted records to a local log file."""

import logging
import sys
from pathlib import Path

import config
from utils.logger import LOG_FORMAT


class RunLogHandler(logging.Handler):
    """Append logs to a single run log file."""

    def __init__(self, log_file: str = None):
        super().__init__()
        self.log_file = Path(log_file or config.LOG_FILE)
        self.setFormatter(logging.Formatter(LOG_FORMAT))
        self._warned = False

    def emit(self, record: logging.LogRecord):
        try:
            msg = self.format(record)
            try:
                self.log_file.parent.mkdir(parents=True, exist_ok=True)
                with open(self.log_file, "a", encoding="utf-8") as f:
                    f.write(msg + "\n")
            except OSError as e:
                # Don't crash the run on a log write error
                if not self._warned:
                    print(f"Warning: Failed to write run log {self.log_file}: {e}", file=sys.stderr)
                    self._warned = True
        except Exception:
            self.handleError(record)


def setup_run_logging(log_file: str = None) -> RunLogHandler:
    """Attach a RunLogHandler to the root logger and return it."""
    handler = RunLogHandler(log_file=log_file)
    logging.getLogger().addHandler(handler)
    return handler
