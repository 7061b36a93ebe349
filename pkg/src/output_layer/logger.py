"""
src/output_layer/logger.py

Centralized logging for protocol runs, attacks and benchmarks
"""

import logging
import os
from datetime import datetime
from logging.handlers import RotatingFileHandler
from typing import Any, Dict, Mapping, Optional


class LoggerConstants:
    """Constants for logging system"""
    DEFAULT_LOG_DIR = "log"
    DEFAULT_LOG_LEVEL = "INFO"
    MAX_LOG_SIZE = 10 * 1024 * 1024  # 10MB
    BACKUP_COUNT = 5
    LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    CONSOLE_FORMAT = "%(levelname)s: %(message)s"
    DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
    LOGGER_NAME = "ProofSystem"


class ProofLogger:
    """File logger with rotation and a warnings-only console handler.

    Handlers are installed on the first setup() call, not at import.
    """

    def __init__(self,
                 log_dir: str = LoggerConstants.DEFAULT_LOG_DIR,
                 log_level: str = LoggerConstants.DEFAULT_LOG_LEVEL,
                 max_log_size: int = LoggerConstants.MAX_LOG_SIZE,
                 backup_count: int = LoggerConstants.BACKUP_COUNT):
        self.log_dir = log_dir
        self.log_level = log_level
        self.max_log_size = max_log_size
        self.backup_count = backup_count
        self.log_file: Optional[str] = None
        self.logger = logging.getLogger(LoggerConstants.LOGGER_NAME)
        self._handlers = []

    @classmethod
    def from_config(cls, config: Mapping[str, Any]) -> "ProofLogger":
        return cls(
            log_dir=config.get("log_dir", LoggerConstants.DEFAULT_LOG_DIR),
            log_level=config.get("level", LoggerConstants.DEFAULT_LOG_LEVEL),
            max_log_size=config.get("max_bytes", LoggerConstants.MAX_LOG_SIZE),
            backup_count=config.get("backup_count", LoggerConstants.BACKUP_COUNT),
        )

    @property
    def is_configured(self) -> bool:
        return bool(self._handlers)

    def setup(self) -> "ProofLogger":
        """Attach the rotating file handler and console handler to the root logger."""
        if self.is_configured:
            return self
        os.makedirs(self.log_dir, exist_ok=True)

        timestamp = datetime.now().strftime("%Y-%m-%d")
        self.log_file = os.path.join(self.log_dir, f"proofs_{timestamp}.log")

        file_handler = RotatingFileHandler(
            self.log_file,
            maxBytes=self.max_log_size,
            backupCount=self.backup_count,
            encoding='utf-8'
        )
        file_handler.setFormatter(logging.Formatter(
            LoggerConstants.LOG_FORMAT,
            LoggerConstants.DATE_FORMAT
        ))

        console_handler = logging.StreamHandler()
        console_handler.setLevel(logging.WARNING)
        console_handler.setFormatter(logging.Formatter(LoggerConstants.CONSOLE_FORMAT))

        root = logging.getLogger()
        root.setLevel(getattr(logging, self.log_level.upper()))
        for handler in (file_handler, console_handler):
            root.addHandler(handler)
            self._handlers.append(handler)
        return self

    def close(self):
        root = logging.getLogger()
        for handler in self._handlers:
            root.removeHandler(handler)
            handler.close()
        self._handlers.clear()

    def log_run(self, details: Dict[str, Any]):
        """Log one protocol run; Bot verdicts that were not certified go to the console too."""
        message = f"RUN [{details.get('problem')}]: {details}"
        if details.get("verdict") == "bot" and not details.get("certified"):
            self.logger.warning(message)
        else:
            self.logger.info(message)

    def log_attack(self, report: Dict[str, Any]):
        message = f"ATTACK [{report.get('policy')}]: {report}"
        if report.get("non_canonical", 0) > 0:
            self.logger.warning(message)
        else:
            self.logger.info(message)

    def log_bench(self, metrics: Dict[str, Any]):
        self.logger.info(f"BENCH: {metrics}")

    def log_session_start(self, command: str):
        self.logger.info("=" * 50)
        self.logger.info(f"SESSION STARTED: {command}")
        self.logger.info("=" * 50)

    def log_session_end(self, summary: Dict[str, Any]):
        self.logger.info("=" * 50)
        self.logger.info("SESSION ENDED")
        self.logger.info(f"SUMMARY: {summary}")
        self.logger.info("=" * 50)


# Global logger instance; call setup() before use
proof_logger = ProofLogger()
