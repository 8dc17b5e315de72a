"""Report generation: terminal, JSON and CSV formats."""

from symprod.reporting.csv_reporter import CSVReporter
from symprod.reporting.json_reporter import JSONReporter
from symprod.reporting.terminal import TerminalReporter

__all__ = ["CSVReporter", "JSONReporter", "TerminalReporter"]
