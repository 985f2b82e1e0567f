"""Experiment harness: configuration, run loop, and command line."""

from .cli import main, parse_args
from .config import ExperimentConfig
from .runner import log_filename, run_experiment, run_single

__all__ = [
    "main",
    "parse_args",
    "ExperimentConfig",
    "log_filename",
    "run_experiment",
    "run_single",
]
