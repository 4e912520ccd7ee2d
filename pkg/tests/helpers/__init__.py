"""Test helpers for thaqkd testing."""

from tests.helpers.output import captured_output, parse_dataset
from tests.helpers.states import random_covariance, squeezed_thermal

__all__ = [
    "captured_output",
    "parse_dataset",
    "random_covariance",
    "squeezed_thermal",
]
