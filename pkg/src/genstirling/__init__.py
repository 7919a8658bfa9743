__version__ = "0.1.0"

__all__ = [
    "MultiPoly",
    "GenStirlingTable",
    "build_table",
    "explicit_polynomial",
    "explicit_value",
    "symmetric_formula",
    "enumerate_weight",
    "get_profile",
    "run_suite",
    "cli_main",
]

from .cli import main as cli_main
from .identities import run_suite
from .oracle import enumerate_weight
from .polycore import MultiPoly
from .profiles import get_profile
from .stirling import GenStirlingTable, build_table, explicit_polynomial, explicit_value, symmetric_formula
