"""ludigroup: finite group/groupoid actions, factorization games, analysis.

The package builds concrete games (bead permutations, grid walks, rotation
puzzles, sliding tiles) on one uniform action engine, solves and referees
them, and serves interactive sessions over a CLI and a JSON/HTTP API.
"""

from .errors import (
    InapplicableMoveError,
    NoSolutionError,
    NodeCapExceededError,
    NonComposableError,
)
from .perm import Permutation, compose, identity, invert, sign
from .spaces import ActionSpace, Move, apply
from .words import Word, parse_word

__version__ = "0.1.0"

__all__ = [
    "ActionSpace",
    "InapplicableMoveError",
    "Move",
    "NoSolutionError",
    "NodeCapExceededError",
    "NonComposableError",
    "Permutation",
    "Word",
    "apply",
    "compose",
    "identity",
    "invert",
    "parse_word",
    "sign",
]
