"""Concrete actions on finite configuration sets.

A configuration is a fixed-width ``bytes`` value (the canonical encoding:
piece id per position, then orientation digits, then scalar registers).
Byte-wise equality, hashing and lexicographic order of these encodings are
the package-wide notions of configuration identity and ordering.

Moves come in two backends:

* slot moves: a gather table t (``new[i] = old[t[i]]``) plus optional
  (index, value) guards — one uniform shape for total permutation moves and
  for partial arrows such as sliding-tile moves (guard: blank at source);
* fn moves: an arbitrary partial transformer for register games (grid walks,
  dot counters) where a byte permutation cannot express the update.

Every move names its inverse, so breadth-first searches can walk backwards
through partial moves with their own applicability domains.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import kernels
from .errors import InapplicableMoveError, UnknownLabelError
from .perm import Permutation

DEFAULT_NODE_CAP = 5_000_000


@dataclass(frozen=True)
class Move:
    """One named generator (or one direction of a groupoid arrow family)."""

    label: str
    inverse_label: str
    table: bytes | None = None
    guards: tuple[tuple[int, int], ...] = ()
    fn: Callable[[bytes], bytes | None] | None = None
    # groupoid bookkeeping: (source vertex, target vertex) when the move is
    # one arrow of a partial action
    arrow: tuple | None = None

    def __post_init__(self):
        if (self.table is None) == (self.fn is None):
            raise ValueError(f"move {self.label!r} needs exactly one backend")

    def applies_to(self, state: bytes) -> bool:
        if self.table is not None:
            return all(state[i] == v for i, v in self.guards)
        return self.fn(state) is not None

    def apply(self, state: bytes) -> bytes | None:
        """Resulting configuration, or None when inapplicable."""
        if self.table is not None:
            for i, v in self.guards:
                if state[i] != v:
                    return None
            return kernels.permute_state(self.table, state)
        return self.fn(state)

    def slot_permutation(self) -> Permutation | None:
        """The move as a permutation of slots (where content travels)."""
        if self.table is None:
            return None
        return Permutation(tuple(kernels.invert(self.table)))


@dataclass
class Universe:
    """What is known about the full configuration set U."""

    size: int | None = None
    iterate: Callable[[], Iterator[bytes]] | None = None
    sample: Callable | None = None  # (SplitMix64) -> bytes, uniform over U
    torsor: bool = False  # U is a free orbit of the ambient wreath/full group
    description: str = ""


@dataclass
class ActionSpace:
    """A finite configuration set with named moves of a group or groupoid.

    Immutable after construction by convention; safe to share across
    threads.  ``moves`` preserves declaration order, which fixes the
    deterministic tie-breaking order everywhere else.
    """

    name: str
    moves: dict[str, Move]
    start: bytes
    universe: Universe = field(default_factory=Universe)
    to_text: Callable[[bytes], str] = lambda b: b.hex()
    from_text: Callable[[str], bytes] = bytes.fromhex
    metadata: dict = field(default_factory=dict)
    # inverse-only moves (reachable through inverse_label but not playable,
    # e.g. division in a multiplication monoid)
    auxiliary: dict[str, Move] = field(default_factory=dict)

    def move(self, label: str) -> Move:
        try:
            return self.moves[label]
        except KeyError:
            pass
        try:
            return self.auxiliary[label]
        except KeyError:
            raise UnknownLabelError(label) from None

    def closure_moves(self) -> list[Move]:
        """Playable moves plus any inverse-only moves: the orbit alphabet."""
        return list(self.moves.values()) + list(self.auxiliary.values())

    def labels(self) -> list[str]:
        return list(self.moves)

    def inverse_label(self, label: str) -> str:
        return self.move(label).inverse_label

    @property
    def has_slot_rep(self) -> bool:
        return all(m.table is not None for m in self.moves.values())

    @property
    def slot_degree(self) -> int | None:
        if not self.has_slot_rep:
            return None
        return len(self.start)

    def slot_tables(self) -> tuple[list[bytes], list[tuple[tuple[int, int], ...]]]:
        tables, guards = [], []
        for m in self.moves.values():
            if m.table is None:
                raise UnknownLabelError(f"{m.label} has no slot table")
            tables.append(m.table)
            guards.append(m.guards)
        return tables, guards

    def enumerate_universe(self) -> Iterator[bytes]:
        if self.universe.iterate is None:
            from .errors import NotEnumerableError

            raise NotEnumerableError(f"{self.name}: universe is not enumerable")
        return self.universe.iterate()


def apply(space: ActionSpace, label: str, state: bytes) -> bytes:
    """g·u for a named generator; raises on inapplicable partial moves."""
    move = space.move(label)
    out = move.apply(state)
    if out is None:
        raise InapplicableMoveError(label, f"at {space.to_text(state)}")
    return out


def apply_letter(space: ActionSpace, letter: tuple[str, int], state: bytes) -> bytes | None:
    """Apply a word letter (label, exponent); None when inapplicable."""
    label, exp = letter
    if exp < 0:
        label = space.inverse_label(label)
    return space.move(label).apply(state)


def gather_table_between(u0: bytes, uf: bytes) -> bytes | None:
    """The gather table g with uf[i] = u0[g[i]], if u0 has distinct bytes.

    For torsor spaces this is the unique ambient element mapping u0 to uf;
    sifting it through a stabilizer chain decides orbit membership exactly.
    """
    pos = {}
    for i, v in enumerate(u0):
        if v in pos:
            return None
        pos[v] = i
    try:
        return bytes(pos[v] for v in uf)
    except KeyError:
        return None
