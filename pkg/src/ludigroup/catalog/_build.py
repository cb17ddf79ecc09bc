"""Shared builder helpers for catalog games."""

from __future__ import annotations

import itertools
import math

from ..rng import SplitMix64
from ..spaces import Move, Universe

# Bead colour letters: the classic J/R/B (yellow, red, blue) first, then
# letters that do not collide with them.
BEAD_GLYPHS = "JRBVOMCADEFGHIKLNPQSTUWXYZ"


def cycle_gather(n: int, *cycles) -> bytes:
    """Gather table for "content of c0 moves to c1 moves to ... back to c0"."""
    table = list(range(n))
    for cyc in cycles:
        for src, dst in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            table[dst] = src
    return bytes(table)


def perm_universe(n: int, glyph_count: int | None = None) -> Universe:
    """All arrangements of n distinct pieces in n positions."""
    size = math.factorial(n)

    def iterate():
        for p in itertools.permutations(range(n)):
            yield bytes(p)

    def sample(rng: SplitMix64) -> bytes:
        items = list(range(n))
        rng.shuffle(items)
        return bytes(items)

    return Universe(
        size=size,
        iterate=iterate,
        sample=sample,
        torsor=True,
        description=f"{n}! arrangements of {n} distinct pieces",
    )


def glyph_codecs(glyphs: str):
    index = {g: i for i, g in enumerate(glyphs)}

    def to_text(state: bytes) -> str:
        return "".join(glyphs[b] for b in state)

    def from_text(text: str) -> bytes:
        try:
            return bytes(index[ch] for ch in text.strip().upper())
        except KeyError as exc:
            raise ValueError(f"unknown piece letter {exc}") from None

    return to_text, from_text


def involution(label: str, table: bytes) -> Move:
    return Move(label=label, inverse_label=label, table=table)


def rotation_pair(base: str, fwd_table: bytes, bwd_table: bytes) -> list[Move]:
    return [
        Move(label=base + "+", inverse_label=base + "-", table=fwd_table),
        Move(label=base + "-", inverse_label=base + "+", table=bwd_table),
    ]
