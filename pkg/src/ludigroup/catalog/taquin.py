"""The sliding-tile puzzle as a groupoid action.

Vertices are the blank positions; each generator is one directed arrow
"slide the tile at cell a onto the adjacent blank at cell b", applicable
only when the blank actually sits at b.  An r×c board has
2·(2rc − r − c) arrows (48 for the classic 4×4), half of them inverses of
the other half.
"""

from __future__ import annotations

import itertools
import math

from ..groupoid import GroupoidArrow
from ..perm import Permutation, sign as perm_sign
from ..rng import SplitMix64
from ..spaces import ActionSpace, Move, Universe
from ._build import cycle_gather

BLANK = 0
TILE_GLYPHS = "_123456789ABCDEFGHIJ"  # index = tile id; _ is the blank


def _cell_name(i: int, cols: int) -> str:
    return f"{i // cols + 1}{i % cols + 1}"  # row, column; 1-indexed


def build_taquin(rows: int = 4, cols: int = 4) -> ActionSpace:
    if rows < 2 or cols < 2:
        raise ValueError("the board needs at least two rows and two columns")
    n = rows * cols
    if n > len(TILE_GLYPHS):
        raise ValueError("board too large for the tile alphabet")

    moves: dict[str, Move] = {}
    arrows: list[GroupoidArrow] = []
    for y in range(rows):
        for x in range(cols):
            i = y * cols + x
            neighbours = []
            if x + 1 < cols:
                neighbours.append(i + 1)
            if y + 1 < rows:
                neighbours.append(i + cols)
            for j in neighbours:
                for a, b in ((i, j), (j, i)):
                    # tile slides a -> b; the blank crosses b -> a
                    label = f"{_cell_name(a, cols)}>{_cell_name(b, cols)}"
                    inverse = f"{_cell_name(b, cols)}>{_cell_name(a, cols)}"
                    moves[label] = Move(
                        label=label,
                        inverse_label=inverse,
                        table=cycle_gather(n, (a, b)),
                        guards=((b, BLANK),),
                        arrow=(b, a),
                    )
                    arrows.append(
                        GroupoidArrow(
                            label,
                            source=_cell_name(b, cols),
                            target=_cell_name(a, cols),
                            effect=Permutation(
                                tuple(b if k == a else a if k == b else k for k in range(n))
                            ),
                        )
                    )

    solved = bytes(list(range(1, n)) + [BLANK])

    def iterate():
        for p in itertools.permutations(range(n)):
            yield bytes(p)

    def sample(rng: SplitMix64) -> bytes:
        items = list(range(n))
        rng.shuffle(items)
        return bytes(items)

    def to_text(state: bytes) -> str:
        return "".join(TILE_GLYPHS[b] for b in state)

    def from_text(text: str) -> bytes:
        out = bytes(TILE_GLYPHS.index(ch) for ch in text.strip().upper())
        if sorted(out) != list(range(n)):
            raise ValueError("each tile must appear exactly once")
        return out

    def solvability_rule(u0: bytes, uf: bytes) -> bool:
        """Exact parity rule: the tile permutation's sign must match the
        parity of the blank's taxicab displacement."""
        pos = {v: i for i, v in enumerate(u0)}
        perm = Permutation(tuple(pos[v] for v in uf))
        b0, bf = u0.index(BLANK), uf.index(BLANK)
        taxicab = abs(b0 // cols - bf // cols) + abs(b0 % cols - bf % cols)
        return perm_sign(perm) == (1 if taxicab % 2 == 0 else -1)

    return ActionSpace(
        name=f"taquin{rows}" if rows == cols else f"taquin{rows}x{cols}",
        moves=moves,
        start=solved,
        universe=Universe(
            size=math.factorial(n),
            iterate=iterate,
            sample=sample,
            description="tile arrangements including the blank",
        ),
        to_text=to_text,
        from_text=from_text,
        metadata={
            "family": "taquin",
            "display": f"{rows}x{cols} sliding puzzle",
            "archetype": "factorization",
            "rows": rows,
            "cols": cols,
            "arrows": arrows,
            "vertices": [_cell_name(i, cols) for i in range(n)],
            "solvability_rule": solvability_rule,
            "render": {"kind": "taquin", "rows": rows, "cols": cols},
        },
    )
