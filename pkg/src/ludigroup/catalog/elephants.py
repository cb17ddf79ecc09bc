"""Elephant games on an even-sided board.

Reflected: every compass step mirrors the figure, as if the cell edges were
mirrors.  Rotating: the only moves are quarter-turns of the four cells
around an interior lattice vertex, which also rotate the figure.

Orientations: the reflected elephant has four images (upright/flipped ×
trunk-right/trunk-left, a Klein four-group); the rotating one has eight
(four rotations × mirrored or not).  Mirrored images exist in the rotating
configuration set but no rotation ever produces one, which is exactly why
the state space splits into four orbits of 72 on the 6×6 board.
"""

from __future__ import annotations

import itertools

from ..rng import SplitMix64
from ..spaces import ActionSpace, Move, Universe
from .grid import DELTAS, OPPOSITE

UPRIGHT = 0


def _klein_flip(o: int, axis: str) -> int:
    # bit 0: horizontally mirrored (trunk left); bit 1: upside down
    return o ^ (1 if axis == "h" else 2)


def build_reflected_elephants(side: int = 6, count: int = 1) -> ActionSpace:
    """Mirror-walk to a corner goal; four orbits matching the 4-colouring."""
    if side % 2 or side < 2:
        raise ValueError("the board side must be even")
    W = side

    def mk(label):
        dx, dy = DELTAS[label]
        axis = "h" if dx else "v"

        def fn(state: bytes) -> bytes | None:
            out = bytearray(state)
            for e in range(count):
                x, y, o = state[3 * e : 3 * e + 3]
                nx, ny = x + dx, y + dy
                if not (0 <= nx < W and 0 <= ny < W):
                    return None
                out[3 * e : 3 * e + 3] = (nx, ny, _klein_flip(o, axis))
            return bytes(out)

        return Move(label=label, inverse_label=OPPOSITE[label], fn=fn)

    corners = [(0, 0), (W - 1, 0), (0, W - 1), (W - 1, W - 1)]
    if count == 1:
        start = bytes((0, 1, UPRIGHT))
        transversal = [bytes((cx, cy, UPRIGHT)) for cx, cy in corners]
    else:
        start = bytes(itertools.chain.from_iterable((cx, cy, UPRIGHT) for cx, cy in corners))
        transversal = None

    def iterate():
        cells = [(x, y) for y in range(W) for x in range(W)]
        for combo in itertools.product(*(cells for _ in range(count))):
            for orients in itertools.product(range(4), repeat=count):
                yield bytes(
                    itertools.chain.from_iterable(
                        (x, y, o) for (x, y), o in zip(combo, orients)
                    )
                )

    def sample(rng: SplitMix64) -> bytes:
        vals = []
        for _ in range(count):
            vals += [rng.randrange(W), rng.randrange(W), rng.randrange(4)]
        return bytes(vals)

    def to_text(state: bytes) -> str:
        return ";".join(
            f"{state[3 * e] + 1},{state[3 * e + 1] + 1},o{state[3 * e + 2]}"
            for e in range(count)
        )

    def from_text(text: str) -> bytes:
        vals = []
        for part in text.split(";"):
            x, y, o = part.split(",")
            vals += [int(x) - 1, int(y) - 1, int(o.lstrip("o"))]
        return bytes(vals)

    name = "elephants_reflected" if count == 1 else f"elephants_reflected_x{count}"
    return ActionSpace(
        name=name,
        moves={lab: mk(lab) for lab in "SONE"},
        start=start,
        universe=Universe(
            size=(W * W * 4) ** count,
            iterate=iterate,
            sample=sample,
            description="(cell, mirror-orientation) per elephant",
        ),
        to_text=to_text,
        from_text=from_text,
        metadata={
            "family": "elephants",
            "display": "reflected elephants",
            "archetype": "choice" if count == 1 else "factorization",
            "transversal": transversal,
            "orientations": 4,
            "corner_goals": corners,
            "color_hint": {"kind": "parity4", "side": W},
            "render": {"kind": "elephants", "side": W, "mode": "reflected", "count": count},
        },
    )


def _rot_cell(vx, vy, x, y, sign):
    # quarter-turn of the 2x2 block around interior vertex (vx, vy)
    dx, dy = x + 0.5 - vx, y + 0.5 - vy
    nx, ny = (-dy, dx) if sign > 0 else (dy, -dx)
    return int(vx + nx - 0.5), int(vy + ny - 0.5)


def build_rotating_elephants(side: int = 6, count: int = 1) -> ActionSpace:
    """Quarter-turn blocks spin the elephant; eight orientations, four orbits."""
    if side % 2 or side < 2:
        raise ValueError("the board side must be even")
    W = side
    vertices = [(vx, vy) for vy in range(1, W) for vx in range(1, W)]

    def mk(vx, vy, sign):
        suffix = "+" if sign > 0 else "-"

        def fn(state: bytes) -> bytes | None:
            # total move: blocks without an elephant rotate visibly but leave
            # the state unchanged
            out = bytearray(state)
            for e in range(count):
                x, y, o = state[3 * e : 3 * e + 3]
                if vx - 1 <= x <= vx and vy - 1 <= y <= vy:
                    nx, ny = _rot_cell(vx, vy, x, y, sign)
                    rot, mir = o & 3, o & 4
                    out[3 * e : 3 * e + 3] = (nx, ny, ((rot + sign) % 4) | mir)
            return bytes(out)

        return Move(
            label=f"r{vx},{vy}{suffix}",
            inverse_label=f"r{vx},{vy}{'-' if sign > 0 else '+'}",
            fn=fn,
        )

    corners = [(0, 0), (W - 1, 0), (0, W - 1), (W - 1, W - 1)]
    if count == 1:
        start = bytes((0, 1, UPRIGHT))
    else:
        start = bytes(itertools.chain.from_iterable((cx, cy, UPRIGHT) for cx, cy in corners))

    def iterate():
        cells = [(x, y) for y in range(W) for x in range(W)]
        for combo in itertools.product(*(cells for _ in range(count))):
            for orients in itertools.product(range(8), repeat=count):
                yield bytes(
                    itertools.chain.from_iterable(
                        (x, y, o) for (x, y), o in zip(combo, orients)
                    )
                )

    def sample(rng: SplitMix64) -> bytes:
        vals = []
        for _ in range(count):
            vals += [rng.randrange(W), rng.randrange(W), rng.randrange(8)]
        return bytes(vals)

    def to_text(state: bytes) -> str:
        return ";".join(
            f"{state[3 * e] + 1},{state[3 * e + 1] + 1},o{state[3 * e + 2]}"
            for e in range(count)
        )

    def from_text(text: str) -> bytes:
        vals = []
        for part in text.split(";"):
            x, y, o = part.split(",")
            vals += [int(x) - 1, int(y) - 1, int(o.lstrip("o"))]
        return bytes(vals)

    moves = {}
    for vx, vy in vertices:
        for sign in (1, -1):
            m = mk(vx, vy, sign)
            moves[m.label] = m

    # a transversal of the four true orbits: two reachable corner goals and
    # their mirror-image twins (the paper's four corner cards are pairwise
    # equivalent two by two, so the mirrored goals stand in for the other
    # two orbits)
    transversal = None
    if count == 1:
        transversal = [
            bytes((0, 0, 0)),
            bytes((W - 1, 0, 0)),
            bytes((0, 0, 4)),
            bytes((W - 1, 0, 4)),
        ]

    name = "elephants_rotating" if count == 1 else f"elephants_rotating_x{count}"
    return ActionSpace(
        name=name,
        moves=moves,
        start=start,
        universe=Universe(
            size=(W * W * 8) ** count,
            iterate=iterate,
            sample=sample,
            description="(cell, dihedral orientation) per elephant",
        ),
        to_text=to_text,
        from_text=from_text,
        metadata={
            "family": "elephants",
            "display": "rotating elephants",
            "archetype": "choice" if count == 1 else "factorization",
            "transversal": transversal,
            "orientations": 8,
            "corner_goals": corners,
            "color_hint": {"kind": "parity4", "side": W},
            "render": {"kind": "elephants", "side": W, "mode": "rotating", "count": count},
        },
    )
