"""Coloured-bead permutation games: the wheel-and-crank family.

Five builders share the same configuration model: n distinct beads in n
positions, encoded as the bead id standing at each position.
"""

from __future__ import annotations

from ..perm import Permutation, sign
from ..spaces import ActionSpace, Move
from ._build import BEAD_GLYPHS, cycle_gather, glyph_codecs, involution, perm_universe


def _bead_space(name, n, moves, metadata) -> ActionSpace:
    to_text, from_text = glyph_codecs(BEAD_GLYPHS[:n])
    metadata.setdefault("family", "beads")
    metadata.setdefault("pieces", BEAD_GLYPHS[:n])
    return ActionSpace(
        name=name,
        moves={m.label: m for m in moves},
        start=bytes(range(n)),
        universe=perm_universe(n),
        to_text=to_text,
        from_text=from_text,
        metadata=metadata,
    )


def build_infernal(n: int = 3, wheels: tuple[tuple[int, int], ...] | None = None) -> ActionSpace:
    """Mental-calculation tube: wheels flip 2 or 3 adjacent beads.

    ``wheels`` lists (start, size) windows; placement is free as long as the
    window fits the tube.
    """
    if n < 3:
        raise ValueError("need at least 3 beads")
    if wheels is None:
        wheels = ((0, 2), (n - 2, 2), (0, 3))
    moves = []
    for i, (startpos, size) in enumerate(wheels, start=1):
        if size not in (2, 3):
            raise ValueError("a wheel holds two or three beads")
        if not (0 <= startpos and startpos + size <= n):
            raise ValueError(f"wheel {i} does not fit the tube")
        window = list(range(startpos, startpos + size))
        table = cycle_gather(n, *[(a, b) for a, b in zip(window, reversed(window)) if a < b])
        moves.append(involution(f"w{i}", table))
    return _bead_space(
        f"infernal{n}",
        n,
        moves,
        {
            "archetype": "mental",
            "display": "infernal machine",
            "wheels": list(wheels),
            "render": {"kind": "tube", "beads": n, "wheels": list(wheels)},
            "instance_word_length": 4,
        },
    )


def build_linear(n: int = 5) -> ActionSpace:
    """Adjacent-swap factorization on a line of beads."""
    if n < 3:
        raise ValueError("need at least 3 beads")
    moves = [involution(f"s{i + 1}", cycle_gather(n, (i, i + 1))) for i in range(n - 1)]
    return _bead_space(
        f"linear{n}",
        n,
        moves,
        {
            "archetype": "factorization",
            "display": "linear permutations",
            "render": {"kind": "line", "beads": n},
        },
    )


def build_cyclic(n: int = 5) -> ActionSpace:
    """Beads on a circle: swap the fixed top pair, or crank the whole circle."""
    if n < 5:
        raise ValueError("the circular board carries five or more beads")
    top = involution("top", cycle_gather(n, (0, 1)))
    fwd = cycle_gather(n, tuple(range(n)))
    bwd = cycle_gather(n, tuple(reversed(range(n))))
    moves = [
        top,
        Move(label="rot+", inverse_label="rot-", table=fwd),
        Move(label="rot-", inverse_label="rot+", table=bwd),
    ]
    return _bead_space(
        f"cyclic{n}",
        n,
        moves,
        {
            "archetype": "factorization",
            "display": "cyclic permutations",
            "render": {"kind": "circle", "beads": n, "top_pair": [0, 1]},
        },
    )


def _perm_between(u0: bytes, uf: bytes) -> Permutation:
    pos = {v: i for i, v in enumerate(u0)}
    return Permutation(tuple(pos[v] for v in uf))


def build_even(n: int = 7) -> ActionSpace:
    """Two overlapping plates (3-bead triangle, 5-bead pentagon, one shared).

    The plate rotations generate only the even rearrangements: exactly half
    of the 5040 configurations are reachable, so random targets are
    impossible every other game.
    """
    if n != 7:
        raise ValueError("the two-plate board is fixed at 7 beads")
    tri = (0, 1, 2)
    pent = (2, 3, 4, 5, 6)
    moves = [
        Move("tri+", "tri-", table=cycle_gather(n, tri)),
        Move("tri-", "tri+", table=cycle_gather(n, tuple(reversed(tri)))),
        Move("pent+", "pent-", table=cycle_gather(n, pent)),
        Move("pent-", "pent+", table=cycle_gather(n, tuple(reversed(pent)))),
    ]
    return _bead_space(
        "even",
        n,
        moves,
        {
            "archetype": "impossible",
            "display": "even permutations",
            "render": {"kind": "two_plates", "triangle": list(tri), "pentagon": list(pent)},
            "parity_check": lambda u0, uf: sign(_perm_between(u0, uf)) == 1,
        },
    )


def build_safe(n: int = 4) -> ActionSpace:
    """Hidden-combination game on a line of four beads with adjacent swaps."""
    space = build_linear(n)
    space.name = f"safe{n}" if n != 4 else "safe"
    space.metadata = dict(space.metadata)
    space.metadata.update(
        {
            "archetype": "combination",
            "display": "safe",
            "render": {"kind": "line", "beads": n, "prop": "safe"},
        }
    )
    return space
