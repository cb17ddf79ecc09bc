"""Rotation and swap puzzles: square grids, the seven-hexagon flower, and
the eight-triangle rhombus.

Configuration encodings follow the sticker model: when pieces can spin, the
state stores which sticker occupies each (cell, sector) slot, so every move
is a plain gather table and the same machinery covers spin-free and
spinning variants.  The human-readable form is piece letters followed by
orientation digits.
"""

from __future__ import annotations

import itertools
import math

from ..rng import SplitMix64
from ..spaces import ActionSpace, Move, Universe
from ._build import cycle_gather, glyph_codecs, involution, perm_universe

PIECE_GLYPHS = "ABCDEFGHIJKLMNOPQRSTUVWX"


# --- plain piece-per-cell square puzzles -------------------------------------
def build_square_free(size: int = 3) -> ActionSpace:
    """Swap any two pieces (click two cells)."""
    if size not in (3, 4):
        raise ValueError("square boards come in sizes 3 and 4")
    n = size * size
    moves = [
        involution(f"x{i + 1}.{j + 1}", cycle_gather(n, (i, j)))
        for i in range(n)
        for j in range(i + 1, n)
    ]
    to_text, from_text = glyph_codecs(PIECE_GLYPHS[:n])
    return ActionSpace(
        name=f"square_free{size}",
        moves={m.label: m for m in moves},
        start=bytes(range(n)),
        universe=perm_universe(n),
        to_text=to_text,
        from_text=from_text,
        metadata={
            "family": "puzzles",
            "display": "free square puzzle",
            "archetype": "factorization",
            "render": {"kind": "square", "size": size, "moves": "any_swap"},
        },
    )


def build_square_taquin(size: int = 3) -> ActionSpace:
    """Swap adjacent pieces only (click between two cells); no blank cell."""
    if size not in (3, 4):
        raise ValueError("square boards come in sizes 3 and 4")
    n = size * size
    moves = []
    for y in range(size):
        for x in range(size):
            i = y * size + x
            if x + 1 < size:
                moves.append(involution(f"x{i + 1}.{i + 2}", cycle_gather(n, (i, i + 1))))
            if y + 1 < size:
                moves.append(
                    involution(f"x{i + 1}.{i + size + 1}", cycle_gather(n, (i, i + size)))
                )
    to_text, from_text = glyph_codecs(PIECE_GLYPHS[:n])
    return ActionSpace(
        name=f"square_taquin{size}",
        moves={m.label: m for m in moves},
        start=bytes(range(n)),
        universe=perm_universe(n),
        to_text=to_text,
        from_text=from_text,
        metadata={
            "family": "puzzles",
            "display": "adjacent-swap square puzzle",
            "archetype": "factorization",
            "render": {"kind": "square", "size": size, "moves": "adjacent_swap"},
        },
    )


def _block_cells(vx: int, vy: int) -> list[tuple[int, int]]:
    return [(vx - 1, vy - 1), (vx, vy - 1), (vx, vy), (vx - 1, vy)]


def _rot_cell(vx, vy, x, y, sign):
    dx, dy = x + 0.5 - vx, y + 0.5 - vy
    nx, ny = (-dy, dx) if sign > 0 else (dy, -dx)
    return int(vx + nx - 0.5), int(vy + ny - 0.5)


def build_square_rotation(size: int = 4) -> ActionSpace:
    """Quarter-turn 2x2 blocks, pieces sliding without spinning."""
    if size not in (3, 4):
        raise ValueError("square boards come in sizes 3 and 4")
    n = size * size
    moves = []
    for vy in range(1, size):
        for vx in range(1, size):
            for sign, suffix, inv in ((1, "+", "-"), (-1, "-", "+")):
                table = list(range(n))
                for (cx, cy) in _block_cells(vx, vy):
                    nx, ny = _rot_cell(vx, vy, cx, cy, sign)
                    table[ny * size + nx] = cy * size + cx
                moves.append(
                    Move(
                        label=f"r{vx},{vy}{suffix}",
                        inverse_label=f"r{vx},{vy}{inv}",
                        table=bytes(table),
                    )
                )
    to_text, from_text = glyph_codecs(PIECE_GLYPHS[:n])
    return ActionSpace(
        name=f"square_rotation{size}",
        moves={m.label: m for m in moves},
        start=bytes(range(n)),
        universe=perm_universe(n),
        to_text=to_text,
        from_text=from_text,
        metadata={
            "family": "puzzles",
            "display": "square puzzle with rotations",
            "archetype": "factorization",
            "render": {"kind": "square", "size": size, "moves": "block_rotation"},
        },
    )


# --- spinning squares ----------------------------------------------------------
def _spin_square_codecs(size: int):
    n = size * size

    def to_text(state: bytes) -> str:
        pieces, rots = [], []
        for c in range(n):
            sticker = state[c * 4]  # sticker (p, k) at sector 0
            p, k = divmod(sticker, 4)
            pieces.append(PIECE_GLYPHS[p])
            rots.append(str((-k) % 4))
        return "".join(pieces) + ":" + "".join(rots)

    def from_text(text: str) -> bytes:
        letters, rots = text.strip().split(":")
        out = bytearray(4 * n)
        for c, (ch, rch) in enumerate(zip(letters, rots)):
            p = PIECE_GLYPHS.index(ch.upper())
            r = int(rch)
            for k in range(4):
                out[c * 4 + (k + r) % 4] = p * 4 + k
        return bytes(out)

    return to_text, from_text


def build_square_crystallo(size: int = 4) -> ActionSpace:
    """Block rotations that also spin the pieces.

    A piece coming home is twisted by 0 or 180 degrees only: every rotation
    moves it one cell and spins it a quarter turn, and the cell grid is
    bipartite, so twist parity always matches walk parity.
    """
    if size not in (3, 4):
        raise ValueError("square boards come in sizes 3 and 4")
    n = size * size
    nslots = 4 * n
    moves = []
    for vy in range(1, size):
        for vx in range(1, size):
            for sign, suffix, inv in ((1, "+", "-"), (-1, "-", "+")):
                table = list(range(nslots))
                for (cx, cy) in _block_cells(vx, vy):
                    nx, ny = _rot_cell(vx, vy, cx, cy, sign)
                    ci, ni = cy * size + cx, ny * size + nx
                    for s in range(4):
                        table[ni * 4 + (s + sign) % 4] = ci * 4 + s
                moves.append(
                    Move(
                        label=f"r{vx},{vy}{suffix}",
                        inverse_label=f"r{vx},{vy}{inv}",
                        table=bytes(table),
                    )
                )
    to_text, from_text = _spin_square_codecs(size)

    def sample(rng: SplitMix64) -> bytes:
        pieces = list(range(n))
        rng.shuffle(pieces)
        out = bytearray(nslots)
        for cell, p in enumerate(pieces):
            r = rng.randrange(4)
            for k in range(4):
                out[cell * 4 + (k + r) % 4] = p * 4 + k
        return bytes(out)

    # goal cards: the solved picture with one corner piece in each of its
    # four spins; the spins land in four different orbits, and exactly the
    # untwisted one is reachable from any scramble of the solved picture
    def twisted(r: int) -> bytes:
        out = bytearray(range(nslots))
        for k in range(4):
            out[(k + r) % 4] = k
        return bytes(out)

    return ActionSpace(
        name=f"square_crystallo{size}",
        moves={m.label: m for m in moves},
        start=bytes(range(nslots)),
        universe=Universe(
            size=math.factorial(n) * 4 ** n,
            sample=sample,
            torsor=True,
            description="piece arrangements with independent quarter-turn spins",
        ),
        to_text=to_text,
        from_text=from_text,
        metadata={
            "family": "puzzles",
            "display": "crystallographic square puzzle",
            "archetype": "choice",
            "sectors": 4,
            "transversal": [twisted(r) for r in range(4)],
            "sample_u0_in_start_orbit": True,
            "render": {"kind": "square", "size": size, "moves": "block_rotation", "spin": True},
        },
    )


# --- hexagon flower --------------------------------------------------------------
def _hex_vertex_cycles():
    """Cell 3-cycles (centre, ring k, ring k+1) per central-hexagon vertex."""
    return [(0, 1 + k, 1 + (k + 1) % 6) for k in range(6)]


def _hex_moves(sectors: int) -> list[Move]:
    ncells = 7
    nslots = ncells * max(sectors, 1)
    moves = []
    for k, tri in enumerate(_hex_vertex_cycles(), start=1):
        for direction, suffix, inv in ((1, "+", "-"), (-1, "-", "+")):
            cyc = tri if direction == 1 else tuple(reversed(tri))
            table = list(range(nslots))
            for idx in range(3):
                src, dst = cyc[idx], cyc[(idx + 1) % 3]
                if sectors:
                    for s in range(sectors):
                        table[dst * sectors + (s + direction) % sectors] = src * sectors + s
                else:
                    table[dst] = src
            moves.append(
                Move(label=f"v{k}{suffix}", inverse_label=f"v{k}{inv}", table=bytes(table))
            )
    return moves


def _hex_render(spin: bool) -> dict:
    import math as _m

    centers = [(0.0, 0.0)] + [
        (_m.cos(_m.radians(60 * k)) * _m.sqrt(3), _m.sin(_m.radians(60 * k)) * _m.sqrt(3))
        for k in range(6)
    ]
    return {"kind": "hexflower", "centers": centers, "spin": spin}


def build_hex() -> ActionSpace:
    """Seven hexagons; vertex rotations 3-cycle pieces without spinning them.

    Every move is an even permutation, so only half of the 5040 patterns are
    reachable from any given one.
    """
    from ..perm import Permutation, sign as perm_sign

    moves = _hex_moves(0)
    to_text, from_text = glyph_codecs(PIECE_GLYPHS[:7])

    def parity_check(u0: bytes, uf: bytes) -> bool:
        pos = {v: i for i, v in enumerate(u0)}
        return perm_sign(Permutation(tuple(pos[v] for v in uf))) == 1

    return ActionSpace(
        name="hex",
        moves={m.label: m for m in moves},
        start=bytes(range(7)),
        universe=perm_universe(7),
        to_text=to_text,
        from_text=from_text,
        metadata={
            "family": "puzzles",
            "display": "hexagonal puzzle",
            "archetype": "impossible",
            "parity_check": parity_check,
            "render": _hex_render(False),
        },
    )


def build_hex_corrected() -> ActionSpace:
    """Same board with two identical pieces, which makes every pattern pair
    solvable: the identical pair absorbs the parity obstruction."""
    moves = _hex_moves(0)
    glyphs = "ABCDEF"  # piece id 5 appears twice

    def to_text(state: bytes) -> str:
        return "".join(glyphs[b] for b in state)

    def from_text(text: str) -> bytes:
        out = bytes(glyphs.index(ch.upper()) for ch in text.strip())
        if sorted(out) != [0, 1, 2, 3, 4, 5, 5]:
            raise ValueError("pattern must use A-E once and F twice")
        return out

    start = bytes([0, 1, 2, 3, 4, 5, 5])

    def iterate():
        seen = set()
        for p in itertools.permutations(start):
            if p not in seen:
                seen.add(p)
                yield bytes(p)

    def sample(rng: SplitMix64) -> bytes:
        items = list(start)
        rng.shuffle(items)
        return bytes(items)

    return ActionSpace(
        name="hex_corrected",
        moves={m.label: m for m in moves},
        start=start,
        universe=Universe(
            size=math.factorial(7) // 2,
            iterate=iterate,
            sample=sample,
            description="patterns of 7 pieces, two identical",
        ),
        to_text=to_text,
        from_text=from_text,
        metadata={
            "family": "puzzles",
            "display": "corrected hexagonal puzzle",
            "archetype": "factorization",
            "render": _hex_render(False),
        },
    )


def build_hex_crystallo() -> ActionSpace:
    """Vertex rotations that spin the hexagons too.

    A vertex rotation turns each moved piece by 120 degrees, so piece
    orientations only ever change in third-of-a-turn steps; orientations are
    tracked modulo that granularity (three sectors per piece), in which the
    reachable fraction is exactly one sixth.
    """
    sectors = 3
    moves = _hex_moves(sectors)

    def to_text(state: bytes) -> str:
        pieces, rots = [], []
        for c in range(7):
            sticker = state[c * sectors]
            p, k = divmod(sticker, sectors)
            pieces.append(PIECE_GLYPHS[p])
            rots.append(str((-k) % sectors))
        return "".join(pieces) + ":" + "".join(rots)

    def from_text(text: str) -> bytes:
        letters, rots = text.strip().split(":")
        out = bytearray(7 * sectors)
        for c, (ch, rch) in enumerate(zip(letters, rots)):
            p = PIECE_GLYPHS.index(ch.upper())
            r = int(rch)
            for k in range(sectors):
                out[c * sectors + (k + r) % sectors] = p * sectors + k
        return bytes(out)

    def sample(rng: SplitMix64) -> bytes:
        pieces = list(range(7))
        rng.shuffle(pieces)
        out = bytearray(7 * sectors)
        for cell, p in enumerate(pieces):
            r = rng.randrange(sectors)
            for k in range(sectors):
                out[cell * sectors + (k + r) % sectors] = p * sectors + k
        return bytes(out)

    # six goal cards covering the six orbits: spin a piece (three classes)
    # and optionally swap two pieces (two classes)
    def model(twist: int, swapped: bool) -> bytes:
        out = bytearray(range(7 * sectors))
        for k in range(sectors):
            out[(k + twist) % sectors] = k
        if swapped:
            for k in range(sectors):
                out[5 * sectors + k] = 6 * sectors + k
                out[6 * sectors + k] = 5 * sectors + k
        return bytes(out)

    transversal = [model(t, s) for s in (False, True) for t in range(3)]

    return ActionSpace(
        name="hex_crystallo",
        moves={m.label: m for m in moves},
        start=bytes(range(7 * sectors)),
        universe=Universe(
            size=math.factorial(7) * 3 ** 7,
            sample=sample,
            torsor=True,
            description="piece arrangements with third-turn spins",
        ),
        to_text=to_text,
        from_text=from_text,
        metadata={
            "family": "puzzles",
            "display": "crystallographic hexagonal puzzle",
            "archetype": "choice",
            "sectors": sectors,
            "transversal": transversal,
            "render": _hex_render(True),
        },
    )


# --- triangle rhombus -------------------------------------------------------------
def _emul(z, w):
    a, b = z
    c, d = w
    return (a * c - b * d, a * d + b * c + b * d)


def _erot(z):
    return _emul(z, (0, 1))


def _econj(z):
    return (z[0] + z[1], -z[1])


def _eadd(z, w):
    return (z[0] + w[0], z[1] + w[1])


def _esub(z, w):
    return (z[0] - w[0], z[1] - w[1])


def _to_xy(z):
    a, b = z
    return (a + b / 2.0, b * math.sqrt(3) / 2.0)


def _triangle_geometry():
    origin = (0, 0)
    ring = [(1, 0)]
    for _ in range(5):
        ring.append(_erot(ring[-1]))
    cells = [tuple(sorted({origin, ring[k], ring[(k + 1) % 6]})) for k in range(6)]
    cells.append(tuple(sorted({ring[0], ring[1], _eadd(ring[0], ring[1])})))
    cells.append(tuple(sorted({ring[3], ring[4], _eadd(ring[3], ring[4])})))
    return origin, ring, cells


def build_triangle() -> ActionSpace:
    """Eight triangles in a rhombus: spin the hexagon, mirror the two tips.

    The slot group on all 24 corner slots has the same order as the piece
    group (the full symmetric group on 8 pieces), so a piece that comes home
    always comes home in its original orientation.
    """
    origin, ring, cells = _triangle_geometry()
    cell_index = {c: i for i, c in enumerate(cells)}
    slots = [(ci, v) for ci, c in enumerate(cells) for v in c]
    slot_index = {s: i for i, s in enumerate(slots)}
    nslots = len(slots)  # 24

    def iso_move(label, inverse_label, iso, participating):
        table = list(range(nslots))
        for ci in participating:
            new_cell = tuple(sorted(iso(v) for v in cells[ci]))
            ni = cell_index[new_cell]
            for v in cells[ci]:
                table[slot_index[(ni, iso(v))]] = slot_index[(ci, v)]
        return Move(label=label, inverse_label=inverse_label, table=bytes(table))

    one = (1, 0)
    w = (0, 1)

    def rot_fwd(z):
        return _emul(z, w)

    def rot_bwd(z):
        return _emul(z, (1, -1))  # multiply by w^-1 = 1 - w

    def mirror_a(z):
        return _esub(one, _emul(w, _econj(_esub(z, one))))

    def mirror_b(z):
        return _esub((-1, 0), _emul(w, _econj(_eadd(z, one))))

    hexagon = set(range(6))
    moves = [
        iso_move("rot+", "rot-", rot_fwd, hexagon),
        iso_move("rot-", "rot+", rot_bwd, hexagon),
        iso_move("mirA", "mirA", mirror_a, {0, 6}),
        iso_move("mirB", "mirB", mirror_b, {3, 7}),
    ]

    corner_perms = list(itertools.permutations(range(3)))  # orientation alphabet

    def to_text(state: bytes) -> str:
        pieces, orients = [], []
        for ci in range(8):
            stickers = [state[slot_index[(ci, v)]] for v in cells[ci]]
            p = stickers[0] // 3
            mapping = tuple(s % 3 for s in stickers)
            pieces.append(PIECE_GLYPHS[p])
            orients.append(str(corner_perms.index(mapping)))
        return "".join(pieces) + ":" + "".join(orients)

    def from_text(text: str) -> bytes:
        letters, orients = text.strip().split(":")
        out = bytearray(nslots)
        for ci, (ch, och) in enumerate(zip(letters, orients)):
            p = PIECE_GLYPHS.index(ch.upper())
            mapping = corner_perms[int(och)]
            for j, v in enumerate(cells[ci]):
                out[slot_index[(ci, v)]] = p * 3 + mapping[j]
        return bytes(out)

    render_cells = [[_to_xy(v) for v in c] for c in cells]

    def sample(rng: SplitMix64) -> bytes:
        pieces = list(range(8))
        rng.shuffle(pieces)
        out = bytearray(nslots)
        for cell, p in enumerate(pieces):
            sigma = corner_perms[rng.randrange(6)]
            for k in range(3):
                out[cell * 3 + sigma[k]] = p * 3 + k
        return bytes(out)

    return ActionSpace(
        name="triangle",
        moves={m.label: m for m in moves},
        start=bytes(range(nslots)),  # slot i = (cell i//3, corner i%3) holds its own sticker
        universe=Universe(
            size=math.factorial(8) * 6 ** 8,
            sample=sample,
            torsor=True,
            description="triangles placed with any of six symmetries each",
        ),
        to_text=to_text,
        from_text=from_text,
        metadata={
            "family": "puzzles",
            "display": "triangular puzzle",
            "archetype": "factorization",
            "piece_cycles": _triangle_piece_moves(cells, cell_index, rot_fwd, mirror_a, mirror_b),
            "render": {"kind": "triangle", "cells": render_cells},
        },
    )


def _triangle_piece_moves(cells, cell_index, rot_fwd, mirror_a, mirror_b):
    """Piece-level gather tables (no orientation), for the two-route order check."""
    out = {}
    for name, iso, participating in (
        ("rot+", rot_fwd, set(range(6))),
        ("mirA", mirror_a, {0, 6}),
        ("mirB", mirror_b, {3, 7}),
    ):
        table = list(range(8))
        for ci in participating:
            ni = cell_index[tuple(sorted(iso(v) for v in cells[ci]))]
            table[ni] = ci
        out[name] = bytes(table)
    return out
