"""Catalog of concrete games and their builders.

``get_game`` resolves both the canonical ids listed by ``list_games`` and
parameterized ids such as ``linear7``, ``cyclic6`` or ``taquin3``.
"""

from __future__ import annotations

import re
from typing import Callable

from ..errors import UnknownLabelError
from ..spaces import ActionSpace
from .beads import build_cyclic, build_even, build_infernal, build_linear, build_safe
from .elephants import build_reflected_elephants, build_rotating_elephants
from .extras import (
    build_factor,
    build_inrc,
    build_lock,
    build_rotation_group,
    build_square_symmetries,
    build_two_lamps,
)
from .grid import build_displacement, build_ladybug, build_programmed_sheep, build_sheep
from .puzzles import (
    build_hex,
    build_hex_corrected,
    build_hex_crystallo,
    build_square_crystallo,
    build_square_free,
    build_square_rotation,
    build_square_taquin,
    build_triangle,
)
from .rubik import build_rubik
from .taquin import build_taquin

BUILDERS: dict[str, Callable[[], ActionSpace]] = {
    "infernal": build_infernal,
    "linear5": lambda: build_linear(5),
    "cyclic5": lambda: build_cyclic(5),
    "even": build_even,
    "safe": build_safe,
    "sheep": build_sheep,
    "programmed_sheep": build_programmed_sheep,
    "ladybug": build_ladybug,
    "displacement": build_displacement,
    "elephants_reflected": build_reflected_elephants,
    "elephants_rotating": build_rotating_elephants,
    "square_free3": lambda: build_square_free(3),
    "square_taquin3": lambda: build_square_taquin(3),
    "square_rotation4": lambda: build_square_rotation(4),
    "square_crystallo4": lambda: build_square_crystallo(4),
    "hex": build_hex,
    "hex_corrected": build_hex_corrected,
    "hex_crystallo": build_hex_crystallo,
    "triangle": build_triangle,
    "taquin3": lambda: build_taquin(3, 3),
    "taquin4": lambda: build_taquin(4, 4),
    "rubik": build_rubik,
    "lock": build_lock,
    "two_lamps": build_two_lamps,
    "square_symmetries": build_square_symmetries,
    "square_mirrors": lambda: build_square_symmetries("mirrors"),
    "z3": build_rotation_group,
    "inrc": build_inrc,
    "factor": build_factor,
}

_PARAMETRIC = (
    (re.compile(r"^linear(\d+)$"), lambda m: build_linear(int(m.group(1)))),
    (re.compile(r"^cyclic(\d+)$"), lambda m: build_cyclic(int(m.group(1)))),
    (re.compile(r"^infernal(\d+)$"), lambda m: build_infernal(int(m.group(1)))),
    (re.compile(r"^taquin(\d+)x(\d+)$"), lambda m: build_taquin(int(m.group(1)), int(m.group(2)))),
    (re.compile(r"^taquin(\d+)$"), lambda m: build_taquin(int(m.group(1)), int(m.group(1)))),
    (re.compile(r"^square_free(\d)$"), lambda m: build_square_free(int(m.group(1)))),
    (re.compile(r"^square_taquin(\d)$"), lambda m: build_square_taquin(int(m.group(1)))),
    (re.compile(r"^square_rotation(\d)$"), lambda m: build_square_rotation(int(m.group(1)))),
    (re.compile(r"^square_crystallo(\d)$"), lambda m: build_square_crystallo(int(m.group(1)))),
    (
        re.compile(r"^elephants_reflected_x(\d)$"),
        lambda m: build_reflected_elephants(count=int(m.group(1))),
    ),
    (
        re.compile(r"^elephants_rotating_x(\d)$"),
        lambda m: build_rotating_elephants(count=int(m.group(1))),
    ),
)


def list_games() -> list[str]:
    return list(BUILDERS)


def get_game(game_id: str) -> ActionSpace:
    builder = BUILDERS.get(game_id)
    if builder is not None:
        return builder()
    for pattern, make in _PARAMETRIC:
        m = pattern.match(game_id)
        if m:
            return make(m)
    raise UnknownLabelError(game_id)
