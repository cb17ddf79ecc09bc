"""Grid-walk games: compass displacements, the sheep, and the dot-counting
ladybug whose vertical moves pay out the column value.

All four builders use fn moves on small register states; boards are bounded
and moves at the border are simply inapplicable.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..rng import SplitMix64
from ..spaces import ActionSpace, Move, Universe

HEADINGS = "NESO"  # north, east, south, west (Ouest)
DELTAS = {"N": (0, 1), "E": (1, 0), "S": (0, -1), "O": (-1, 0)}
OPPOSITE = {"N": "S", "S": "N", "E": "O", "O": "E"}


# --- free displacement window -------------------------------------------------
def build_displacement(half_width: int = 8, half_height: int = 8) -> ActionSpace:
    """Compass walking on a centred window of the square grid."""
    W, H = half_width, half_height

    def mk(label):
        dx, dy = DELTAS[label]

        def fn(state: bytes) -> bytes | None:
            x, y = state[0] - W, state[1] - H
            nx, ny = x + dx, y + dy
            if not (-W <= nx <= W and -H <= ny <= H):
                return None
            return bytes((nx + W, ny + H))

        return Move(label=label, inverse_label=OPPOSITE[label], fn=fn)

    def iterate():
        for y in range(2 * H + 1):
            for x in range(2 * W + 1):
                yield bytes((x, y))

    def sample(rng: SplitMix64) -> bytes:
        return bytes((rng.randrange(2 * W + 1), rng.randrange(2 * H + 1)))

    def to_text(state: bytes) -> str:
        return f"{state[0] - W},{state[1] - H}"

    def from_text(text: str) -> bytes:
        x, y = (int(p) for p in text.split(","))
        if not (-W <= x <= W and -H <= y <= H):
            raise ValueError("point outside the window")
        return bytes((x + W, y + H))

    return ActionSpace(
        name="displacement",
        moves={lab: mk(lab) for lab in "SONE"},
        start=bytes((W, H)),
        universe=Universe(
            size=(2 * W + 1) * (2 * H + 1),
            iterate=iterate,
            sample=sample,
            description="grid points of a bounded window",
        ),
        to_text=to_text,
        from_text=from_text,
        metadata={
            "family": "grid",
            "display": "grid displacements",
            "archetype": "factorization",
            "render": {"kind": "grid", "width": 2 * W + 1, "height": 2 * H + 1},
        },
    )


# --- sheep ---------------------------------------------------------------------
BARN = 255


@dataclass(frozen=True)
class SheepBoard:
    width: int = 6
    height: int = 6
    obstacles: frozenset = frozenset()
    barn_cell: tuple[int, int] = (5, 3)  # grid cell in front of the door
    barn_heading: str = "E"  # heading that walks from that cell into the barn


def _sheep_moves(board: SheepBoard):
    def in_grid(x, y):
        return 0 <= x < board.width and 0 <= y < board.height

    def free(x, y):
        return in_grid(x, y) and (x, y) not in board.obstacles

    def advance(state: bytes) -> bytes | None:
        x, y, h = state
        if x == BARN:
            return None
        heading = HEADINGS[h]
        if (x, y) == board.barn_cell and heading == board.barn_heading:
            return bytes((BARN, BARN, h))
        dx, dy = DELTAS[heading]
        nx, ny = x + dx, y + dy
        if not free(nx, ny):
            return None
        return bytes((nx, ny, h))

    def back(state: bytes) -> bytes | None:
        x, y, h = state
        heading = HEADINGS[h]
        if x == BARN:
            if heading != board.barn_heading:
                return None
            return bytes((*board.barn_cell, h))
        dx, dy = DELTAS[heading]
        px, py = x - dx, y - dy
        if not free(px, py):
            return None
        return bytes((px, py, h))

    def turn(delta):
        def fn(state: bytes) -> bytes | None:
            x, y, h = state
            if x == BARN:
                return None
            return bytes((x, y, (h + delta) % 4))

        return fn

    moves = {
        "advance": Move("advance", "back", fn=advance),
        "left": Move("left", "right", fn=turn(-1)),
        "right": Move("right", "left", fn=turn(+1)),
    }
    auxiliary = {"back": Move("back", "advance", fn=back)}
    return moves, auxiliary


def _sheep_space(name: str, board: SheepBoard, start: bytes | None, metadata: dict) -> ActionSpace:
    moves, auxiliary = _sheep_moves(board)

    def poses():
        for y in range(board.height):
            for x in range(board.width):
                if (x, y) in board.obstacles:
                    continue
                for h in range(4):
                    yield bytes((x, y, h))

    def iterate():
        yield from poses()
        for h in range(4):
            yield bytes((BARN, BARN, h))

    pose_list: list[bytes] = []

    def sample(rng: SplitMix64) -> bytes:
        if not pose_list:
            pose_list.extend(poses())
        return pose_list[rng.randrange(len(pose_list))]

    cells = board.width * board.height - len(board.obstacles)

    def to_text(state: bytes) -> str:
        if state[0] == BARN:
            return f"barn,{HEADINGS[state[2]]}"
        return f"{state[0] + 1},{state[1] + 1},{HEADINGS[state[2]]}"

    def from_text(text: str) -> bytes:
        parts = text.strip().split(",")
        if parts[0] == "barn":
            return bytes((BARN, BARN, HEADINGS.index(parts[1].upper())))
        x, y, h = int(parts[0]) - 1, int(parts[1]) - 1, HEADINGS.index(parts[2].upper())
        return bytes((x, y, h))

    metadata.setdefault("family", "grid")
    metadata["board"] = board
    metadata["render"] = {
        "kind": "sheep",
        "width": board.width,
        "height": board.height,
        "obstacles": sorted(board.obstacles),
        "barn_cell": board.barn_cell,
        "barn_heading": board.barn_heading,
    }
    return ActionSpace(
        name=name,
        moves=moves,
        auxiliary=auxiliary,
        start=start if start is not None else bytes((0, 0, 0)),
        universe=Universe(
            size=cells * 4 + 4,
            iterate=iterate,
            sample=sample,  # uniform over grid poses (instance starts)
            description="sheep poses (cell, heading) plus in-barn states",
        ),
        to_text=to_text,
        from_text=from_text,
        metadata=metadata,
    )


def build_sheep(
    width: int = 6,
    height: int = 6,
    obstacles=((2, 2), (3, 2), (2, 3)),
    barn_cell=(5, 3),
    barn_heading="E",
    cards: int = 14,
) -> ActionSpace:
    """Card-programmed walk to the barn, blind and card-constrained."""
    board = SheepBoard(width, height, frozenset(tuple(o) for o in obstacles), tuple(barn_cell), barn_heading)
    return _sheep_space(
        "sheep",
        board,
        bytes((0, 0, 0)),
        {
            "display": "sheep",
            "archetype": "factorization",
            "variants": {"blind": True, "constrained": True},
            "win_at": "any",
            "card_budget": cards,
            "target": bytes((BARN, BARN, HEADINGS.index(barn_heading))),
        },
    )


def build_programmed_sheep(width: int = 6, height: int = 6, barn_cell=(3, 5), barn_heading="N") -> ActionSpace:
    """Inverse calculation: given the barn and the move program, pick the start."""
    board = SheepBoard(width, height, frozenset(), tuple(barn_cell), barn_heading)
    return _sheep_space(
        "programmed_sheep",
        board,
        bytes((0, 0, 0)),
        {
            "display": "programmed sheep",
            "archetype": "inverse",
            "win_at": "final",
            "target": bytes((BARN, BARN, HEADINGS.index(barn_heading))),
            "instance_word_length": 7,
            "instance_last_letter": "advance",
        },
    )


# --- ladybug -------------------------------------------------------------------
MAX_DOTS = 250
BOARD = 7


def build_ladybug() -> ActionSpace:
    """Seven-by-seven dot walk: north adds the column value, south pays it.

    Column values run 0 on the leftmost column up to 6 on the rightmost (the
    dice drawn on columns two to seven).  South is impossible when the
    ladybug carries fewer dots than the column value.  Plays as a
    factorization constrained to 16 moves total; the target is the start
    cell carrying 16 dots.
    """

    def mk(label):
        dx, dy = DELTAS[label]

        def fn(state: bytes) -> bytes | None:
            col, row, dots = state
            ncol, nrow = col + dx, row + dy
            if not (0 <= ncol < BOARD and 0 <= nrow < BOARD):
                return None
            if dy > 0:
                ndots = dots + col
                if ndots > MAX_DOTS:
                    return None
            elif dy < 0:
                ndots = dots - col
                if ndots < 0:
                    return None
            else:
                ndots = dots
            return bytes((ncol, nrow, ndots))

        return Move(label=label, inverse_label=OPPOSITE[label], fn=fn)

    def iterate():
        for dots in range(MAX_DOTS + 1):
            for row in range(BOARD):
                for col in range(BOARD):
                    yield bytes((col, row, dots))

    def to_text(state: bytes) -> str:
        return f"{state[0] + 1},{state[1] + 1},{state[2]}"

    def from_text(text: str) -> bytes:
        col, row, dots = (int(p) for p in text.split(","))
        state = (col - 1, row - 1, dots)
        if not all(0 <= v < BOARD for v in state[:2]) or not 0 <= dots <= MAX_DOTS:
            raise ValueError("ladybug state out of range")
        return bytes(state)

    return ActionSpace(
        name="ladybug",
        moves={lab: mk(lab) for lab in "SONE"},
        start=bytes((0, 0, 0)),
        universe=Universe(
            size=BOARD * BOARD * (MAX_DOTS + 1),
            iterate=iterate,
            description="(column, row, dots) registers",
        ),
        to_text=to_text,
        from_text=from_text,
        metadata={
            "family": "grid",
            "display": "ladybug",
            "archetype": "factorization",
            "variants": {"constrained": True},
            "card_budget": 16,
            "target": bytes((0, 0, 16)),
            "column_values": list(range(BOARD)),
            "render": {"kind": "ladybug", "board": BOARD, "dice": list(range(1, 7))},
        },
    )


# --- the walk group behind the ladybug ------------------------------------------
@dataclass(frozen=True)
class WalkElement:
    """Formal composed walk (dx, dy, pay): configuration transformer.

    Acting on (col, row, dots) it yields (col+dx, row+dy, dots + dy·col +
    pay); composition picks up the cross term that makes the group
    2-step nilpotent.
    """

    dx: int = 0
    dy: int = 0
    pay: int = 0

    def __mul__(self, other: "WalkElement") -> "WalkElement":
        # self applied after other
        return WalkElement(
            self.dx + other.dx,
            self.dy + other.dy,
            self.pay + other.pay + other.dx * self.dy,
        )

    def apply(self, state: bytes) -> bytes | None:
        col, row, dots = state
        ncol, nrow = col + self.dx, row + self.dy
        ndots = dots + self.dy * col + self.pay
        if not (0 <= ncol < BOARD and 0 <= nrow < BOARD and 0 <= ndots <= MAX_DOTS):
            return None
        return bytes((ncol, nrow, ndots))


WALK_GENERATORS = {
    "E": WalkElement(1, 0, 0),
    "O": WalkElement(-1, 0, 0),
    "N": WalkElement(0, 1, 0),
    "S": WalkElement(0, -1, 0),
}


def walk_element(labels) -> WalkElement:
    """Compose generator labels in application order."""
    acc = WalkElement()
    for lab in labels:
        acc = WALK_GENERATORS[lab] * acc
    return acc
