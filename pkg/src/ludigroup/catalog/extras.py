"""Small catalog entries: the digit lock, the two-lamp panel, the marked
square, table-backed toy groups, and the prime-factorization playground.
"""

from __future__ import annotations

import struct

from ..rng import SplitMix64
from ..spaces import ActionSpace, Move, Universe
from ..tables import STATEMENT_FORMS, klein_inrc_table, rotation_table
from ._build import cycle_gather, glyph_codecs, involution


# --- three-digit lock ---------------------------------------------------------
def build_lock(wheels: int = 3) -> ActionSpace:
    """Combination lock with reveal components "digit j sits at wheel i"."""

    def mk(i, delta):
        def fn(state: bytes) -> bytes | None:
            out = bytearray(state)
            out[i] = (state[i] + delta) % 10
            return bytes(out)

        sign = "+" if delta > 0 else "-"
        other = "-" if delta > 0 else "+"
        return Move(label=f"w{i + 1}{sign}", inverse_label=f"w{i + 1}{other}", fn=fn)

    moves = {}
    for i in range(wheels):
        for delta in (1, -1):
            m = mk(i, delta)
            moves[m.label] = m

    def iterate():
        for v in range(10 ** wheels):
            yield bytes(int(d) for d in str(v).zfill(wheels))

    def sample(rng: SplitMix64) -> bytes:
        return bytes(rng.randrange(10) for _ in range(wheels))

    components = []
    for i in range(wheels):
        for d in range(10):
            components.append(
                (f"wheel{i + 1}={d}", (lambda i=i, d=d: lambda s: s[i] == d)())
            )

    return ActionSpace(
        name="lock" if wheels == 3 else f"lock{wheels}",
        moves=moves,
        start=bytes(wheels),
        universe=Universe(
            size=10 ** wheels,
            iterate=iterate,
            sample=sample,
            torsor=True,
            description=f"{wheels}-digit codes",
        ),
        to_text=lambda s: "".join(str(b) for b in s),
        from_text=lambda t: bytes(int(ch) for ch in t.strip()),
        metadata={
            "family": "extras",
            "display": "digit lock",
            "archetype": "revealed",
            "components": components,
            "render": {"kind": "lock", "wheels": wheels},
        },
    )


# --- two identical lamps ---------------------------------------------------------
def build_two_lamps() -> ActionSpace:
    """Toggle the left lamp, or swap the two lamps."""

    def toggle(state: bytes) -> bytes | None:
        return bytes((1 - state[0], state[1]))

    moves = {
        "toggle": Move("toggle", "toggle", fn=toggle),
        "swap": involution("swap", cycle_gather(2, (0, 1))),
    }

    def iterate():
        for a in (0, 1):
            for b in (0, 1):
                yield bytes((a, b))

    return ActionSpace(
        name="two_lamps",
        moves=moves,
        start=bytes((0, 0)),
        universe=Universe(size=4, iterate=iterate, sample=lambda rng: bytes((rng.randrange(2), rng.randrange(2)))),
        to_text=lambda s: "".join("*" if b else "o" for b in s),
        from_text=lambda t: bytes(1 if ch == "*" else 0 for ch in t.strip()),
        metadata={
            "family": "extras",
            "display": "two lamps",
            "archetype": "factorization",
            "render": {"kind": "lamps", "count": 2},
        },
    )


# --- marked square -----------------------------------------------------------------
def build_square_symmetries(generating: str = "standard") -> ActionSpace:
    """An asymmetric square picture under quarter-turns and mirrors.

    ``generating`` picks the generator set: "standard" is quarter-turns plus
    the vertical mirror; "mirrors" is the vertical and diagonal mirrors
    (two involutions whose product is a quarter turn).
    """
    # corners clockwise from top-left: 0 1 / 3 2
    rot_cw = cycle_gather(4, (0, 1, 2, 3))
    rot_ccw = cycle_gather(4, (3, 2, 1, 0))
    mir_v = cycle_gather(4, (0, 1), (2, 3))  # left-right mirror
    mir_d = cycle_gather(4, (1, 3))          # main-diagonal mirror

    if generating == "standard":
        moves = [
            Move("rot+", "rot-", table=rot_cw),
            Move("rot-", "rot+", table=rot_ccw),
            involution("mirV", mir_v),
        ]
    elif generating == "mirrors":
        moves = [involution("mirV", mir_v), involution("mirD", mir_d)]
    else:
        raise ValueError("generating must be 'standard' or 'mirrors'")

    to_text, from_text = glyph_codecs("PQRS")

    space = ActionSpace(
        name="square_symmetries" if generating == "standard" else "square_mirrors",
        moves={m.label: m for m in moves},
        start=bytes(range(4)),
        universe=Universe(size=None, description="the 8 square placements"),
        to_text=to_text,
        from_text=from_text,
        metadata={
            "family": "extras",
            "display": "marked square",
            "archetype": "factorization",
            "render": {"kind": "square_marked"},
        },
    )

    def iterate(space=space):
        from ..orbits import orbit_of

        yield from sorted(orbit_of(space, space.start))

    space.universe = Universe(size=8, iterate=iterate, description="the 8 square placements")
    return space


# --- table-backed toy groups ------------------------------------------------------
def _table_space(name, display, table, forms, render):
    """A group table acting on a small configuration list via fn moves."""
    labels = [x for x in table.labels if x != table.identity]

    def mk(label):
        def fn(state: bytes) -> bytes | None:
            return bytes((forms[label][state[0]],))

        return Move(label=label, inverse_label=table.inverse_of(label), fn=fn)

    moves = {lab: mk(lab) for lab in labels}
    nstates = len(next(iter(forms.values())))

    return ActionSpace(
        name=name,
        moves=moves,
        start=bytes((0,)),
        universe=Universe(
            size=nstates,
            iterate=lambda: (bytes((i,)) for i in range(nstates)),
            sample=lambda rng: bytes((rng.randrange(nstates),)),
            torsor=True,
        ),
        to_text=lambda s: str(s[0]),
        from_text=lambda t: bytes((int(t.strip()),)),
        metadata={
            "family": "tables",
            "display": display,
            "archetype": "factorization",
            "table": table,
            "render": render,
        },
    )


def build_rotation_group() -> ActionSpace:
    """The 3-element rotation group acting on the triangle's 3 positions."""
    table = rotation_table()
    forms = {
        "cw": {0: 1, 1: 2, 2: 0},
        "ccw": {0: 2, 1: 0, 2: 1},
    }
    space = _table_space(
        "z3", "triangle rotations", table, forms, {"kind": "rotor", "states": 3}
    )
    space.metadata["state_names"] = ["0", "1/3", "2/3"]
    return space


def build_inrc() -> ActionSpace:
    """The statement-symmetry group acting on the four statement forms."""
    table = klein_inrc_table()
    # form ids: 0 base, 1 swapped, 2 negated, 3 both
    def act(swap, neg):
        return {i: (i ^ (1 if swap else 0) ^ (2 if neg else 0)) for i in range(4)}

    forms = {"N": act(False, True), "R": act(True, False), "C": act(True, True)}
    space = _table_space(
        "inrc", "statement symmetries", table, forms, {"kind": "statements"}
    )
    order = [(False, False), (True, False), (False, True), (True, True)]
    space.metadata["state_names"] = [STATEMENT_FORMS[k] for k in order]
    return space


# --- prime factorization playground --------------------------------------------------
def build_factor(primes: tuple[int, ...] = (2, 3, 5, 7), bound: int = 100000) -> ActionSpace:
    """Positive integers under multiplication by fixed primes.

    A monoid rather than a group: the playable generators are the
    multiplications; divisions exist only as hidden inverses so searches can
    walk backwards.
    """

    def pack(v: int) -> bytes:
        return struct.pack(">I", v)

    def unpack(state: bytes) -> int:
        return struct.unpack(">I", state)[0]

    moves = {}
    auxiliary = {}
    for p in primes:
        def mul(state: bytes, p=p) -> bytes | None:
            v = unpack(state) * p
            return pack(v) if v <= bound else None

        def div(state: bytes, p=p) -> bytes | None:
            v = unpack(state)
            return pack(v // p) if v % p == 0 else None

        moves[f"x{p}"] = Move(f"x{p}", f"d{p}", fn=mul)
        auxiliary[f"d{p}"] = Move(f"d{p}", f"x{p}", fn=div)

    return ActionSpace(
        name="factor",
        moves=moves,
        auxiliary=auxiliary,
        start=pack(1),
        universe=Universe(
            size=bound,
            iterate=lambda: (pack(v) for v in range(1, bound + 1)),
            sample=lambda rng: pack(1 + rng.randrange(bound)),
            description=f"integers 1..{bound}",
        ),
        to_text=lambda s: str(unpack(s)),
        from_text=lambda t: pack(int(t.strip())),
        metadata={
            "family": "extras",
            "display": "prime factorization",
            "archetype": "mental",
            "primes": list(primes),
            "instance_word_length": 4,
            "instance_from_start": True,
            "render": {"kind": "number"},
        },
    )
