"""The 3x3x3 cube on its 48 moving facets.

Facet permutations are derived from integer geometry (facet centres on the
surface of a [-3,3]^3 cube, quarter-turn rotation matrices per face layer)
rather than typed in by hand.  Configurations store the colour of each
facet, which identifies configurations exactly as a player sees them; the
six face centres never move and are omitted.
"""

from __future__ import annotations

from ..spaces import ActionSpace, Move, Universe

# face order fixes the facet numbering and the colour letters
FACES = (
    ("U", (0, 0, 1)),
    ("R", (1, 0, 0)),
    ("F", (0, -1, 0)),
    ("D", (0, 0, -1)),
    ("L", (-1, 0, 0)),
    ("B", (0, 1, 0)),
)


def _facet_coords():
    coords = []
    for _name, normal in FACES:
        basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        e1, e2 = [b for b in basis if sum(abs(x * y) for x, y in zip(b, normal)) == 0]
        for a in (-1, 0, 1):
            for b in (-1, 0, 1):
                coords.append(
                    tuple(3 * n + 2 * (a * x + b * y) for n, x, y in zip(normal, e1, e2))
                )
    return coords


def _rotate_point(p, axis, sign):
    j, k = [(1, 2), (0, 2), (0, 1)][axis]
    q = list(p)
    if sign > 0:
        q[j], q[k] = -p[k], p[j]
    else:
        q[j], q[k] = p[k], -p[j]
    return tuple(q)


def _face_turn(coords, index, axis, side, sign):
    """Slot function of one quarter turn of the face layer on `side`."""
    images = list(range(len(coords)))
    for pt, i in index.items():
        if (side > 0 and pt[axis] >= 2) or (side < 0 and pt[axis] <= -2):
            images[i] = index[_rotate_point(pt, axis, sign)]
    return images


def build_rubik() -> ActionSpace:
    coords = _facet_coords()
    index = {pt: i for i, pt in enumerate(coords)}

    face_axis_side = {"U": (2, 1), "D": (2, -1), "R": (0, 1), "L": (0, -1), "B": (1, 1), "F": (1, -1)}
    raw = {}
    for name, (axis, side) in face_axis_side.items():
        raw[name] = _face_turn(coords, index, axis, side, 1)
        raw[name + "'"] = _face_turn(coords, index, axis, side, -1)

    centers = [i for i in range(54) if all(images[i] == i for images in raw.values())]
    keep = [i for i in range(54) if i not in centers]
    remap = {old: new for new, old in enumerate(keep)}

    moves = {}
    for label, images in raw.items():
        # images is the slot function; the gather table is its inverse
        gather = [0] * 48
        for old in keep:
            gather[remap[images[old]]] = remap[old]
        inverse = label[:-1] if label.endswith("'") else label + "'"
        moves[label] = Move(label=label, inverse_label=inverse, table=bytes(gather))

    colors = bytes(face_id for face_id in range(6) for _ in range(8))
    letters = "".join(name for name, _ in FACES)

    def to_text(state: bytes) -> str:
        return "".join(letters[b] for b in state)

    def from_text(text: str) -> bytes:
        out = bytes(letters.index(ch.upper()) for ch in text.strip())
        if len(out) != 48:
            raise ValueError("expected 48 facet letters")
        return out

    facet_xyz = [coords[i] for i in keep]
    return ActionSpace(
        name="rubik",
        moves=moves,
        start=colors,
        universe=Universe(size=None, description="cube patterns (not enumerated)"),
        to_text=to_text,
        from_text=from_text,
        metadata={
            "family": "rubik",
            "display": "Hungarian cube",
            "archetype": "factorization",
            "scramble_length": 20,
            "instance_from_start": True,
            "faces": letters,
            "render": {"kind": "rubik", "facets": facet_xyz, "faces": letters},
        },
    )
