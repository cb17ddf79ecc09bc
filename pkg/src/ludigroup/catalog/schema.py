"""Game-definition JSON: export, validation, and import.

Slot-backed generators serialize completely (gather table plus guards);
register-machine generators serialize by name and are reconstructed from
the catalog builder, with the definition acting as a cross-check.  Unknown
games whose generators are all slot-backed can be imported directly as
custom games.
"""

from __future__ import annotations

import json

import jsonschema

from ..errors import InvalidSpecError
from ..spaces import ActionSpace, Move, Universe

GAME_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["name", "family", "generators", "start"],
    "properties": {
        "name": {"type": "string"},
        "family": {"type": "string"},
        "display": {"type": "string"},
        "archetype": {"type": "string"},
        "start": {"type": "string", "description": "start configuration, text form"},
        "generators": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["label", "inverse"],
                "properties": {
                    "label": {"type": "string"},
                    "inverse": {"type": "string"},
                    "slot_table": {
                        "type": ["array", "null"],
                        "items": {"type": "integer", "minimum": 0},
                    },
                    "guards": {
                        "type": "array",
                        "items": {
                            "type": "array",
                            "prefixItems": [{"type": "integer"}, {"type": "integer"}],
                        },
                    },
                    "rule": {"type": ["string", "null"]},
                },
            },
        },
        "universe": {
            "type": "object",
            "properties": {
                "size": {"type": ["integer", "string", "null"]},
                "torsor": {"type": "boolean"},
            },
        },
        "render": {"type": "object"},
        "win_at": {"type": "string", "enum": ["final", "any"]},
        "card_budget": {"type": ["integer", "object", "null"]},
        "components": {"type": "array", "items": {"type": "string"}},
    },
}


def game_definition(space: ActionSpace) -> dict:
    """JSON-able definition of a catalog game."""
    gens = []
    for move in space.moves.values():
        gens.append(
            {
                "label": move.label,
                "inverse": move.inverse_label,
                "slot_table": list(move.table) if move.table is not None else None,
                "guards": [list(g) for g in move.guards],
                "rule": None if move.table is not None else f"native:{space.name}/{move.label}",
            }
        )
    size = space.universe.size
    definition = {
        "name": space.name,
        "family": space.metadata.get("family", "custom"),
        "display": space.metadata.get("display", space.name),
        "archetype": space.metadata.get("archetype", "factorization"),
        "start": space.to_text(space.start),
        "generators": gens,
        "universe": {
            "size": size if size is None or size < 2**53 else str(size),
            "torsor": space.universe.torsor,
        },
        "render": space.metadata.get("render", {}),
    }
    if "win_at" in space.metadata:
        definition["win_at"] = space.metadata["win_at"]
    if "card_budget" in space.metadata:
        definition["card_budget"] = space.metadata["card_budget"]
    if "components" in space.metadata:
        definition["components"] = [cid for cid, _ in space.metadata["components"]]
    return definition


def validate_definition(data: dict) -> None:
    try:
        jsonschema.validate(data, GAME_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise InvalidSpecError(f"bad game definition: {exc.message}") from None


def load_definition(data: dict) -> ActionSpace:
    """Rebuild a space from a definition.

    Known catalog names are rebuilt by their builder and checked against the
    serialized generators; unknown all-slot definitions build a custom
    space.
    """
    from . import get_game

    validate_definition(data)
    try:
        space = get_game(data["name"])
    except KeyError:
        space = None
    if space is not None:
        mine = game_definition(space)
        if mine["generators"] != data["generators"]:
            raise InvalidSpecError(f"definition of {data['name']} does not match the catalog")
        return space

    moves = {}
    for g in data["generators"]:
        if g.get("slot_table") is None:
            raise InvalidSpecError(
                f"cannot import rule-based generator {g['label']} of unknown game"
            )
        moves[g["label"]] = Move(
            label=g["label"],
            inverse_label=g["inverse"],
            table=bytes(g["slot_table"]),
            guards=tuple(tuple(x) for x in g.get("guards", [])),
        )
    for move in moves.values():
        if move.inverse_label not in moves:
            raise InvalidSpecError(f"{move.label}: inverse {move.inverse_label} missing")
    degree = len(next(iter(moves.values())).table)
    glyphs = "".join(chr(ord("A") + i) for i in range(degree))

    def to_text(state: bytes) -> str:
        return "".join(glyphs[b] if b < len(glyphs) else "?" for b in state)

    def from_text(text: str) -> bytes:
        return bytes(glyphs.index(ch) for ch in text.strip().upper())

    size = data.get("universe", {}).get("size")
    if isinstance(size, str):
        size = int(size)
    return ActionSpace(
        name=data["name"],
        moves=moves,
        start=from_text(data["start"]),
        universe=Universe(size=size, torsor=data.get("universe", {}).get("torsor", False)),
        to_text=to_text,
        from_text=from_text,
        metadata={
            "family": data.get("family", "custom"),
            "display": data.get("display", data["name"]),
            "archetype": data.get("archetype", "factorization"),
            "render": data.get("render", {}),
        },
    )


def dumps(space: ActionSpace) -> str:
    return json.dumps(game_definition(space), indent=2, sort_keys=True)


def loads(text: str) -> ActionSpace:
    return load_definition(json.loads(text))
