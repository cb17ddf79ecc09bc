"""Side-by-side play of two games whose move groups are isomorphic.

The mapping is a bijection between generator labels.  It is validated
exhaustively: both spaces are enumerated, every generator is induced as a
permutation of its space's configuration list, and the subgroup of the
direct product generated by the paired permutations must have the same
order as each factor group.  That holds exactly when the label mapping
extends to a group isomorphism intertwining the two actions.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InvalidSpecError
from ..orbits import orbit_of
from ..spaces import ActionSpace
from ..stabchain import StabilizerChain


def induced_state_tables(space: ActionSpace, states: list[bytes]) -> dict[str, bytes]:
    """Each total generator as a gather table over the enumerated states."""
    index = {s: i for i, s in enumerate(states)}
    out = {}
    for label, move in space.moves.items():
        table = [0] * len(states)
        for i, s in enumerate(states):
            image = move.apply(s)
            if image is None or image not in index:
                raise InvalidSpecError(
                    f"{space.name}: move {label} is not total on the enumerated states"
                )
            table[index[image]] = i  # gather: new[j] = old at preimage
        out[label] = bytes(table)
    return out


@dataclass
class PairedGames:
    left: ActionSpace
    right: ActionSpace
    mapping: dict[str, str]      # left label -> right label
    group_order: int


def build_isomorphic_pair(
    left: ActionSpace, right: ActionSpace, mapping: dict[str, str]
) -> PairedGames:
    """Validate a generator mapping and link the two games.

    Raises InvalidSpecError when the mapping is not a bijection of generator
    labels or fails the intertwining check.
    """
    if sorted(mapping) != sorted(left.moves) or sorted(mapping.values()) != sorted(right.moves):
        raise InvalidSpecError("mapping must be a bijection between the generator sets")

    left_states = sorted(orbit_of(left, left.start))
    right_states = sorted(orbit_of(right, right.start))
    lt = induced_state_tables(left, left_states)
    rt = induced_state_tables(right, right_states)

    left_order = StabilizerChain(list(lt.values())).order()
    right_order = StabilizerChain(list(rt.values())).order()
    combined = [lt[lab] + bytes(b + len(left_states) for b in rt[mapping[lab]]) for lab in left.moves]
    combined_order = StabilizerChain(combined).order()

    if not (left_order == right_order == combined_order):
        raise InvalidSpecError(
            "mapping does not intertwine the actions: group orders "
            f"{left_order} / {right_order} / diagonal {combined_order}"
        )
    return PairedGames(left, right, dict(mapping), left_order)
