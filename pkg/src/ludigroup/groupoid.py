"""Arrows with sources and targets: partial composition structures.

Arrows compose only when endpoints match, which is the defining difference
from a group; attempting anything else raises :class:`NonComposableError`.
For a composable pair the composite g·h (h applied first) runs from the
source of h to the target of g.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable

from .errors import NonComposableError
from .perm import Permutation, compose as compose_perm, invert as invert_perm


@dataclass(frozen=True)
class GroupoidArrow:
    label: str
    source: Hashable
    target: Hashable
    effect: Permutation | None = None  # optional concrete effect on slots

    def is_identity_arrow(self) -> bool:
        return self.source == self.target and (self.effect is None or self.effect.is_identity())


def identity_arrow(vertex: Hashable, degree: int | None = None) -> GroupoidArrow:
    effect = None if degree is None else Permutation(tuple(range(degree)))
    return GroupoidArrow("1", vertex, vertex, effect)


def compose_arrows(g: GroupoidArrow, h: GroupoidArrow) -> GroupoidArrow:
    """g·h, defined only when s(g) = t(h); h acts first."""
    if g.source != h.target:
        raise NonComposableError(
            f"cannot compose: source of {g.label!r} is {g.source!r} "
            f"but target of {h.label!r} is {h.target!r}"
        )
    if g.effect is None or h.effect is None:
        effect = None
    else:
        effect = compose_perm(g.effect, h.effect)
    label = "1" if (g.source == h.source and effect is not None and effect.is_identity()) else f"{g.label}·{h.label}"
    return GroupoidArrow(label, h.source, g.target, effect)


def invert_arrow(g: GroupoidArrow) -> GroupoidArrow:
    effect = None if g.effect is None else invert_perm(g.effect)
    label = g.label[:-1] if g.label.endswith("'") else g.label + "'"
    return GroupoidArrow(label, g.target, g.source, effect)


def equivalence_groupoid(blocks: list[list[Hashable]]) -> list[GroupoidArrow]:
    """The groupoid of an equivalence relation given by its partition.

    One arrow (x, y) per related pair, with (y,z)·(x,y) = (x,z); inverses are
    the reversed pairs and identities the diagonal pairs.
    """
    arrows = []
    for block in blocks:
        for x in block:
            for y in block:
                arrows.append(GroupoidArrow(f"({x},{y})", x, y))
    return arrows
