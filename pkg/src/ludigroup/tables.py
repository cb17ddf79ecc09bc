"""Finite multiplication tables and the small catalog groups given by one.

The rotation group of order three and the four-element statement-symmetry
group are constructed here, together with generic helpers (cyclic tables,
exhaustive axiom checking, Cayley closure of concrete generators).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UnknownLabelError
from .perm import Permutation, compose, invert


@dataclass
class GroupTable:
    """Total multiplication table of a finite group.

    product[(x, y)] is the product x·y; all three axioms can be checked by
    exhaustion with :meth:`check_axioms`.
    """

    labels: tuple[str, ...]
    product: dict[tuple[str, str], str]
    inverse: dict[str, str]
    identity: str
    display: dict[str, str] = field(default_factory=dict)

    def product_of(self, x: str, y: str) -> str:
        try:
            return self.product[(x, y)]
        except KeyError:
            raise UnknownLabelError(f"{x!r}·{y!r}") from None

    def inverse_of(self, x: str) -> str:
        try:
            return self.inverse[x]
        except KeyError:
            raise UnknownLabelError(x) from None

    @property
    def order(self) -> int:
        return len(self.labels)

    def glyph(self, x: str) -> str:
        return self.display.get(x, x)

    def is_commutative(self) -> bool:
        return all(
            self.product[(x, y)] == self.product[(y, x)]
            for x in self.labels
            for y in self.labels
        )

    def check_axioms(self) -> None:
        """Raise ValueError if any group axiom fails (exhaustive check)."""
        labels = self.labels
        for x in labels:
            for y in labels:
                if (x, y) not in self.product:
                    raise ValueError(f"product {x}·{y} missing")
        for x in labels:
            for y in labels:
                for z in labels:
                    left = self.product[(self.product[(x, y)], z)]
                    right = self.product[(x, self.product[(y, z)])]
                    if left != right:
                        raise ValueError(f"associativity fails on ({x},{y},{z})")
        for x in labels:
            if self.product[(x, self.identity)] != x or self.product[(self.identity, x)] != x:
                raise ValueError(f"identity fails on {x}")
            inv = self.inverse[x]
            if self.product[(x, inv)] != self.identity or self.product[(inv, x)] != self.identity:
                raise ValueError(f"inverse fails on {x}")


def cyclic_table(n: int, labels: tuple[str, ...] | None = None) -> GroupTable:
    """Addition modulo n as a table; labels default to "0".."n-1"."""
    if labels is None:
        labels = tuple(str(i) for i in range(n))
    if len(labels) != n:
        raise ValueError("need one label per residue")
    product = {
        (labels[a], labels[b]): labels[(a + b) % n] for a in range(n) for b in range(n)
    }
    inverse = {labels[a]: labels[(-a) % n] for a in range(n)}
    return GroupTable(labels, product, inverse, labels[0])


def rotation_table() -> GroupTable:
    """The three-element group of triangle rotations.

    Elements: identity "1", clockwise third-turn "cw", counterclockwise
    third-turn "ccw" (displayed ·, ↷, ↶).  Isomorphic to addition mod 3.
    """
    table = cyclic_table(3, ("1", "cw", "ccw"))
    table.display = {"1": "·", "cw": "↷", "ccw": "↶"}
    return table


# Statement forms acted on by the four logical transformations: a statement
# "X implies Y" is encoded as (swapped, negated) booleans relative to the
# base form "A implies B".
STATEMENT_FORMS = {
    (False, False): "A implies B",
    (True, False): "B implies A",
    (False, True): "A does not imply B",
    (True, True): "B does not imply A",
}


def klein_inrc_table() -> GroupTable:
    """The Klein four-group I, N, R, C of statement transformations.

    I is the identity, N negates, R swaps the statement around (the
    converse), and C does both.  Commutative; every element is its own
    inverse.
    """
    labels = ("I", "N", "R", "C")
    # encode as (swap, negate) bit pairs; product = xor
    bits = {"I": (0, 0), "N": (0, 1), "R": (1, 0), "C": (1, 1)}
    names = {v: k for k, v in bits.items()}
    product = {
        (x, y): names[(bits[x][0] ^ bits[y][0], bits[x][1] ^ bits[y][1])]
        for x in labels
        for y in labels
    }
    inverse = {x: x for x in labels}
    return GroupTable(labels, product, inverse, "I")


def inrc_apply(transform: str, statement: tuple[bool, bool]) -> tuple[bool, bool]:
    """Act with I/N/R/C on a statement form (swapped, negated)."""
    swapped, negated = statement
    if transform in ("R", "C"):
        swapped = not swapped
    if transform in ("N", "C"):
        negated = not negated
    if transform not in ("I", "N", "R", "C"):
        raise UnknownLabelError(transform)
    return (swapped, negated)


def table_from_generators(gens: dict[str, Permutation], max_order: int = 100000) -> GroupTable:
    """Cayley closure of concrete generators into an abstract table.

    Element names are canonical shortest words over the generator labels
    ("1" for the identity).  Intended for small groups; raises if the closure
    exceeds ``max_order``.
    """
    if not gens:
        raise ValueError("need at least one generator")
    degree = next(iter(gens.values())).degree
    ident = Permutation(tuple(range(degree)))
    names: dict[Permutation, str] = {ident: "1"}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for label, h in gens.items():
                prod = compose(h, g)
                if prod not in names:
                    base = names[g]
                    names[prod] = label if base == "1" else f"{label}·{base}"
                    nxt.append(prod)
                    if len(names) > max_order:
                        raise ValueError("group closure exceeded max_order")
        frontier = nxt
    labels = tuple(names[p] for p in names)
    by_name = {v: k for k, v in names.items()}
    product = {}
    for x in labels:
        for y in labels:
            product[(x, y)] = names[compose(by_name[x], by_name[y])]
    inverse = {x: names[invert(by_name[x])] for x in labels}
    return GroupTable(labels, product, inverse, "1")
