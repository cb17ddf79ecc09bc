"""Finite permutations of slots 0..n-1.

Composition follows the left-action convention fixed for the whole package:
``compose(p, q)`` maps ``i`` to ``p(q(i))``, so in a product the right factor
acts first.  ``test_conventions.py`` asserts this once for everything else to
lean on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeMismatchError


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0..degree-1}; ``images[i]`` is the image of slot i."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise ValueError("images are not a bijection of 0..n-1")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def packed(self) -> bytes:
        """Byte form consumed by the kernels; degree must fit in a byte."""
        if self.degree > 255:
            raise ValueError("packed permutations support degree <= 255")
        return bytes(self.images)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest slot."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i] or self.images[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(n)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p after q: (p∘q)(i) = p(q(i))."""
    if p.degree != q.degree:
        raise DegreeMismatchError(f"degrees {p.degree} and {q.degree} differ")
    return Permutation(tuple(p.images[i] for i in q.images))


def invert(p: Permutation) -> Permutation:
    out = [0] * p.degree
    for i, j in enumerate(p.images):
        out[j] = i
    return Permutation(tuple(out))


def sign(p: Permutation) -> int:
    """+1 for even permutations, -1 for odd, via cycle parity."""
    par = 0
    for cyc in p.cycles():
        par ^= (len(cyc) - 1) & 1
    return -1 if par else +1


def from_cycles(n: int, cycles) -> Permutation:
    """Permutation on 0..n-1 given as disjoint (or sequential) cycles."""
    images = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            images[a] = b
    return Permutation(tuple(images))


def random_permutation(rng, n: int) -> Permutation:
    items = list(range(n))
    rng.shuffle(items)
    return Permutation(tuple(items))
