"""Deterministic stabilizer chains for permutation groups on byte slots.

Sims's bottom-up construction: verify the deepest level first, and whenever
a Schreier generator fails to sift, add the residue as a strong generator
and drop back down to the level where it stuck.  Base points are chosen
greedily as the first (lowest-index) slot moved by the offending element.

Orders multiply per-level orbit lengths with Python integers, so they stay
exact far beyond 64 bits.  Transversal elements carry words over the strong
generating set (signed 1-based indices into ``strong_tables``, application
order); words over the original input generators are not materialized, as
their length explodes on deep chains.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .errors import MissingSlotRepresentationError
from .spaces import ActionSpace


@dataclass
class _Level:
    base: int
    transversal: dict[int, bytes] = field(default_factory=dict)
    words: dict[int, tuple[int, ...]] = field(default_factory=dict)


class StabilizerChain:
    """Strong generating set with per-level transversals and their words."""

    def __init__(self, generators: list[bytes], base_hint: list[int] | None = None):
        if not generators:
            raise ValueError("need at least one generator")
        self.degree = len(generators[0])
        ident = bytes(range(self.degree))
        self._ident = ident
        self.generators = list(generators)
        self._strong: list[bytes] = []
        self.levels: list[_Level] = []
        for b in base_hint or []:
            self.levels.append(_Level(b))
        for g in generators:
            if len(g) != self.degree:
                raise ValueError("generators must share one degree")
            if g != ident:
                self._add_strong(g)
        self._build()
        self._compute_words()

    # -- construction ------------------------------------------------------
    def _first_moved(self, table: bytes) -> int:
        for i, v in enumerate(table):
            if i != v:
                return i
        raise ValueError("identity has no moved point")

    def _add_strong(self, table: bytes) -> None:
        for lvl in self.levels:
            if table[lvl.base] != lvl.base:
                break
        else:
            self.levels.append(_Level(self._first_moved(table)))
        self._strong.append(table)

    def _level_gens(self, i: int) -> list[bytes]:
        prefix = [lvl.base for lvl in self.levels[:i]]
        return [g for g in self._strong if all(g[b] == b for b in prefix)]

    def _rebuild(self, i: int) -> None:
        lvl = self.levels[i]
        gens = self._level_gens(i)
        tr = {lvl.base: self._ident}
        frontier = [lvl.base]
        while frontier:
            nxt = []
            for pt in frontier:
                u_pt = tr[pt]
                for g in gens:
                    img = g[pt]
                    if img not in tr:
                        tr[img] = kernels.compose(g, u_pt)
                        nxt.append(img)
            frontier = nxt
        lvl.transversal = tr

    def _strip(self, table: bytes, frm: int) -> tuple[bytes, int]:
        for i in range(frm, len(self.levels)):
            lvl = self.levels[i]
            img = table[lvl.base]
            if img == lvl.base:
                continue
            u = lvl.transversal.get(img)
            if u is None:
                return table, i
            table = kernels.compose(kernels.invert(u), table)
        return table, len(self.levels)

    def _build(self) -> None:
        if not self.levels:  # the trivial group
            return
        for i in range(len(self.levels)):
            self._rebuild(i)
        i = len(self.levels) - 1
        while i >= 0:
            self._rebuild(i)
            residue = None
            gens = self._level_gens(i)
            tr = self.levels[i].transversal
            for pt in list(tr):
                u_pt = tr[pt]
                for s in gens:
                    sg = kernels.compose(
                        kernels.invert(tr[s[pt]]), kernels.compose(s, u_pt)
                    )
                    if sg == self._ident:
                        continue
                    h, j = self._strip(sg, i + 1)
                    if h != self._ident:
                        residue = (h, j)
                        break
                if residue:
                    break
            if residue is None:
                i -= 1
                continue
            h, j = residue
            had = len(self.levels)
            self._add_strong(h)
            j = min(j, len(self.levels) - 1)
            for lv in range(i, j + 1):
                self._rebuild(lv)
            if len(self.levels) > had:
                self._rebuild(len(self.levels) - 1)
            i = j

    def _compute_words(self) -> None:
        """Transversal words over strong-generator indices (1-based, signed),
        in application order; a second BFS per level, kept separate so the
        construction never concatenates words."""
        index = {g: k + 1 for k, g in enumerate(self._strong)}
        for i, lvl in enumerate(self.levels):
            gens = self._level_gens(i)
            words = {lvl.base: ()}
            frontier = [lvl.base]
            while frontier:
                nxt = []
                for pt in frontier:
                    for g in gens:
                        img = g[pt]
                        if img not in words:
                            words[img] = words[pt] + (index[g],)
                            nxt.append(img)
                frontier = nxt
            lvl.words = words

    # -- queries -------------------------------------------------------------
    @property
    def base(self) -> list[int]:
        return [lvl.base for lvl in self.levels]

    def strong_tables(self) -> list[bytes]:
        return list(self._strong)

    def order(self) -> int:
        n = 1
        for lvl in self.levels:
            n *= len(lvl.transversal)
        return n

    def orbit_lengths(self) -> list[int]:
        return [len(lvl.transversal) for lvl in self.levels]

    def transversal_words(self, level: int) -> dict[int, tuple[int, ...]]:
        return dict(self.levels[level].words)

    def sift(self, table: bytes) -> bytes:
        """Residue after sifting; identity iff the element is in the group."""
        residue, _ = self._strip(table, 0)
        return residue

    def contains(self, table: bytes) -> bool:
        if len(table) != self.degree:
            return False
        return self.sift(table) == self._ident

    def express(self, table: bytes) -> tuple[int, ...] | None:
        """Application-order word over strong-generator indices equal to
        ``table``; None when the element is not in the group."""
        parts: list[tuple[int, ...]] = []
        for lvl in self.levels:
            img = table[lvl.base]
            if img == lvl.base:
                continue
            u = lvl.transversal.get(img)
            if u is None:
                return None
            parts.append(lvl.words[img])
            table = kernels.compose(kernels.invert(u), table)
        if table != self._ident:
            return None
        word: tuple[int, ...] = ()
        for w in reversed(parts):  # deepest level acts first
            word = word + w
        return word

    def evaluate_strong_word(self, word: tuple[int, ...]) -> bytes:
        acc = self._ident
        for idx in word:
            t = self._strong[abs(idx) - 1]
            if idx < 0:
                t = kernels.invert(t)
            acc = kernels.compose(t, acc)
        return acc

    def random_element(self, rng) -> bytes:
        """Uniform element: one uniform coset representative per level."""
        acc = self._ident
        for lvl in self.levels:
            pts = list(lvl.transversal)
            acc = kernels.compose(acc, lvl.transversal[pts[rng.randrange(len(pts))]])
        return acc


def chain_for_space(space: ActionSpace, base_hint: list[int] | None = None) -> StabilizerChain:
    if not space.has_slot_rep:
        raise MissingSlotRepresentationError(
            f"{space.name}: every generator needs a slot table for chain computations"
        )
    tables, guards = space.slot_tables()
    if any(g for g in guards):
        raise MissingSlotRepresentationError(
            f"{space.name}: guarded (partial) moves have no global slot action"
        )
    return StabilizerChain(tables, base_hint)


def group_order(space: ActionSpace) -> int:
    """Exact order of the group generated by the space's total moves."""
    cached = space.metadata.get("_chain")
    if cached is None:
        cached = chain_for_space(space)
        space.metadata["_chain"] = cached
    return cached.order()


def orbit_count_via_index(space: ActionSpace, total: int | None = None) -> int:
    """total / group order for spaces whose universe is an ambient torsor.

    Exact integer division; a non-divisible result means the torsor premise
    is wrong for this space and raises ValueError.
    """
    if total is None:
        total = space.universe.size
    if total is None:
        raise ValueError(f"{space.name}: universe size unknown")
    if not space.universe.torsor:
        raise ValueError(f"{space.name}: universe is not declared a torsor")
    order = group_order(space)
    count, rem = divmod(total, order)
    if rem:
        raise ValueError(
            f"{space.name}: group order {order} does not divide universe size {total}"
        )
    return count
