"""Word factorization, solvability decisions, inverse calculation, refereeing.

``factorize`` runs a meet-in-the-middle bidirectional BFS (backward search
walks inverse moves with their own applicability domains), then rebuilds the
lexicographically-first minimal word by a greedy walk against the backward
distance ball.  When that ball does not fit the node cap the deterministic
meet path is returned instead — still minimal length, tie-broken by
expansion order only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InapplicableMoveError, NodeCapExceededError, NoSolutionError
from .orbits import orbit_distances
from .spaces import DEFAULT_NODE_CAP, ActionSpace, gather_table_between
from .words import Word


@dataclass
class Trace:
    """Referee record: every intermediate configuration of a played word."""

    states: list[bytes]
    first_inapplicable: int | None  # letter index, or None when all applied

    @property
    def final(self) -> bytes:
        return self.states[-1]

    def reached(self, target: bytes) -> bool:
        return target in self.states

    def reached_at_end(self, target: bytes) -> bool:
        return self.first_inapplicable is None and self.final == target


def verify_word(space: ActionSpace, u0: bytes, word: Word) -> Trace:
    """Apply a word letter by letter; stop at the first inapplicable step."""
    states = [u0]
    current = u0
    for i, (label, exp) in enumerate(word.letters):
        lab = label if exp > 0 else space.inverse_label(label)
        new = space.move(lab).apply(current)
        if new is None:
            return Trace(states, i)
        current = new
        states.append(current)
    return Trace(states, None)


def _inverse_moves(space: ActionSpace):
    """(inverse move, forward label) pairs in declaration order."""
    out = []
    for label, move in space.moves.items():
        out.append((space.move(move.inverse_label), label))
    return out


def _backward_ball(space: ActionSpace, uf: bytes, radius: int, cap: int):
    """Distances to uf within the given radius: BFS over inverse moves."""
    dist = {uf: 0}
    frontier = [uf]
    inv_moves = _inverse_moves(space)
    depth = 0
    while frontier and depth < radius:
        depth += 1
        nxt = []
        for state in frontier:
            for inv_move, _fwd in inv_moves:
                new = inv_move.apply(state)
                if new is None or new in dist:
                    continue
                if len(dist) >= cap:
                    return dist, True
                dist[new] = depth
                nxt.append(new)
        frontier = nxt
    return dist, False


def factorize(
    space: ActionSpace,
    u0: bytes,
    uf: bytes,
    max_depth: int | None = None,
    node_cap: int = DEFAULT_NODE_CAP,
) -> Word:
    """Minimal word w with w·u0 = uf; ties broken toward the earliest labels.

    Raises NoSolutionError when uf is provably outside u0's orbit (mission
    impossible) and NodeCapExceededError when the search budget runs out
    first.
    """
    if u0 == uf:
        return Word()
    depth_cap = max_depth if max_depth is not None else -1

    fwd = {u0: (0, None, None)}   # state -> (dist, parent, label)
    bwd = {uf: (0, None, None)}   # state -> (dist, next, label applied at state)
    fwd_frontier, bwd_frontier = [u0], [uf]
    fwd_depth = bwd_depth = 0
    moves = list(space.moves.items())
    inv_moves = _inverse_moves(space)
    best: tuple[int, bytes] | None = None

    def nodes() -> int:
        return len(fwd) + len(bwd)

    while True:
        if best is not None and fwd_depth + bwd_depth + 1 > best[0]:
            break
        if not fwd_frontier and not bwd_frontier:
            break
        if 0 <= depth_cap <= fwd_depth + bwd_depth and best is None:
            raise NoSolutionError(
                f"no word of length <= {depth_cap} reaches the target"
            )
        expand_fwd = bool(fwd_frontier) and (
            not bwd_frontier or len(fwd_frontier) <= len(bwd_frontier)
        )
        if expand_fwd:
            fwd_depth += 1
            nxt = []
            for state in fwd_frontier:
                for label, move in moves:
                    new = move.apply(state)
                    if new is None or new in fwd:
                        continue
                    if nodes() >= node_cap:
                        raise NodeCapExceededError(node_cap)
                    fwd[new] = (fwd_depth, state, label)
                    if new in bwd:
                        total = fwd_depth + bwd[new][0]
                        if best is None or total < best[0]:
                            best = (total, new)
                    nxt.append(new)
            fwd_frontier = nxt
        else:
            bwd_depth += 1
            nxt = []
            for state in bwd_frontier:
                for inv_move, fwd_label in inv_moves:
                    new = inv_move.apply(state)
                    if new is None or new in bwd:
                        continue
                    if nodes() >= node_cap:
                        raise NodeCapExceededError(node_cap)
                    bwd[new] = (bwd_depth, state, fwd_label)
                    if new in fwd:
                        total = bwd_depth + fwd[new][0]
                        if best is None or total < best[0]:
                            best = (total, new)
                    nxt.append(new)
            bwd_frontier = nxt

    if best is None:
        raise NoSolutionError("target lies in a different orbit: mission impossible")
    d = best[0]
    if max_depth is not None and d > max_depth:
        raise NoSolutionError(f"no word of length <= {max_depth} reaches the target")

    word = _lex_minimal_word(space, u0, uf, d, node_cap)
    if word is not None:
        return word
    return _meet_word(space, best[1], fwd, bwd)


def _lex_minimal_word(
    space: ActionSpace, u0: bytes, uf: bytes, d: int, cap: int
) -> Word | None:
    """Greedy reconstruction against the backward distance ball; None if the
    ball exceeds the cap."""
    ball, truncated = _backward_ball(space, uf, d, cap)
    if truncated:
        return None
    letters = []
    current = u0
    remaining = d
    while remaining:
        for label, move in space.moves.items():
            new = move.apply(current)
            if new is not None and ball.get(new) == remaining - 1:
                letters.append((label, 1))
                current = new
                remaining -= 1
                break
        else:  # pragma: no cover - ball radius d always contains a step
            raise AssertionError("backward ball inconsistent")
    return Word(tuple(letters))


def _meet_word(space: ActionSpace, meet: bytes, fwd: dict, bwd: dict) -> Word:
    letters = []
    state = meet
    while True:
        _, parent, label = fwd[state]
        if parent is None:
            break
        letters.append((label, 1))
        state = parent
    letters.reverse()
    state = meet
    while True:
        _, nxt, label = bwd[state]
        if nxt is None:
            break
        letters.append((label, 1))
        state = nxt
    return Word(tuple(letters))


def decide_solvable(
    space: ActionSpace, u0: bytes, uf: bytes, node_cap: int = DEFAULT_NODE_CAP
) -> bool:
    """True iff uf lies in the orbit of u0 (otherwise: mission impossible).

    Uses, in order of preference: exact stabilizer-chain membership on
    torsor spaces, a per-game exact solvability rule from the space
    metadata, and full orbit enumeration.
    """
    if u0 == uf:
        return True
    if space.universe.torsor and space.has_slot_rep:
        quotient = gather_table_between(u0, uf)
        if quotient is not None:
            from .stabchain import chain_for_space

            chain = space.metadata.get("_chain")
            if chain is None:
                chain = chain_for_space(space)
                space.metadata["_chain"] = chain
            return chain.contains(quotient)
    rule = space.metadata.get("solvability_rule")
    if rule is not None:
        return rule(u0, uf)
    dist, _, truncated = orbit_distances(space, u0, node_cap)
    if uf in dist:
        return True
    if truncated:
        raise NodeCapExceededError(node_cap)
    return False


def solve_inverse_calculation(space: ActionSpace, uf: bytes, word: Word) -> bytes:
    """The unique start u with word·u = uf, found by reverse application.

    Walks the reversed word through inverse moves; raises
    InapplicableMoveError when some inverse step leaves the domain.
    """
    current = uf
    for label, exp in reversed(word.letters):
        lab = space.inverse_label(label) if exp > 0 else label
        new = space.move(lab).apply(current)
        if new is None:
            raise InapplicableMoveError(lab, "while stepping backwards")
        current = new
    return current


def naive_reversal(space: ActionSpace, uf: bytes, word: Word) -> bytes | None:
    """The common wrong answer: inverses applied without reversing the order.

    Returned for pedagogy next to the correct start; None when some step is
    inapplicable.
    """
    current = uf
    for label, exp in word.letters:
        lab = space.inverse_label(label) if exp > 0 else label
        current = space.move(lab).apply(current)
        if current is None:
            return None
    return current
