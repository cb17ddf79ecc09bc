"""Pure-Python kernels for byte-packed permutations and slot-move BFS.

States and permutation tables are `bytes` of equal length (degree <= 255).
A table t is a gather map: applying t to state s yields out[i] = s[t[i]].
`bytes.translate` does exactly that gather at C speed once the table is
padded to 256 entries, so even this fallback is reasonably quick.

The compiled twin in ``_kernels.pyx`` implements the same contract; both
must produce bit-identical results (including dict insertion order, which
callers rely on for deterministic orbit enumeration).
"""

from __future__ import annotations

IMPLEMENTATION = "python"


def compose(p: bytes, q: bytes) -> bytes:
    """(p∘q)[i] = p[q[i]] — q acts first when read as slot functions."""
    return q.translate(p + bytes(256 - len(p)))


def invert(p: bytes) -> bytes:
    out = bytearray(len(p))
    for i, j in enumerate(p):
        out[j] = i
    return bytes(out)


def permute_state(table: bytes, state: bytes) -> bytes:
    """Gather: out[i] = state[table[i]]."""
    return table.translate(state + bytes(256 - len(state)))


def _pad(state: bytes) -> bytes:
    return state + bytes(256 - len(state))


def bfs_slot(
    start: bytes,
    tables: list[bytes],
    pres: list[tuple[tuple[int, int], ...]],
    cap: int,
    max_depth: int = -1,
    want_parents: bool = False,
):
    """Breadth-first closure of `start` under guarded slot moves.

    Returns (dist, parents, truncated): `dist` maps each discovered state to
    its BFS depth in discovery order; `parents` maps state -> (previous
    state, move index) when requested; `truncated` is True when the node cap
    stopped the search before closure.

    A move applies when every (index, value) guard matches the state.  Moves
    are tried in declaration order and the frontier is processed in
    discovery order, which makes the enumeration deterministic.
    """
    dist: dict[bytes, int] = {start: 0}
    parents: dict[bytes, tuple[bytes, int]] | None = {} if want_parents else None
    frontier = [start]
    depth = 0
    truncated = False
    pad = bytes(256 - len(start))
    while frontier and not truncated:
        if max_depth >= 0 and depth >= max_depth:
            break
        depth += 1
        nxt: list[bytes] = []
        for state in frontier:
            padded_state = state + pad
            for mi, table in enumerate(tables):
                ok = True
                for idx, val in pres[mi]:
                    if state[idx] != val:
                        ok = False
                        break
                if not ok:
                    continue
                new = table.translate(padded_state)
                if new not in dist:
                    if len(dist) >= cap:
                        truncated = True
                        break
                    dist[new] = depth
                    if want_parents:
                        parents[new] = (state, mi)
                    nxt.append(new)
            if truncated:
                break
        frontier = nxt
    return dist, parents, truncated
