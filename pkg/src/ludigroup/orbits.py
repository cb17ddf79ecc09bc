"""Orbit machinery: closures, partitions, transversals.

Closures take generators together with their inverses (the same set for
self-paired move sets), so orbit membership is symmetric even for partial
moves.  Enumeration order is deterministic: frontier in discovery order,
moves in declaration order.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import NodeCapExceededError
from .spaces import DEFAULT_NODE_CAP, ActionSpace


@dataclass
class OrbitPartition:
    """Complete orbit decomposition of an enumerated configuration set."""

    orbit_of: dict[bytes, int]
    sizes: list[int]
    representatives: list[bytes]  # lexicographically smallest encoding each

    @property
    def count(self) -> int:
        return len(self.sizes)


def orbit_distances(
    space: ActionSpace,
    u0: bytes,
    cap: int = DEFAULT_NODE_CAP,
    max_depth: int = -1,
    want_parents: bool = False,
):
    """BFS distances from u0; (dist, parents, truncated).

    The closure alphabet is generators plus their inverses, so membership in
    the result is symmetric: v in orbit(u) iff u in orbit(v).
    """
    moves = space.closure_moves()
    if all(m.table is not None for m in moves):
        tables = [m.table for m in moves]
        guards = [m.guards for m in moves]
        return kernels.bfs_slot(u0, tables, guards, cap, max_depth, want_parents)
    dist = {u0: 0}
    parents = {} if want_parents else None
    frontier = [u0]
    depth = 0
    truncated = False
    while frontier and not truncated:
        if 0 <= max_depth <= depth:
            break
        depth += 1
        nxt = []
        for state in frontier:
            for mi, move in enumerate(moves):
                new = move.apply(state)
                if new is None or new in dist:
                    continue
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


def orbit_of(space: ActionSpace, u0: bytes, cap: int = DEFAULT_NODE_CAP) -> list[bytes]:
    """All configurations reachable from u0, in deterministic BFS order."""
    dist, _, truncated = orbit_distances(space, u0, cap)
    if truncated:
        raise NodeCapExceededError(cap)
    return list(dist)


def orbit_partition(space: ActionSpace, cap: int = DEFAULT_NODE_CAP) -> OrbitPartition:
    """Partition the whole universe into orbits.

    Requires an enumerable universe within the cap; never truncates
    silently.
    """
    size = space.universe.size
    if size is not None and size > cap:
        raise NodeCapExceededError(cap)
    orbit_ids: dict[bytes, int] = {}
    sizes: list[int] = []
    reps: list[bytes] = []
    seen_total = 0
    for u in space.enumerate_universe():
        if u in orbit_ids:
            continue
        oid = len(sizes)
        members, _, truncated = orbit_distances(space, u, cap - seen_total)
        if truncated:
            raise NodeCapExceededError(cap)
        rep = u
        for m in members:
            orbit_ids[m] = oid
            if m < rep:
                rep = m
        sizes.append(len(members))
        reps.append(rep)
        seen_total += len(members)
    return OrbitPartition(orbit_ids, sizes, reps)


def is_transitive(space: ActionSpace, cap: int = DEFAULT_NODE_CAP) -> bool:
    return orbit_partition(space, cap).count == 1


def transversal(partition: OrbitPartition) -> list[bytes]:
    """One representative per orbit: the lexicographically smallest encoding."""
    return list(partition.representatives)


def same_orbit(space: ActionSpace, u: bytes, v: bytes, cap: int = DEFAULT_NODE_CAP) -> bool:
    if u == v:
        return True
    dist, _, truncated = orbit_distances(space, u, cap)
    if truncated:
        raise NodeCapExceededError(cap)
    return v in dist
