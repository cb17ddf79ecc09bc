"""Compiled and pure kernels must agree bit-for-bit."""

import random

from ludigroup import _kernels_py as pure
from ludigroup import kernels


def rand_perm_bytes(rnd, n):
    xs = list(range(n))
    rnd.shuffle(xs)
    return bytes(xs)


def test_selected_kernel_reports_implementation():
    assert kernels.IMPLEMENTATION in ("python", "cython")


def test_compose_convention(rnd):
    # (p∘q)[i] = p[q[i]]
    p = rand_perm_bytes(rnd, 16)
    q = rand_perm_bytes(rnd, 16)
    out = kernels.compose(p, q)
    assert all(out[i] == p[q[i]] for i in range(16))
    assert pure.compose(p, q) == out


def test_invert(rnd):
    p = rand_perm_bytes(rnd, 48)
    pi = kernels.invert(p)
    assert kernels.compose(p, pi) == bytes(range(48))
    assert pure.invert(p) == pi


def test_permute_state_gather(rnd):
    table = rand_perm_bytes(rnd, 8)
    state = bytes(rnd.randrange(256) for _ in range(8))
    out = kernels.permute_state(table, state)
    assert all(out[i] == state[table[i]] for i in range(8))
    assert pure.permute_state(table, state) == out


def eight_puzzle_moves():
    """3x3 sliding-tile arrows as guarded gather tables; blank byte is 0."""
    tables, guards = [], []
    for y in range(3):
        for x in range(3):
            i = y * 3 + x
            for j in ([i + 1] if x < 2 else []) + ([i + 3] if y < 2 else []):
                for a, b in ((i, j), (j, i)):
                    t = list(range(9))
                    t[a], t[b] = t[b], t[a]
                    tables.append(bytes(t))
                    guards.append(((b, 0),))
    return tables, guards


def test_bfs_slot_agreement_and_determinism(rnd):
    tables, guards = eight_puzzle_moves()
    start = bytes([1, 2, 3, 4, 5, 6, 7, 8, 0])
    d1, p1, t1 = kernels.bfs_slot(start, tables, guards, 10**6, -1, True)
    d2, p2, t2 = pure.bfs_slot(start, tables, guards, 10**6, -1, True)
    assert not t1 and not t2
    assert len(d1) == 181440
    assert d1 == d2
    assert list(d1) == list(d2), "discovery order must match between kernels"
    assert p1 == p2


def test_bfs_cap_truncates():
    tables, guards = eight_puzzle_moves()
    start = bytes([1, 2, 3, 4, 5, 6, 7, 8, 0])
    d, _, truncated = kernels.bfs_slot(start, tables, guards, 1000, -1, False)
    assert truncated
    assert len(d) <= 1000


def test_bfs_max_depth():
    tables, guards = eight_puzzle_moves()
    start = bytes([1, 2, 3, 4, 5, 6, 7, 8, 0])
    d, _, truncated = kernels.bfs_slot(start, tables, guards, 10**6, 3, False)
    assert not truncated
    assert max(d.values()) == 3
