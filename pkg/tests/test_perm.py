import random

import pytest
from hypothesis import given, strategies as st

from ludigroup.errors import DegreeMismatchError
from ludigroup.perm import (
    Permutation,
    compose,
    from_cycles,
    identity,
    invert,
    sign,
)


def random_perm(rnd, n):
    images = list(range(n))
    rnd.shuffle(images)
    return Permutation(tuple(images))


def sign_by_inversions(p: Permutation) -> int:
    """Independent oracle: parity of the inversion count."""
    inv = 0
    im = p.images
    for i in range(len(im)):
        for j in range(i + 1, len(im)):
            if im[i] > im[j]:
                inv += 1
    return -1 if inv % 2 else +1


perms = st.integers(3, 12).flatmap(
    lambda n: st.permutations(list(range(n))).map(lambda xs: Permutation(tuple(xs)))
)


def test_not_a_bijection_rejected():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def test_compose_is_p_after_q():
    p = from_cycles(3, [(0, 1)])
    q = from_cycles(3, [(1, 2)])
    # (p∘q)(1) = p(q(1)) = p(2) = 2
    assert compose(p, q)(1) == 2


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        compose(identity(3), identity(4))


def test_compose_identity(rnd):
    for _ in range(20):
        p = random_perm(rnd, 8)
        assert compose(p, identity(8)) == p
        assert compose(identity(8), p) == p


def test_associativity_sampled_triples(rnd):
    for _ in range(100):
        p, q, r = (random_perm(rnd, 8) for _ in range(3))
        assert compose(compose(p, q), r) == compose(p, compose(q, r))


def test_invert_roundtrip(rnd):
    for _ in range(100):
        p = random_perm(rnd, 10)
        assert compose(p, invert(p)) == identity(10)
        assert compose(invert(p), p) == identity(10)
        assert invert(invert(p)) == p


@given(perms)
def test_sign_matches_inversion_oracle(p):
    assert sign(p) == sign_by_inversions(p)


@given(perms, perms.filter(lambda q: True))
def test_sign_multiplicative_same_degree(p, q):
    if p.degree != q.degree:
        return
    assert sign(compose(p, q)) == sign(p) * sign(q)


def test_sign_three_cycle_and_transposition():
    assert sign(from_cycles(5, [(0, 1, 2)])) == +1
    assert sign(from_cycles(5, [(3, 4)])) == -1
    assert sign(identity(5)) == +1


def test_cycles_roundtrip(rnd):
    for _ in range(50):
        p = random_perm(rnd, 9)
        assert from_cycles(9, p.cycles()) == p


def test_packed_matches_images():
    p = from_cycles(4, [(0, 3, 1)])
    assert list(p.packed()) == list(p.images)
