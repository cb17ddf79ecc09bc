import math

import pytest

from ludigroup.perm import from_cycles
from ludigroup.rng import SplitMix64
from ludigroup.stabchain import StabilizerChain


def cyc(n, *cycles):
    return from_cycles(n, cycles).packed()


def test_symmetric_group_order():
    gens = [cyc(5, (0, 1)), cyc(5, (0, 1, 2, 3, 4))]
    assert StabilizerChain(gens).order() == 120


def test_alternating_group_from_overlapping_cycles():
    gens = [cyc(7, (0, 1, 2)), cyc(7, (2, 3, 4, 5, 6))]
    chain = StabilizerChain(gens)
    assert chain.order() == 2520


def test_klein_four():
    gens = [cyc(4, (0, 1), (2, 3)), cyc(4, (0, 2), (1, 3))]
    assert StabilizerChain(gens).order() == 4


def test_identity_only_group():
    chain = StabilizerChain([bytes(range(6))])
    assert chain.order() == 1
    assert chain.contains(bytes(range(6)))
    assert not chain.contains(cyc(6, (0, 1)))


def test_order_product_of_orbit_lengths():
    gens = [cyc(6, (0, 1, 2, 3, 4, 5)), cyc(6, (1, 5), (2, 4))]
    chain = StabilizerChain(gens)  # dihedral of order 12
    assert chain.order() == 12
    assert math.prod(chain.orbit_lengths()) == 12


def test_membership_and_witness_words():
    gens = [cyc(5, (0, 1)), cyc(5, (0, 1, 2, 3, 4))]
    chain = StabilizerChain(gens)
    g = cyc(5, (0, 3), (1, 4, 2))
    assert chain.contains(g)
    word = chain.express(g)
    assert word is not None
    # replay the witness through the strong generating set
    assert chain.evaluate_strong_word(word) == g


def test_every_generator_accepted_by_own_chain():
    gens = [cyc(8, (0, 1, 2)), cyc(8, (2, 3)), cyc(8, (4, 5, 6, 7))]
    chain = StabilizerChain(gens)
    for g in gens:
        assert chain.contains(g)


def test_odd_element_rejected_by_alternating_chain():
    gens = [cyc(7, (0, 1, 2)), cyc(7, (2, 3, 4, 5, 6))]
    chain = StabilizerChain(gens)
    assert not chain.contains(cyc(7, (0, 1)))


def test_order_independent_of_base_hint_reversal():
    gens = [cyc(7, (0, 1, 2)), cyc(7, (2, 3, 4, 5, 6))]
    forward = StabilizerChain(gens, base_hint=list(range(7)))
    backward = StabilizerChain(gens, base_hint=list(reversed(range(7))))
    assert forward.order() == backward.order() == 2520


def test_base_points_are_first_moved_slots():
    gens = [cyc(6, (2, 3, 4))]
    chain = StabilizerChain(gens)
    assert chain.base[0] == 2


def test_random_element_uniformish():
    gens = [cyc(4, (0, 1)), cyc(4, (0, 1, 2, 3))]
    chain = StabilizerChain(gens)
    assert chain.order() == 24
    rng = SplitMix64(7)
    seen = {chain.random_element(rng) for _ in range(2000)}
    assert len(seen) == 24, "all 24 elements should appear in 2000 draws"


def test_transversal_words_reach_their_points():
    gens = [cyc(6, (0, 1, 2, 3, 4, 5)), cyc(6, (0, 1))]
    chain = StabilizerChain(gens)
    for level, lvl_base in enumerate(chain.base):
        for pt, word in chain.transversal_words(level).items():
            acc = chain.evaluate_strong_word(word)
            assert acc[lvl_base] == pt
