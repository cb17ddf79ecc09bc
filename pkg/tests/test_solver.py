import random

import pytest

from ludigroup.catalog import get_game
from ludigroup.errors import InapplicableMoveError, NoSolutionError, NodeCapExceededError
from ludigroup.solver import (
    decide_solvable,
    factorize,
    naive_reversal,
    solve_inverse_calculation,
    verify_word,
)
from ludigroup.words import Word


def bfs_oracle(space, u0):
    """Independent single-source BFS distances (dict-based, no kernels)."""
    dist = {u0: 0}
    frontier = [u0]
    while frontier:
        nxt = []
        for s in frontier:
            for move in space.moves.values():
                t = move.apply(s)
                if t is not None and t not in dist:
                    dist[t] = dist[s] + 1
                    nxt.append(t)
        frontier = nxt
    return dist


@pytest.fixture(scope="module")
def linear5():
    return get_game("linear5")


def test_empty_word_when_equal(linear5):
    assert factorize(linear5, linear5.start, linear5.start) == Word()


def test_factorize_verifies_and_is_minimal(linear5, rnd):
    oracle = bfs_oracle(linear5, linear5.start)
    states = list(oracle)
    for _ in range(25):
        uf = states[rnd.randrange(len(states))]
        word = factorize(linear5, linear5.start, uf)
        assert len(word) == oracle[uf]
        assert verify_word(linear5, linear5.start, word).reached_at_end(uf)


def test_factorize_minimal_between_random_pairs(rnd):
    space = get_game("even")
    oracle_cache = {}
    states = list(bfs_oracle(space, space.start))
    for _ in range(15):
        u0 = states[rnd.randrange(len(states))]
        uf = states[rnd.randrange(len(states))]
        if u0 not in oracle_cache:
            oracle_cache[u0] = bfs_oracle(space, u0)
        word = factorize(space, u0, uf)
        assert len(word) == oracle_cache[u0][uf]
        assert verify_word(space, u0, word).reached_at_end(uf)


def test_factorize_deterministic_and_lex_tiebroken():
    space = get_game("linear4")
    u0 = space.from_text("JRBV")
    uf = space.from_text("RJVB")  # two disjoint adjacent swaps: s1 and s3
    word = factorize(space, u0, uf)
    assert word == Word.of("s1", "s3"), "earliest-declared generator breaks the tie"
    assert factorize(space, u0, uf) == word


def test_factorize_84_with_prime_generators():
    space = get_game("factor")
    u0 = space.from_text("1")
    uf = space.from_text("84")
    word = factorize(space, u0, uf)
    assert len(word) == 4
    assert sorted(lab for lab, _ in word) == ["x2", "x2", "x3", "x7"]
    assert verify_word(space, u0, word).reached_at_end(uf)
    # the checker accepts any ordering of the same letters
    for perm in (["x7", "x3", "x2", "x2"], ["x2", "x3", "x2", "x7"]):
        assert verify_word(space, u0, Word.of(*perm)).reached_at_end(uf)


def test_mission_impossible_on_even_game():
    space = get_game("even")
    u0 = space.start
    uf = space.from_text("RJBVOMC")  # one transposition away: odd
    with pytest.raises(NoSolutionError):
        factorize(space, u0, uf)
    assert decide_solvable(space, u0, uf) is False
    assert decide_solvable(space, u0, u0) is True


def test_budget_exceeded():
    space = get_game("taquin3")
    scrambled = space.from_text("8672543_1")
    with pytest.raises(NodeCapExceededError):
        factorize(space, space.start, scrambled, node_cap=50)


def test_taquin_transposition_is_impossible():
    space = get_game("taquin3")
    swapped = bytearray(space.start)
    swapped[0], swapped[1] = swapped[1], swapped[0]  # swap two tiles, blank fixed
    assert decide_solvable(space, space.start, bytes(swapped)) is False
    with pytest.raises(NoSolutionError):
        factorize(space, space.start, bytes(swapped))


def test_taquin_rule_agrees_with_bfs(rnd):
    space = get_game("taquin3")
    rule = space.metadata["solvability_rule"]
    orbit = bfs_oracle(space, space.start)
    # positives: sampled orbit members; negatives: tile transpositions thereof
    states = list(orbit)
    for _ in range(50):
        s = states[rnd.randrange(len(states))]
        assert rule(space.start, s)
        tiles = [i for i in range(9) if s[i] != 0]
        i, j = rnd.sample(tiles, 2)
        odd = bytearray(s)
        odd[i], odd[j] = odd[j], odd[i]
        assert not rule(space.start, bytes(odd))
        assert bytes(odd) not in orbit


def test_parity_check_agrees_with_orbit_on_even_game(rnd):
    space = get_game("even")
    check = space.metadata["parity_check"]
    orbit = set(bfs_oracle(space, space.start))
    import itertools

    for p in itertools.islice(itertools.permutations(range(7)), 0, 5040, 37):
        state = bytes(p)
        assert check(space.start, state) == (state in orbit)


def test_solve_inverse_calculation_sheep_unique_start():
    space = get_game("programmed_sheep")
    word = Word.of("advance", "left", "advance")
    target = space.metadata["target"]
    start = solve_inverse_calculation(space, target, word)
    trace = verify_word(space, start, word)
    assert trace.first_inapplicable is None and trace.final == target
    # oracle: forward enumeration over every grid pose finds exactly that one
    hits = []
    for pose in space.enumerate_universe():
        if pose[0] == 255:
            continue
        t = verify_word(space, pose, word)
        if t.first_inapplicable is None and t.final == target:
            hits.append(pose)
    assert hits == [start]


def test_solve_inverse_empty_word():
    space = get_game("programmed_sheep")
    target = space.metadata["target"]
    assert solve_inverse_calculation(space, target, Word()) == target


def test_wrong_order_reversal_differs_when_moves_do_not_commute():
    space = get_game("programmed_sheep")
    # not a palindrome: the child's unreversed inversion lands elsewhere
    word = Word.of("advance", "left", "advance", "advance")
    target = space.metadata["target"]
    correct = solve_inverse_calculation(space, target, word)
    wrong = naive_reversal(space, target, word)
    assert wrong is None or wrong != correct
    trace = verify_word(space, correct, word)
    assert trace.first_inapplicable is None and trace.final == target
    if wrong is not None:
        bad = verify_word(space, wrong, word)
        assert bad.first_inapplicable is not None or bad.final != target


def test_verify_word_traces():
    space = get_game("ladybug")
    word = Word.of(*"E E E E N N N N O O O O S S S S".split())
    trace = verify_word(space, space.start, word)
    assert trace.first_inapplicable is None
    assert space.to_text(trace.final) == "1,1,16"
    assert len(trace.states) == 17

    assert verify_word(space, space.start, Word()).states == [space.start]

    # south with no dots in a paying column: flagged, trace stops
    at_col3 = space.from_text("3,2,0")
    stuck = verify_word(space, at_col3, Word.of("S"))
    assert stuck.first_inapplicable == 0
    assert stuck.states == [at_col3]


def test_inverse_calc_raises_on_inapplicable_path():
    space = get_game("ladybug")
    # last move north from column 7 would need dots >= 6 before it; walking
    # back from a state with 0 dots makes the inverse south impossible
    with pytest.raises(InapplicableMoveError):
        solve_inverse_calculation(space, space.from_text("7,2,0"), Word.of("N"))


def test_hex_corrected_always_solvable(rnd):
    space = get_game("hex_corrected")
    states = list(space.enumerate_universe())
    for _ in range(40):
        u0 = states[rnd.randrange(len(states))]
        uf = states[rnd.randrange(len(states))]
        assert decide_solvable(space, u0, uf) is True


def test_solvable_iff_factorize_succeeds(rnd):
    space = get_game("even")
    states = list(space.enumerate_universe())
    for _ in range(25):
        u0 = states[rnd.randrange(len(states))]
        uf = states[rnd.randrange(len(states))]
        solvable = decide_solvable(space, u0, uf)
        try:
            factorize(space, u0, uf)
            found = True
        except NoSolutionError:
            found = False
        assert solvable == found
