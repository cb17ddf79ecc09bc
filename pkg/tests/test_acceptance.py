"""Acceptance suite: the package's exit criteria, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see every line.

One criterion is knowingly red: the crystallographic square puzzle's
orbit-count-by-index does not equal 4 under the honest move model (see the
project notes); it is asserted here as stated rather than weakened.
"""

import json
import math
import random
import time

import pytest

from ludigroup import kernels
from ludigroup.catalog import get_game, list_games
from ludigroup.engine import Archetype, GameSpec, Session, Status
from ludigroup.errors import (
    InapplicableMoveError,
    InvalidSpecError,
    LudigroupError,
    NoSolutionError,
    NodeCapExceededError,
    OutOfCardsError,
)
from ludigroup.orbits import orbit_distances, orbit_of, orbit_partition
from ludigroup.rng import SplitMix64
from ludigroup.solver import decide_solvable, factorize, verify_word
from ludigroup.stabchain import chain_for_space, orbit_count_via_index
from ludigroup.tables import STATEMENT_FORMS, inrc_apply, klein_inrc_table, rotation_table
from ludigroup.words import Word


def report(name: str, ok: bool, detail: str = ""):
    line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f" — {detail}" if detail else "")
    print(line)
    assert ok, line


# -- caching get_game so repeated session creation reuses chains/orbits -----
_SPACES = {}


def cached_get_game(game_id):
    if game_id not in _SPACES:
        _SPACES[game_id] = get_game(game_id)
    return _SPACES[game_id]


@pytest.fixture(autouse=True)
def _share_spaces(monkeypatch):
    import ludigroup.engine as engine_mod

    monkeypatch.setattr(engine_mod, "get_game", cached_get_game)
    yield


def test_a01_rubik_group_order_under_ten_seconds():
    t0 = time.time()
    chain = chain_for_space(cached_get_game("rubik"))
    order = chain.order()
    elapsed = time.time() - t0
    report(
        "rubik order",
        order == 43252003274489856000 and elapsed < 10.0,
        f"order={order}, {elapsed:.2f}s, 48 slots, base length {len(chain.base)}",
    )


def test_a02_triangle_piece_and_slot_orders():
    from ludigroup.stabchain import StabilizerChain

    space = cached_get_game("triangle")
    slot_order = chain_for_space(space).order()
    piece_order = StabilizerChain(list(space.metadata["piece_cycles"].values())).order()
    report(
        "triangle orders",
        slot_order == piece_order == 40320,
        f"pieces={piece_order}, full slots={slot_order}: homebound pieces keep orientation",
    )


def test_a03_even_game_orbit_and_random_instances():
    space = cached_get_game("even")
    orbit = len(orbit_of(space, space.start))
    solvable = sum(
        1
        for seed in range(1000)
        if decide_solvable(
            *(lambda s: (s.space, s.u0, s.target))(Session(GameSpec(game="even", seed=seed)))
        )
    )
    fraction = solvable / 1000
    report(
        "even permutations",
        orbit == 2520 and space.universe.size == 5040 and 0.45 <= fraction <= 0.55,
        f"orbit {orbit}/5040, solvable fraction {fraction:.3f} over 1000 seeds",
    )


def test_a04_hex_half_reachable_and_corrected_always_solvable():
    space = cached_get_game("hex")
    orbit = len(orbit_of(space, space.start))
    corrected = cached_get_game("hex_corrected")
    rng = SplitMix64(271828)
    all_solvable = all(
        decide_solvable(corrected, corrected.universe.sample(rng), corrected.universe.sample(rng))
        for _ in range(200)
    )
    report(
        "hexagonal puzzle",
        orbit == 2520 and all_solvable,
        f"patterns {orbit}/5040; corrected variant: 200 random pairs all solvable",
    )


def test_a05a_hex_crystallo_orbit_count_by_index():
    space = cached_get_game("hex_crystallo")
    count = orbit_count_via_index(space)
    report(
        "hex crystallo index",
        count == 6,
        f"{space.universe.size} / {space.metadata['_chain'].order()} = {count}",
    )


def test_a05b_square_crystallo_orbit_count_by_index():
    # Knowingly red: the quarter-turn block moves on the bipartite 4x4 grid
    # can only ever twist a homebound piece by 0 or 180 degrees, so the
    # group order is 16!*2^15 and the index in the 16!*4^16 ambient is
    # 131072, not 4.  Asserted as stated; see the decisions ledger.
    space = cached_get_game("square_crystallo4")
    count = orbit_count_via_index(space)
    report(
        "square crystallo index",
        count == 4,
        f"{space.universe.size} / {space.metadata['_chain'].order()} = {count}",
    )


def test_a06_elephant_orbit_structure_under_a_second():
    t0 = time.time()
    reflected = orbit_partition(cached_get_game("elephants_reflected"))
    rotating = orbit_partition(cached_get_game("elephants_rotating"))
    elapsed = time.time() - t0
    ok = (
        reflected.sizes == [36, 36, 36, 36]
        and rotating.sizes == [72, 72, 72, 72]
        and rotating.count * 2 == 8
        and elapsed < 1.0
    )
    report(
        "elephants",
        ok,
        f"reflected 4x36, rotating 4x72, orbits*stabilizer={rotating.count}*2=8, {elapsed:.3f}s",
    )


def test_a07_taquin_census_orbit_and_impossibility():
    space4 = cached_get_game("taquin4")
    arrows = len(space4.moves)
    space3 = cached_get_game("taquin3")
    orbit = len(orbit_of(space3, space3.start))
    swapped = bytearray(space3.start)
    swapped[0], swapped[1] = swapped[1], swapped[0]
    transposition_impossible = not decide_solvable(space3, space3.start, bytes(swapped))
    swapped4 = bytearray(space4.start)
    swapped4[0], swapped4[1] = swapped4[1], swapped4[0]
    transposition_impossible4 = not decide_solvable(space4, space4.start, bytes(swapped4))
    ok = (
        arrows == 48
        and orbit == 181440 == math.factorial(9) // 2
        and transposition_impossible
        and transposition_impossible4
    )
    report(
        "taquin",
        ok,
        f"4x4 arrows {arrows}; 3x3 orbit {orbit} = 9!/2; tile transpositions impossible",
    )


def test_a08_ladybug_optimum_sixteen():
    space = cached_get_game("ladybug")
    target = space.metadata["target"]
    word = factorize(space, space.start, target, max_depth=16)
    trace = verify_word(space, space.start, word)
    solver_ok = len(word) <= 16 and trace.reached_at_end(target)

    # exhaustive layer search over all <=16-move legal traces
    best = 0
    frontier = {space.start}
    for _ in range(16):
        nxt = set()
        for state in frontier:
            for move in space.moves.values():
                new = move.apply(state)
                if new is not None:
                    nxt.add(new)
        frontier = nxt | frontier
        for state in frontier:
            if state[0] == 0 and state[1] == 0:
                best = max(best, state[2])
    report(
        "ladybug optimum",
        solver_ok and best == 16,
        f"solver reaches 16 dots in {len(word)} moves; exhaustive max over <=16 moves = {best}",
    )


def test_a09_rotation_table_and_statement_symmetries():
    table = rotation_table()
    table.check_axioms()
    entries_ok = (
        table.product_of("cw", "cw") == "ccw"
        and table.product_of("cw", "ccw") == "1"
        and table.product_of("ccw", "ccw") == "cw"
        and table.inverse_of("cw") == "ccw"
        and [table.glyph(x) for x in table.labels] == ["·", "↷", "↶"]
    )
    inrc = klein_inrc_table()
    inrc.check_axioms()
    inrc_ok = (
        inrc.is_commutative()
        and all(inrc.inverse_of(x) == x for x in inrc.labels)
        and STATEMENT_FORMS[inrc_apply("R", (False, False))] == "B implies A"
    )
    report("rotation table and INRC", entries_ok and inrc_ok, "entry-for-entry")


def test_a10_nilpotency_identity_200_triples():
    from ludigroup.catalog.grid import walk_element

    rnd = random.Random(314159)
    space = cached_get_game("ladybug")
    states = list(space.enumerate_universe())
    checked = 0
    for _ in range(200):
        x, y, z = (
            walk_element([rnd.choice("ENOS") for _ in range(rnd.randrange(1, 6))])
            for _ in range(3)
        )
        lhs, rhs = x * y * z * y * x, y * x * z * x * y
        assert lhs == rhs
        for state in (states[rnd.randrange(len(states))] for _ in range(3)):
            assert lhs.apply(state) == rhs.apply(state)
        checked += 1
    report("nilpotency identity", checked == 200, "xyzyx = yxzxy on 200 random triples")


def _oracle_distances_taquin3(space, blank):
    canonical = bytes(0 if i == blank else (i + 1 if i < blank else i) for i in range(9))
    dist, _, truncated = orbit_distances(space, canonical)
    assert not truncated
    return canonical, dist


def test_a11_solver_soundness_and_optimality():
    rng = random.Random(1618)
    failures = []

    # 8-puzzle: oracle via canonical single-source BFS per blank position,
    # transported along tile relabelings (graph automorphisms)
    space = cached_get_game("taquin3")
    oracles = {}
    pairs_checked = 0
    states = [bytes(p) for p in __import__("itertools").islice(
        __import__("itertools").permutations(range(9)), 0, 362880, 3627)]
    for _ in range(100):
        u0 = states[rng.randrange(len(states))]
        uf = states[rng.randrange(len(states))]
        b0 = u0.index(0)
        if b0 not in oracles:
            oracles[b0] = _oracle_distances_taquin3(space, b0)
        canonical, dist = oracles[b0]
        relabel = {u0[i]: canonical[i] for i in range(9)}
        image = bytes(relabel[t] for t in uf)
        expected = dist.get(image)
        solvable = decide_solvable(space, u0, uf)
        if (expected is not None) != solvable:
            failures.append(f"taquin3 solvability mismatch {u0} {uf}")
        try:
            word = factorize(space, u0, uf)
            if expected is None or len(word) != expected:
                failures.append(f"taquin3 length {len(word)} != {expected}")
            if not verify_word(space, u0, word).reached_at_end(uf):
                failures.append("taquin3 word does not verify")
        except NoSolutionError:
            if expected is not None:
                failures.append(f"taquin3 missed solution at distance {expected}")
        pairs_checked += 1

    # every permutation game at or below 5040 configurations
    small_games = [
        "linear5", "cyclic5", "even", "safe", "infernal",
        "hex", "hex_corrected", "two_lamps", "square_symmetries", "lock",
    ]
    for gid in small_games:
        g = cached_get_game(gid)
        srng = SplitMix64(42)
        if g.universe.sample is not None:
            sample = lambda g=g, srng=srng: g.universe.sample(srng)
        else:
            pool = list(g.enumerate_universe())
            sample = lambda pool=pool: pool[rng.randrange(len(pool))]
        for _ in range(100):
            u0, uf = sample(), sample()
            dist, _, _ = orbit_distances(g, u0)
            expected = dist.get(uf)
            solvable = decide_solvable(g, u0, uf)
            if (expected is not None) != solvable:
                failures.append(f"{gid} solvability mismatch")
            try:
                word = factorize(g, u0, uf)
                ok = expected is not None and len(word) == expected
                ok = ok and verify_word(g, u0, word).reached_at_end(uf)
                if not ok:
                    failures.append(f"{gid} optimality/soundness failure")
            except NoSolutionError:
                if expected is not None:
                    failures.append(f"{gid} missed solution")
            pairs_checked += 1
    report(
        "solver soundness/optimality",
        not failures,
        f"{pairs_checked} random pairs across taquin3 + {len(small_games)} games"
        + (f"; failures: {failures[:3]}" if failures else ""),
    )


def _exercise_session(spec: GameSpec, rnd: random.Random) -> list[str]:
    """Run a short scripted interaction; returns invariant violations."""
    problems = []
    try:
        session = Session(spec)
    except (InvalidSpecError, NodeCapExceededError, NoSolutionError):
        return problems  # combination not admitted by the validator
    budget_total = None
    if session.remaining is not None:
        budget_total = (
            session.remaining
            if isinstance(session.remaining, int)
            else sum(session.remaining.values())
        )

    def check_cards():
        if budget_total is None:
            return
        rem = (
            session.remaining
            if isinstance(session.remaining, int)
            else sum(session.remaining.values())
        )
        if rem + len(session.history) != budget_total:
            problems.append(f"{spec.game}: card conservation broken")

    if session.archetype in (Archetype.MENTAL, Archetype.INVERSE):
        state = session.visible_state()
        if "word" not in state:
            problems.append(f"{spec.game}: instance word missing")
        if session.archetype is Archetype.MENTAL:
            final = verify_word(
                session.space, session.u0, Word.of(*session.instance_word)
            ).final
            session.submit_sequence(session.space.to_text(final))
            if session.status is not Status.WON:
                problems.append(f"{spec.game}: correct prediction did not win")
        else:
            try:
                from ludigroup.solver import solve_inverse_calculation

                start = solve_inverse_calculation(
                    session.space, session.target, Word.of(*session.instance_word)
                )
                session.submit_sequence(session.space.to_text(start))
                if session.status is not Status.WON:
                    problems.append(f"{spec.game}: correct start did not win")
            except InapplicableMoveError:
                pass
    elif session.blind:
        pre = [session.visible_state(), session.events]
        if "configuration" in json.dumps(pre):
            problems.append(f"{spec.game}: blind state leaks configuration")
        labels, _ = [], session.u0
        current = session.u0
        for _ in range(rnd.randrange(0, 5)):
            apps = [l for l in session.space.moves if session.space.move(l).applies_to(current)]
            if not apps:
                break
            lab = rnd.choice(apps)
            labels.append(lab)
            current = session.space.move(lab).apply(current)
        try:
            session.submit_sequence(labels)
        except OutOfCardsError:
            pass
    else:
        prev_revealed: set = set()
        for _ in range(rnd.randrange(1, 7)):
            if session.status is not Status.IN_PROGRESS:
                break
            if session.history and rnd.random() < 0.25:
                session.undo()
            else:
                apps = [
                    l
                    for l in session.space.moves
                    if session.space.move(l).applies_to(session.current)
                ]
                if not apps:
                    break
                try:
                    session.play_move(rnd.choice(apps))
                except (OutOfCardsError, InapplicableMoveError):
                    pass
            check_cards()
            if session.archetype is Archetype.REVEALED and not session.memory:
                if not prev_revealed <= session.revealed:
                    problems.append(f"{spec.game}: revealed set shrank")
                prev_revealed = set(session.revealed)
        if session.archetype is Archetype.IMPOSSIBLE and session.status is Status.IN_PROGRESS:
            session.declare_impossible()

    replay = Session.replay(spec, json.loads(json.dumps(session.events)))
    same = (
        replay.current == session.current
        and replay.status == session.status
        and replay.visible_state() == session.visible_state()
    )
    if not same:
        problems.append(f"{spec.game}: replay diverged")
    return problems


def test_a12_engine_invariant_suite_over_admitted_combinations():
    rnd = random.Random(20260810)
    problems = []
    admitted = 0
    games = list_games()
    for game_id in games:
        for archetype in Archetype:
            memory_options = (False, True) if archetype is Archetype.REVEALED else (False,)
            for blind in (False, True):
                for constrained in (False, True):
                    for memory in memory_options:
                        spec = GameSpec(
                            game=game_id,
                            archetype=archetype,
                            blind=blind,
                            constrained=constrained,
                            memory=memory,
                            seed=rnd.randrange(1 << 32),
                            card_budget=12 if constrained else None,
                        )
                        try:
                            found = _exercise_session(spec, rnd)
                        except LudigroupError:
                            continue  # not admitted for this game
                        if found:
                            problems.extend(found)
                        else:
                            admitted += 1
    report(
        "engine invariants",
        not problems,
        f"{admitted} admitted archetype*variant*game combinations clean"
        + (f"; problems: {problems[:4]}" if problems else ""),
    )
