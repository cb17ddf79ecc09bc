"""Game sessions: the seven archetypes with blind, constrained and memory
variants, win/loss adjudication, undo, and mission-impossible declarations.

A session is an event-sourced state machine.  Replaying its event log (one
JSON-able dict per move, undo, submit, declare or reveal) over the same
spec and seed reproduces the state bit for bit; persistence and the HTTP
service lean on that.

Instance drawing is deterministic: one splitmix64 stream per spec seed,
split in a fixed documented order (start, target, word).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

from . import kernels
from .catalog import get_game
from .errors import (
    InapplicableMoveError,
    InvalidSpecError,
    NoSolutionError,
    NodeCapExceededError,
    OutOfCardsError,
    SessionTerminatedError,
    UnknownLabelError,
    WrongModeError,
)
from .orbits import orbit_of
from .rng import SplitMix64
from .solver import decide_solvable, factorize, verify_word
from .spaces import ActionSpace
from .stabchain import chain_for_space
from .words import Word


class Archetype(str, Enum):
    MENTAL = "mental"
    INVERSE = "inverse"
    FACTORIZATION = "factorization"
    COMBINATION = "combination"
    REVEALED = "revealed"
    IMPOSSIBLE = "impossible"
    CHOICE = "choice"


class Status(str, Enum):
    IN_PROGRESS = "in_progress"
    WON = "won"
    LOST = "lost"


# archetypes that keep the target hidden while play is live
HIDDEN_TARGET = {Archetype.COMBINATION, Archetype.REVEALED, Archetype.MENTAL}
# archetypes played by submitting one answer instead of live moves
SUBMIT_ONLY = {Archetype.MENTAL, Archetype.INVERSE}

VALIDATION_CAP = 250_000


@dataclass
class GameSpec:
    game: str
    archetype: Archetype | None = None
    # None means "use the game's default variant flags"
    blind: bool | None = None
    constrained: bool | None = None
    memory: bool | None = None
    seed: int = 0
    card_budget: int | dict[str, int] | None = None
    win_at: str | None = None  # "final" | "any"
    u0: str | None = None      # text-form overrides for fixed instances
    uf: str | None = None
    word: list[str] | None = None  # instance word for mental/inverse

    def to_json(self) -> dict:
        data = dict(self.__dict__)
        data["archetype"] = None if self.archetype is None else self.archetype.value
        return data

    @staticmethod
    def from_json(data: dict) -> "GameSpec":
        data = dict(data)
        if data.get("archetype"):
            data["archetype"] = Archetype(data["archetype"])
        return GameSpec(**data)


@dataclass
class MoveOutcome:
    accepted: bool
    configuration: bytes | None  # None in blind modes
    newly_revealed: tuple[str, ...]
    status: Status


@dataclass
class Adjudication:
    status: Status
    detail: dict = field(default_factory=dict)


def _resolve_archetype(spec: GameSpec, space: ActionSpace) -> Archetype:
    if spec.archetype is not None:
        return spec.archetype
    return Archetype(space.metadata.get("archetype", "factorization"))


def resolve_variants(spec: GameSpec, space: ActionSpace) -> tuple[bool, bool, bool]:
    defaults = space.metadata.get("variants", {})

    def pick(value, key):
        return defaults.get(key, False) if value is None else value

    return (
        pick(spec.blind, "blind"),
        pick(spec.constrained, "constrained"),
        pick(spec.memory, "memory"),
    )


def validate_spec(spec: GameSpec, space: ActionSpace) -> Archetype:
    archetype = _resolve_archetype(spec, space)
    blind, constrained, memory = resolve_variants(spec, space)
    if memory and archetype is not Archetype.REVEALED:
        raise InvalidSpecError("the memory variant belongs to revealed-combination games")
    if constrained and archetype in (Archetype.IMPOSSIBLE, Archetype.CHOICE):
        # a card shortage would masquerade as structural impossibility
        raise InvalidSpecError(
            "constrained play is not offered for impossible or choice games"
        )
    if blind and archetype in SUBMIT_ONLY:
        raise InvalidSpecError("mental and inverse games are already submission games")
    if archetype is Archetype.REVEALED and "components" not in space.metadata:
        raise InvalidSpecError(f"{space.name} declares no reveal components")
    if archetype is Archetype.CHOICE and not space.metadata.get("transversal"):
        raise InvalidSpecError(f"{space.name} declares no goal transversal")
    return archetype


def _sample_u0(space: ActionSpace, rng: SplitMix64) -> bytes:
    if space.universe.sample is not None:
        return space.universe.sample(rng)
    return space.start


def _sample_in_orbit(space: ActionSpace, u0: bytes, rng: SplitMix64) -> bytes:
    """Uniform configuration in the orbit of u0."""
    if space.universe.torsor and space.has_slot_rep:
        chain = space.metadata.get("_chain")
        if chain is None:
            chain = chain_for_space(space)
            space.metadata["_chain"] = chain
        return kernels.permute_state(chain.random_element(rng), u0)
    rule = space.metadata.get("solvability_rule")
    if rule is not None and space.universe.sample is not None:
        # uniform over the universe conditioned on co-orbitality: exact
        for _ in range(100_000):
            candidate = space.universe.sample(rng)
            if rule(u0, candidate):
                return candidate
        raise InvalidSpecError("rejection sampling found no co-orbital configuration")
    scramble = space.metadata.get("scramble_length")
    if scramble:
        current = u0
        labels = space.labels()
        for _ in range(scramble):
            applicable = [l for l in labels if space.move(l).applies_to(current)]
            current = space.move(applicable[rng.randrange(len(applicable))]).apply(current)
        return current
    cache = space.metadata.setdefault("_orbit_cache", {})
    states = cache.get(u0)
    if states is None:
        states = orbit_of(space, u0, VALIDATION_CAP)
        cache[u0] = states
    return states[rng.randrange(len(states))]


def _sample_word(space: ActionSpace, start: bytes, length: int, rng: SplitMix64):
    """Random applicable walk; returns (labels, final)."""
    labels = []
    current = start
    all_labels = space.labels()
    for _ in range(length):
        applicable = [l for l in all_labels if space.move(l).applies_to(current)]
        if not applicable:
            break
        lab = applicable[rng.randrange(len(applicable))]
        labels.append(lab)
        current = space.move(lab).apply(current)
    return labels, current


def _sample_word_backward(
    space: ActionSpace, target: bytes, length: int, last: str, rng: SplitMix64
):
    """Build an instance word ending in `last` by walking inverses from the
    target; returns (labels, hidden start)."""
    inv_last = space.inverse_label(last)
    current = space.move(inv_last).apply(target)
    if current is None:
        raise InvalidSpecError(f"the target does not admit a final {last!r} step")
    labels = [last]
    all_labels = space.labels()
    while len(labels) < length:
        options = []
        for lab in all_labels:
            prev = space.move(space.inverse_label(lab)).apply(current)
            if prev is not None and prev != target:  # never pass through the goal
                options.append((lab, prev))
        if not options:
            break
        lab, prev = options[rng.randrange(len(options))]
        labels.insert(0, lab)
        current = prev
    return labels, current


def _budget_of(spec: GameSpec, space: ActionSpace, constrained: bool) -> int | dict[str, int] | None:
    if not constrained:
        return None
    budget = spec.card_budget
    if budget is None:
        budget = space.metadata.get("card_budget")
    if budget is None:
        raise InvalidSpecError("constrained play needs a card budget")
    if isinstance(budget, dict):
        unknown = set(budget) - set(space.moves)
        if unknown:
            raise InvalidSpecError(f"budget names unknown generators: {sorted(unknown)}")
        if any(v < 0 for v in budget.values()):
            raise InvalidSpecError("card counts cannot be negative")
    elif budget < 0:
        raise InvalidSpecError("card counts cannot be negative")
    return budget


def _within_budget_reachable(space, u0, targets, budget) -> bool:
    """Is some target reachable inside the card budget?  Exhaustive search
    over (configuration, remaining cards) with a node cap."""
    if isinstance(budget, int):
        start_key = (u0, budget)
    else:
        order = tuple(space.moves)
        start_key = (u0, tuple(budget.get(l, 0) for l in order))
    seen = {start_key}
    frontier = [start_key]
    if u0 in targets:
        return True
    while frontier:
        nxt = []
        for state, rem in frontier:
            for li, label in enumerate(space.moves):
                if isinstance(rem, int):
                    if rem == 0:
                        continue
                    new_rem = rem - 1
                else:
                    if rem[li] == 0:
                        continue
                    new_rem = rem[:li] + (rem[li] - 1,) + rem[li + 1 :]
                new = space.moves[label].apply(state)
                if new is None:
                    continue
                if new in targets:
                    return True
                key = (new, new_rem)
                if key not in seen:
                    if len(seen) >= VALIDATION_CAP:
                        raise NodeCapExceededError(VALIDATION_CAP)
                    seen.add(key)
                    nxt.append(key)
        frontier = nxt
    return False


class Session:
    """Live play state for one spec; single-writer."""

    def __init__(self, spec: GameSpec, _replaying: bool = False):
        self.spec = spec
        self.space = get_game(spec.game)
        self.archetype = validate_spec(spec, self.space)
        self.blind, self.constrained, self.memory = resolve_variants(spec, self.space)
        self.win_at = (
            spec.win_at
            or self.space.metadata.get("win_at")
            or ("any" if self.archetype is Archetype.COMBINATION else "final")
        )
        rng = SplitMix64(spec.seed)
        rng_u0, rng_uf, rng_word = rng.split(), rng.split(), rng.split()

        # -- instance ------------------------------------------------------
        if spec.u0 is not None:
            self.u0 = self.space.from_text(spec.u0)
        elif self.space.metadata.get("instance_from_start"):
            self.u0 = self.space.start
        elif self.archetype is Archetype.CHOICE and self.space.metadata.get(
            "sample_u0_in_start_orbit"
        ):
            # the goal cards assume starts scrambled from the reference
            # picture (only there is exactly one card reachable)
            self.u0 = _sample_in_orbit(self.space, self.space.start, rng_u0)
        else:
            self.u0 = _sample_u0(self.space, rng_u0)
        self.target: bytes | None = None
        self.transversal: list[bytes] | None = None
        self.instance_word: list[str] | None = None

        if self.archetype in (
            Archetype.FACTORIZATION,
            Archetype.COMBINATION,
            Archetype.REVEALED,
        ):
            if spec.uf is not None:
                self.target = self.space.from_text(spec.uf)
            else:
                fixed = self.space.metadata.get("target")
                self.target = (
                    fixed if fixed is not None else _sample_in_orbit(self.space, self.u0, rng_uf)
                )
        elif self.archetype is Archetype.IMPOSSIBLE:
            self.target = (
                self.space.from_text(spec.uf)
                if spec.uf is not None
                else _sample_u0(self.space, rng_uf)
            )
        elif self.archetype is Archetype.CHOICE:
            self.transversal = list(self.space.metadata["transversal"])
            reachable = [
                t for t in self.transversal if decide_solvable(self.space, self.u0, t)
            ]
            if len(reachable) != 1:
                raise InvalidSpecError(
                    f"{len(reachable)} goal cards reachable; a choice game needs exactly one"
                )
        elif self.archetype is Archetype.MENTAL:
            if spec.word is not None:
                self.instance_word = list(spec.word)
                trace = verify_word(self.space, self.u0, Word.of(*self.instance_word))
                if trace.first_inapplicable is not None:
                    raise InvalidSpecError("instance word is not applicable from the start")
                self.target = trace.final  # the answer the player must predict
            else:
                length = self.space.metadata.get("instance_word_length", 5)
                self.instance_word, self.target = _sample_word(
                    self.space, self.u0, length, rng_word
                )
        elif self.archetype is Archetype.INVERSE:
            length = self.space.metadata.get("instance_word_length", 6)
            last = self.space.metadata.get("instance_last_letter")
            if spec.word is not None:
                self.instance_word = list(spec.word)
                if spec.uf is not None:
                    self.target = self.space.from_text(spec.uf)
                else:
                    raise InvalidSpecError("an inverse instance needs both word and target")
            elif last is not None:
                self.target = self.space.metadata["target"]
                self.instance_word, _hidden = _sample_word_backward(
                    self.space, self.target, length, last, rng_word
                )
            else:
                hidden = _sample_u0(self.space, rng_u0)
                self.instance_word, self.target = _sample_word(
                    self.space, hidden, length, rng_word
                )
            self.u0 = None  # the start is the unknown

        # -- budget ----------------------------------------------------------
        self.budget = _budget_of(spec, self.space, self.constrained)
        self.remaining: int | dict[str, int] | None
        if self.budget is None:
            self.remaining = None
        elif isinstance(self.budget, int):
            self.remaining = self.budget
        else:
            self.remaining = dict(self.budget)
        if self.budget is not None and not _replaying:
            targets = self._win_targets()
            if targets is not None and not _within_budget_reachable(
                self.space, self.u0, targets, self.budget
            ):
                raise InvalidSpecError("no solution exists within the card budget")

        # -- live state ---------------------------------------------------------
        self.current: bytes | None = self.u0
        self.history: list[str] = []
        self.revealed: set[str] = set()
        self.visible_revealed: set[str] = set()
        self.status = Status.IN_PROGRESS
        self.events: list[dict] = []
        if self.archetype not in SUBMIT_ONLY and not self.blind:
            # an impossible-factorization game stays live even when start
            # equals target: judging that is the whole game
            if self.archetype is not Archetype.IMPOSSIBLE and self._is_won(self.current):
                self.status = Status.WON

    # -- helpers -----------------------------------------------------------
    def _win_targets(self) -> set[bytes] | None:
        if self.archetype is Archetype.CHOICE:
            return set(self.transversal or [])
        if self.target is not None and self.archetype not in SUBMIT_ONLY:
            return {self.target}
        return None

    def _is_won(self, config: bytes) -> bool:
        if self.archetype is Archetype.CHOICE:
            return self.transversal is not None and config in self.transversal
        return self.target is not None and config == self.target

    def _require_live(self):
        if self.status is not Status.IN_PROGRESS:
            raise SessionTerminatedError("the session already ended")

    def _components(self):
        return self.space.metadata.get("components", [])

    def _reveals_for(self, config: bytes) -> set[str]:
        out = set()
        for cid, pred in self._components():
            if pred(config) and pred(self.target):
                out.add(cid)
        return out

    def _consume_card(self, label: str):
        if self.remaining is None:
            return
        if isinstance(self.remaining, int):
            if self.remaining <= 0:
                raise OutOfCardsError("no card left")
            self.remaining -= 1
        else:
            if self.remaining.get(label, 0) <= 0:
                raise OutOfCardsError(f"no {label!r} card left")
            self.remaining[label] -= 1

    def _return_card(self, label: str):
        if self.remaining is None:
            return
        if isinstance(self.remaining, int):
            self.remaining += 1
        else:
            self.remaining[label] = self.remaining.get(label, 0) + 1

    # -- actions ---------------------------------------------------------------
    def play_move(self, label: str) -> MoveOutcome:
        self._require_live()
        if self.blind:
            raise WrongModeError("blind sessions take a submitted sequence")
        if self.archetype in SUBMIT_ONLY:
            raise WrongModeError(f"{self.archetype.value} games take a submission")
        if label not in self.space.moves:  # auxiliary inverses are not playable
            raise UnknownLabelError(label)
        move = self.space.move(label)
        if self.remaining is not None:
            has = (
                self.remaining > 0
                if isinstance(self.remaining, int)
                else self.remaining.get(label, 0) > 0
            )
            if not has:
                raise OutOfCardsError(f"no card for {label!r}")
        new = move.apply(self.current)
        if new is None:
            raise InapplicableMoveError(label, "at the current configuration")
        self._consume_card(label)
        self.current = new
        self.history.append(label)
        self.events.append({"type": "move", "label": label})
        newly: tuple[str, ...] = ()
        if self.archetype is Archetype.REVEALED:
            now = self._reveals_for(new)
            if self.memory:
                newly = tuple(sorted(now))
                self.visible_revealed = now
            else:
                newly = tuple(sorted(now - self.revealed))
                self.revealed |= now
                self.visible_revealed = set(self.revealed)
            if newly:
                self.events.append({"type": "reveal", "components": list(newly)})
        if self._is_won(new):
            self.status = Status.WON
        return MoveOutcome(
            accepted=True,
            configuration=None if self.blind else new,
            newly_revealed=newly,
            status=self.status,
        )

    def undo(self) -> MoveOutcome:
        self._require_live()
        if self.blind:
            raise WrongModeError("blind sessions cannot undo")
        if self.archetype in SUBMIT_ONLY:
            raise WrongModeError("nothing to undo in a submission game")
        if not self.history:
            raise WrongModeError("no move to undo")
        label = self.history.pop()
        inverse = self.space.move(self.space.inverse_label(label))
        previous = inverse.apply(self.current)
        if previous is None:  # pragma: no cover - inverse pairing is validated
            raise InapplicableMoveError(inverse.label, "undo failed")
        self.current = previous
        self._return_card(label)
        self.events.append({"type": "undo"})
        if self.archetype is Archetype.REVEALED and self.memory:
            self.visible_revealed = set()
        return MoveOutcome(True, self.current, (), self.status)

    def submit_sequence(self, payload) -> Adjudication:
        """Resolve a blind word, a mental prediction, or an inverse start."""
        self._require_live()
        if self.archetype is Archetype.MENTAL:
            predicted = payload if isinstance(payload, bytes) else self.space.from_text(payload)
            won = predicted == self.target
            self.events.append({"type": "submit", "prediction": self.space.to_text(predicted)})
            self.status = Status.WON if won else Status.LOST
            return Adjudication(self.status, {"actual": self.space.to_text(self.target)})
        if self.archetype is Archetype.INVERSE:
            start = payload if isinstance(payload, bytes) else self.space.from_text(payload)
            trace = verify_word(self.space, start, Word.of(*self.instance_word))
            won = trace.first_inapplicable is None and trace.final == self.target
            self.events.append({"type": "submit", "start": self.space.to_text(start)})
            self.status = Status.WON if won else Status.LOST
            return Adjudication(
                self.status,
                {"stopped_at": trace.first_inapplicable, "final": self.space.to_text(trace.final)},
            )
        if not self.blind:
            raise WrongModeError("live sessions play moves one at a time")

        labels = list(payload)
        if self.remaining is not None:
            counts = Counter(labels)
            if isinstance(self.remaining, int):
                if len(labels) > self.remaining:
                    raise OutOfCardsError("sequence longer than the card budget")
            else:
                for lab, cnt in counts.items():
                    if cnt > self.remaining.get(lab, 0):
                        raise OutOfCardsError(f"not enough {lab!r} cards")
        for lab in labels:
            if lab not in self.space.moves:
                raise UnknownLabelError(lab)
        trace = verify_word(self.space, self.u0, Word.of(*labels))
        if self.archetype is Archetype.CHOICE:
            reached = [i for i, s in enumerate(trace.states) if self._is_won(s)]
        else:
            reached = [i for i, s in enumerate(trace.states) if s == self.target]
        if self.win_at == "any" or self.archetype is Archetype.COMBINATION:
            won = bool(reached)
        else:
            won = trace.first_inapplicable is None and self._is_won(trace.final)
        self.events.append({"type": "submit", "word": labels})
        self.status = Status.WON if won else Status.LOST
        self.current = trace.final
        return Adjudication(
            self.status,
            {
                "trace": [self.space.to_text(s) for s in trace.states],
                "stopped_at": trace.first_inapplicable,
            },
        )

    def declare_impossible(self) -> Adjudication:
        self._require_live()
        if self.archetype is not Archetype.IMPOSSIBLE:
            raise WrongModeError("only impossible-factorization games take declarations")
        solvable = decide_solvable(self.space, self.current, self.target)
        self.events.append({"type": "declare"})
        self.status = Status.LOST if solvable else Status.WON
        return Adjudication(self.status, {"was_solvable": solvable})

    # -- projections ----------------------------------------------------------
    def visible_state(self) -> dict:
        out = {
            "game": self.spec.game,
            "archetype": self.archetype.value,
            "status": self.status.value,
            "blind": self.blind,
            "constrained": self.constrained,
            "memory": self.memory,
            "win_at": self.win_at,
            "moves_played": len(self.history),
        }
        if self.remaining is not None:
            out["remaining_cards"] = (
                self.remaining if isinstance(self.remaining, int) else dict(self.remaining)
            )
        terminal = self.status is not Status.IN_PROGRESS
        if self.archetype in SUBMIT_ONLY:
            out["word"] = list(self.instance_word)
            if self.archetype is Archetype.MENTAL:
                out["start"] = self.space.to_text(self.u0)
            else:
                out["target"] = self.space.to_text(self.target)
        else:
            if not self.blind or terminal:
                out["configuration"] = self.space.to_text(self.current)
            if self.archetype is Archetype.CHOICE:
                out["goals"] = [self.space.to_text(t) for t in self.transversal]
            elif self.archetype in HIDDEN_TARGET and not terminal:
                pass  # never leak the combination while play is live
            elif self.target is not None:
                out["target"] = self.space.to_text(self.target)
            if self.archetype is Archetype.REVEALED:
                out["revealed"] = sorted(self.visible_revealed)
        return out

    # -- replay ------------------------------------------------------------------
    @staticmethod
    def replay(spec: GameSpec, events: list[dict]) -> "Session":
        session = Session(spec, _replaying=True)
        for event in events:
            kind = event["type"]
            if kind == "move":
                session.play_move(event["label"])
            elif kind == "undo":
                session.undo()
            elif kind == "submit":
                if "word" in event:
                    session.submit_sequence(event["word"])
                elif "prediction" in event:
                    session.submit_sequence(event["prediction"])
                else:
                    session.submit_sequence(event["start"])
            elif kind == "declare":
                session.declare_impossible()
            elif kind == "reveal":
                continue  # derived, re-emitted by the move replay
            else:
                raise InvalidSpecError(f"unknown event type {kind!r}")
        return session


def new_session(spec: GameSpec) -> Session:
    return Session(spec)


@dataclass
class PairedSession:
    """Split-screen play of two isomorphic games; every move hits both."""

    left: Session
    right: Session
    mapping: dict[str, str]

    @staticmethod
    def create(left_spec: GameSpec, right_spec: GameSpec, mapping: dict[str, str]) -> "PairedSession":
        from .catalog.pairs import build_isomorphic_pair

        left = Session(left_spec)
        right = Session(right_spec)
        build_isomorphic_pair(left.space, right.space, mapping)  # validates
        return PairedSession(left, right, dict(mapping))

    def play_move(self, label: str, side: str = "left") -> dict:
        if side == "left":
            l_label, r_label = label, self.mapping[label]
        else:
            inverse_map = {v: k for k, v in self.mapping.items()}
            l_label, r_label = inverse_map[label], label
        if self.left.status is Status.IN_PROGRESS:
            self.left.play_move(l_label)
        if self.right.status is Status.IN_PROGRESS:
            self.right.play_move(r_label)
        return self.visible_state()

    def visible_state(self) -> dict:
        return {
            "pair": True,
            "mapping": self.mapping,
            "left": self.left.visible_state(),
            "right": self.right.visible_state(),
            "status": (
                Status.WON.value
                if Status.WON in (self.left.status, self.right.status)
                else Status.IN_PROGRESS.value
            ),
        }
