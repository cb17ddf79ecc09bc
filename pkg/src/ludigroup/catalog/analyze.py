"""Quantitative analysis of catalog games.

``analyze`` fills every report field it can compute within its budget and
marks the rest as not computed rather than guessing.  Orbit data comes from
full breadth-first enumeration; group orders come from the stabilizer
chain; where the universe is a torsor of the ambient group, the orbit count
is cross-computable as universe size / group order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import MissingSlotRepresentationError, NodeCapExceededError, NotEnumerableError
from ..orbits import orbit_partition
from ..spaces import DEFAULT_NODE_CAP, ActionSpace
from ..stabchain import StabilizerChain, chain_for_space, orbit_count_via_index

NOT_COMPUTED = None


@dataclass
class AnalysisReport:
    game: str
    configuration_count: int | None
    generator_count: int
    group_order: int | None
    orbit_count: int | None
    orbit_sizes: list[int] | None
    solvable_fraction: float | None
    notable: dict = field(default_factory=dict)

    def to_json(self) -> str:
        data = dict(self.__dict__)
        data["group_order"] = None if self.group_order is None else str(self.group_order)
        return json.dumps(data, indent=2, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "AnalysisReport":
        data = json.loads(text)
        if data.get("group_order") is not None:
            data["group_order"] = int(data["group_order"])
        return AnalysisReport(**data)


def solvable_fraction_of(sizes: list[int], total: int) -> float:
    """Probability that two independently uniform configurations share an
    orbit: the sum of squared orbit weights."""
    return float(sum(Fraction(s, total) ** 2 for s in sizes))


def analyze(space: ActionSpace, node_cap: int = DEFAULT_NODE_CAP) -> AnalysisReport:
    report = AnalysisReport(
        game=space.name,
        configuration_count=space.universe.size,
        generator_count=len(space.moves),
        group_order=NOT_COMPUTED,
        orbit_count=NOT_COMPUTED,
        orbit_sizes=NOT_COMPUTED,
        solvable_fraction=NOT_COMPUTED,
    )

    table = space.metadata.get("table")
    if table is not None:
        table.check_axioms()
        report.group_order = table.order
        report.notable["table_order"] = table.order
        report.notable["commutative"] = table.is_commutative()

    if space.has_slot_rep:
        try:
            chain = chain_for_space(space)
            space.metadata.setdefault("_chain", chain)
            report.group_order = chain.order()
            report.notable["chain_base_length"] = len(chain.base)
        except MissingSlotRepresentationError:
            pass  # partial moves: a groupoid, not a global group action

    try:
        partition = orbit_partition(space, node_cap)
        report.orbit_count = partition.count
        report.orbit_sizes = sorted(partition.sizes, reverse=True)
        total = sum(partition.sizes)
        report.solvable_fraction = solvable_fraction_of(partition.sizes, total)
    except (NotEnumerableError, NodeCapExceededError):
        pass

    if space.universe.torsor and space.universe.size is not None and report.group_order:
        try:
            by_index = orbit_count_via_index(space)
            report.notable["orbit_count_via_index"] = by_index
            if report.orbit_count is not None and report.orbit_count != by_index:
                report.notable["orbit_count_mismatch"] = True
        except ValueError:
            pass

    pieces = space.metadata.get("piece_cycles")
    if pieces:
        piece_order = StabilizerChain(list(pieces.values())).order()
        report.notable["piece_group_order"] = piece_order
    return report
