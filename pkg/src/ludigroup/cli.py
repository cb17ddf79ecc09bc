"""Command-line interface.

Exit codes: 0 success, 1 mission-impossible or budget exhausted, 2 usage
errors (click's default).
"""

from __future__ import annotations

import json
import os
import sys

import click

from .catalog import get_game, list_games
from .catalog.analyze import analyze as analyze_game
from .catalog.schema import dumps as dump_definition
from .engine import Adjudication, Archetype, GameSpec, Session, Status
from .errors import (
    InapplicableMoveError,
    LudigroupError,
    NoSolutionError,
    NodeCapExceededError,
    OutOfCardsError,
    UnknownLabelError,
    WrongModeError,
)
from .solver import factorize
from .words import Word


@click.group()
def main():
    """Group and groupoid factorization games: analyze, solve, play, serve."""


@main.command("list")
@click.option("--json", "as_json", is_flag=True, help="machine-readable listing")
def list_cmd(as_json):
    """List the game catalog."""
    rows = []
    for gid in list_games():
        space = get_game(gid)
        rows.append(
            {
                "id": gid,
                "display": space.metadata.get("display", gid),
                "archetype": space.metadata.get("archetype", "factorization"),
                "generators": len(space.moves),
            }
        )
    if as_json:
        click.echo(json.dumps(rows, indent=2))
    else:
        width = max(len(r["id"]) for r in rows)
        for r in rows:
            click.echo(f"{r['id']:<{width}}  {r['archetype']:<13}  {r['display']}")


@main.command()
@click.argument("game")
@click.option("--json", "as_json", is_flag=True, help="emit the report as JSON")
def analyze(game, as_json):
    """Compute the quantitative report for GAME."""
    try:
        space = get_game(game)
    except UnknownLabelError:
        raise click.UsageError(f"unknown game {game!r}")
    report = analyze_game(space)
    if as_json:
        click.echo(report.to_json())
        return
    click.echo(f"game: {report.game}")
    click.echo(f"configurations: {report.configuration_count}")
    click.echo(f"generators: {report.generator_count}")
    click.echo(f"group order: {report.group_order}")
    click.echo(f"orbit count: {report.orbit_count}")
    if report.orbit_sizes is not None:
        click.echo(f"orbit sizes: {report.orbit_sizes}")
    if report.solvable_fraction is not None:
        click.echo(f"solvable fraction: {report.solvable_fraction:.4f}")
    for key, value in sorted(report.notable.items()):
        click.echo(f"{key}: {value}")


@main.command()
@click.argument("game")
def definition(game):
    """Emit the JSON game definition for GAME."""
    try:
        click.echo(dump_definition(get_game(game)))
    except UnknownLabelError:
        raise click.UsageError(f"unknown game {game!r}")


@main.command()
@click.argument("game")
@click.option("--from", "from_text", required=True, help="start configuration")
@click.option("--to", "to_text", required=True, help="target configuration")
@click.option("--max-depth", type=int, default=None)
@click.option("--node-cap", type=int, default=None)
def solve(game, from_text, to_text, max_depth, node_cap):
    """Find a shortest generator word from one configuration to another."""
    try:
        space = get_game(game)
    except UnknownLabelError:
        raise click.UsageError(f"unknown game {game!r}")
    try:
        u0 = space.from_text(from_text)
        uf = space.from_text(to_text)
    except (ValueError, KeyError, IndexError) as exc:
        raise click.UsageError(f"bad configuration: {exc}")
    kwargs = {}
    if max_depth is not None:
        kwargs["max_depth"] = max_depth
    if node_cap is not None:
        kwargs["node_cap"] = node_cap
    try:
        word = factorize(space, u0, uf, **kwargs)
    except NoSolutionError:
        click.echo("MISSION IMPOSSIBLE")
        sys.exit(1)
    except NodeCapExceededError as exc:
        click.echo(f"BUDGET EXCEEDED: {exc}")
        sys.exit(1)
    click.echo(str(word))


def _print_state(session: Session):
    state = session.visible_state()
    for key in ("configuration", "target", "goals", "word", "start"):
        if key in state:
            click.echo(f"  {key}: {state[key]}")
    if "remaining_cards" in state:
        click.echo(f"  cards: {state['remaining_cards']}")
    if state.get("revealed"):
        click.echo(f"  revealed: {', '.join(state['revealed'])}")
    click.echo(f"  status: {state['status']}")


@main.command()
@click.argument("game")
@click.option("--archetype", type=click.Choice([a.value for a in Archetype]), default=None)
@click.option("--variant", "variants", multiple=True, type=click.Choice(["blind", "constrained", "memory"]))
@click.option("--seed", type=int, default=0)
@click.option("--from", "u0", default=None, help="fixed start configuration")
@click.option("--to", "uf", default=None, help="fixed target configuration")
@click.option("--cards", type=int, default=None, help="total card budget")
def play(game, archetype, variants, seed, u0, uf, cards):
    """Interactive terminal session for GAME."""
    spec = GameSpec(
        game=game,
        archetype=None if archetype is None else Archetype(archetype),
        blind=True if "blind" in variants else None,
        constrained=True if "constrained" in variants else None,
        memory=True if "memory" in variants else None,
        seed=seed,
        u0=u0,
        uf=uf,
        card_budget=cards,
    )
    try:
        session = Session(spec)
    except LudigroupError as exc:
        raise click.UsageError(str(exc))
    click.echo(f"playing {game} ({session.archetype.value}); moves: {', '.join(session.space.moves)}")
    click.echo("commands: <move>, undo, submit <x ..>, impossible, state, quit")
    _print_state(session)
    while True:
        if session.status is not Status.IN_PROGRESS:
            click.echo(f"session over: {session.status.value}")
            return
        try:
            line = click.prompt("> ", prompt_suffix="")
        except (click.Abort, EOFError):
            return
        words = line.strip().split()
        if not words:
            continue
        cmd, args = words[0], words[1:]
        try:
            if cmd == "quit":
                return
            elif cmd == "state":
                _print_state(session)
            elif cmd == "undo":
                session.undo()
                _print_state(session)
            elif cmd == "impossible":
                verdict = session.declare_impossible()
                click.echo(f"{verdict.status.value} {verdict.detail}")
            elif cmd == "submit":
                payload = args if session.blind else (args[0] if args else "")
                verdict = session.submit_sequence(payload)
                click.echo(f"{verdict.status.value} {verdict.detail}")
            else:
                out = session.play_move(cmd)
                _print_state(session)
        except LudigroupError as exc:
            click.echo(f"error: {exc}")


@main.command()
@click.option("--port", type=int, default=None, help="overridden by LUDIGROUP_PORT")
@click.option("--host", default="127.0.0.1")
@click.option("--store", type=click.Path(), default=None, help="directory for session records")
def serve(port, host, store):
    """Run the JSON/HTTP session service."""
    import uvicorn

    from .service import create_app

    if port is None:
        port = int(os.environ.get("LUDIGROUP_PORT", "8351"))
    env_port = os.environ.get("LUDIGROUP_PORT")
    if env_port is not None:
        port = int(env_port)
    uvicorn.run(create_app(store_dir=store), host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
