"""Command dispatch: request in, exit status and rendered report out"""
import logging
from dataclasses import dataclass, field

import click
from pydantic import BaseModel, ValidationError

from grasscodes.config import Config
from grasscodes.errors import GrassCodesError, InvalidParameterError
from grasscodes.models import CommandRequest
from grasscodes.utils.render import render_json, render_tables

logger = logging.getLogger(__name__)

HANDLERS = {}


@dataclass
class CliState:
    config: type
    output_format: str


@dataclass
class Outcome:
    """What a handler produced; text, when set, replaces the tables in table mode"""
    record: BaseModel
    tables: list = field(default_factory=list)
    text: str | None = None
    exit_code: int = 0


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    output: str
    error: bool = False


def handles(subcommand):
    def register(fn):
        HANDLERS[subcommand] = fn
        return fn
    return register


def build_request(state, subcommand, **fields):
    """Validate command-line values into a CommandRequest"""
    try:
        return CommandRequest(
            subcommand=subcommand,
            format=state.output_format,
            ring_budget=state.config.RING_BUDGET,
            enumeration_budget=state.config.ENUMERATION_BUDGET,
            **fields,
        )
    except ValidationError as e:
        messages = '; '.join(err['msg'].removeprefix('Value error, ') for err in e.errors())
        raise InvalidParameterError(messages) from None


def run(request, app_config=Config):
    handler = HANDLERS[request.subcommand]
    try:
        outcome = handler(request, app_config)
    except GrassCodesError as e:
        logger.error(f'{request.subcommand} failed: {e}')
        return CommandResult(e.exit_code, f'error: {e}', error=True)

    if request.format == 'json':
        output = render_json(outcome.record)
    elif outcome.text is not None:
        output = outcome.text
    else:
        output = render_tables(outcome.tables)
    return CommandResult(outcome.exit_code, output)


def invoke(state, subcommand, **fields):
    """Build, run and print; exits the click context with the command's status"""
    try:
        request = build_request(state, subcommand, **fields)
    except GrassCodesError as e:
        logger.error(f'{subcommand}: rejected request: {e}')
        result = CommandResult(e.exit_code, f'error: {e}', error=True)
    else:
        result = run(request, state.config)
    click.echo(result.output, err=result.error)
    click.get_current_context().exit(result.exit_code)


from grasscodes.commands import construct, reports, verify  # noqa: E402

COMMAND_MODULES = (construct, reports, verify)
