# resources/common.py
"""Options and error mapping shared by the command modules."""
from __future__ import annotations

import json
import logging
from typing import NoReturn

import click

from frameworks.errors import MCQError, exit_code_for
from models.cd_report import Variant

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("json", "csv", "latex")


def variant_option(fn):
    return click.option(
        "--variant",
        type=click.Choice([v.value for v in Variant]),
        default=Variant.chow.value,
        show_default=True,
        help="Chow ring or augmented Chow ring",
    )(fn)


def rank_option(fn):
    return click.option("-r", "rank", type=int, default=None, help="Rank r of the matroid")(fn)


def size_option(fn):
    return click.option("-n", "size", type=int, default=None, help="Ground-set size n")(fn)


def require(**values: int | None) -> None:
    """Usage error unless every named option was given."""
    missing = [name for name, value in values.items() if value is None]
    if missing:
        raise click.UsageError(f"missing option(s): {', '.join('-' + m for m in missing)}")


def fail(exc: Exception, *, module: str) -> NoReturn:
    """Print a module-tagged message (and witness, if any) to stderr and exit with the mapped code."""
    message = exc.tagged() if isinstance(exc, MCQError) else f"[{module}] {exc}"
    click.echo(message, err=True)
    witness = getattr(exc, "witness", None)
    if witness:
        click.echo(json.dumps(witness, sort_keys=True, default=str), err=True)
    code = exit_code_for(exc)
    logger.debug(f"Exiting with code {code} after {type(exc).__name__}")
    raise click.exceptions.Exit(code)
