from __future__ import annotations

import logging
import sys
from typing import Optional

import click
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

from frameworks import config
from resources.cd import cd_command
from resources.eulerian import eulerian_command
from resources.frob import frob_command
from resources.hilb import hilb_command
from resources.matroid import matroid_command
from resources.verify import verify_command

# ------------------------------------------------------------------------------
# CLI initialization
# ------------------------------------------------------------------------------


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option("0.1.0", prog_name="mcq")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Overrides MCQ_LOG_LEVEL",
)
@click.option(
    "--max-n-guard",
    type=click.IntRange(min=0),
    default=None,
    help="Overrides MCQ_MAX_N for every n-type size guard",
)
def cli(log_level: Optional[str], max_n_guard: Optional[int]):
    """
    Hilbert series, graded Frobenius series and Charney-Davis quantities of
    Chow rings and augmented Chow rings of matroids, in exact arithmetic.
    """
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel((log_level or config.log_level()).upper())
    config.set_max_n_override(max_n_guard)


# ------------------------------------------------------------------------------
# Commands
# ------------------------------------------------------------------------------

cli.add_command(hilb_command)
cli.add_command(frob_command)
cli.add_command(eulerian_command)
cli.add_command(cd_command)
cli.add_command(matroid_command)
cli.add_command(verify_command)


if __name__ == "__main__":
    cli()
