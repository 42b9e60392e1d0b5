# resources/verify.py
from __future__ import annotations

import logging
from typing import Optional

import click

from models.verify import SuiteName
from resources.common import fail
from services.render_service import json_dump
from services.verify_service import run_suite

logger = logging.getLogger(__name__)


@click.command("verify")
@click.option("--suite", type=click.Choice([s.value for s in SuiteName]), default="all", show_default=True)
@click.option("--max-n", type=click.IntRange(min=1), default=6, show_default=True, help="Upper bound on n")
@click.option("--seed", type=int, default=None, help="Seed for the randomized checks")
def verify_command(suite: str, max_n: int, seed: Optional[int]):
    """Run an identity suite and print a JSON report; exit 1 if any check fails."""
    try:
        report = run_suite(suite, max_n=max_n, seed=seed)
    except Exception as e:
        fail(e, module="verify")
    click.echo(json_dump(report))
    failed = [c.name for c in report.checks if not c.passed]
    if failed:
        logger.error(f"{len(failed)} check(s) failed: {', '.join(failed)}")
        raise click.exceptions.Exit(1)
