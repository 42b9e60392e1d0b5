# resources/eulerian.py
from __future__ import annotations

from typing import Callable, Optional

import click

from resources.common import OUTPUT_FORMATS, fail, require, size_option
from services import eulerian, permstat
from services.render_service import render_laurent, render_qsym

# kind -> (q = 1 version, q-version)
POLYNOMIALS: dict[str, tuple[Callable, Callable]] = {
    "eulerian": (permstat.eulerian_A, permstat.eulerian_A_q),
    "derangement": (permstat.eulerian_d, permstat.eulerian_d_q),
    "binomial": (permstat.eulerian_binomial, permstat.eulerian_binomial_q),
}

QUASISYMMETRIC: dict[str, Callable] = {
    "Q": eulerian.Q,
    "Q0": eulerian.Q0,
    "Qtilde": eulerian.Qtilde,
}


@click.command("eulerian")
@click.option(
    "--kind",
    type=click.Choice([*POLYNOMIALS, *QUASISYMMETRIC]),
    required=True,
    help="Eulerian-type polynomial or Eulerian quasisymmetric function",
)
@size_option
@click.option("--q", "with_q", is_flag=True, help="Keep the q-statistic (polynomial kinds only)")
@click.option("--out", type=click.Choice(OUTPUT_FORMATS), default="json", show_default=True)
def eulerian_command(kind: str, size: Optional[int], with_q: bool, out: str):
    """Eulerian polynomials and their quasisymmetric refinements."""
    require(n=size)
    if kind in QUASISYMMETRIC and with_q:
        raise click.UsageError(f"--q does not apply to --kind {kind}")
    try:
        if kind in QUASISYMMETRIC:
            rendered = render_qsym(QUASISYMMETRIC[kind](size), out)
        else:
            plain, refined = POLYNOMIALS[kind]
            rendered = render_laurent((refined if with_q else plain)(size), out)
    except Exception as e:
        fail(e, module="eulerian" if kind in QUASISYMMETRIC else "permstat")
    click.echo(rendered)
