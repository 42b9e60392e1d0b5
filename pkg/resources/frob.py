# resources/frob.py
from __future__ import annotations

from typing import Optional

import click

from resources.common import OUTPUT_FORMATS, fail, rank_option, require, size_option, variant_option
from services.chowfy import grfrob_uniform
from services.qsym import eval_t, ps_normalized
from services.render_service import render_laurent, render_qsym


@click.command("frob")
@rank_option
@size_option
@variant_option
@click.option("--out", type=click.Choice(OUTPUT_FORMATS), default="json", show_default=True)
@click.option("--ps", is_flag=True, help="Print the normalized principal specialization instead")
@click.option("--at-minus-one", is_flag=True, help="Print the series at t = -1")
def frob_command(rank: Optional[int], size: Optional[int], variant: str, out: str, ps: bool, at_minus_one: bool):
    """Graded Frobenius series of the (augmented) Chow ring of U_{r,n}, in the F-basis."""
    require(r=rank, n=size)
    if ps and at_minus_one:
        raise click.UsageError("--ps and --at-minus-one are mutually exclusive")
    try:
        series = grfrob_uniform(rank, size, variant == "aug")
        if ps:
            rendered = render_laurent(ps_normalized(series, size), out)
        elif at_minus_one:
            rendered = render_qsym(eval_t(series, -1), out)
        else:
            rendered = render_qsym(series, out)
    except Exception as e:
        fail(e, module="chowfy")
    click.echo(rendered)
