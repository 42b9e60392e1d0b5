# resources/hilb.py
from __future__ import annotations

from typing import Optional

import click

from resources.common import OUTPUT_FORMATS, fail, rank_option, require, size_option, variant_option
from services.chowfy import hilb, hilb_q_uniform, load_flats_file, uniform
from services.render_service import render_laurent


@click.command("hilb")
@click.option(
    "--family",
    type=click.Choice(["uniform", "quniform", "file"]),
    default="uniform",
    show_default=True,
    help="U_{r,n}, the q-analog U_{r,n}(q), or a matroid read from --flats",
)
@rank_option
@size_option
@variant_option
@click.option("--flats", "flats_path", type=click.Path(dir_okay=False), default=None, help="Flats file (JSON)")
@click.option("--out", type=click.Choice(OUTPUT_FORMATS), default="json", show_default=True)
@click.option("--q-value", type=int, default=None, help="Specialize q (quniform only)")
def hilb_command(
    family: str,
    rank: Optional[int],
    size: Optional[int],
    variant: str,
    flats_path: Optional[str],
    out: str,
    q_value: Optional[int],
):
    """Hilbert series of the (augmented) Chow ring."""
    augmented = variant == "aug"
    if family == "file":
        if flats_path is None:
            raise click.UsageError("--family file needs --flats PATH")
        if rank is not None or size is not None:
            raise click.UsageError("-r/-n cannot be combined with --family file")
    else:
        require(r=rank, n=size)
        if flats_path is not None:
            raise click.UsageError("--flats is only valid with --family file")
    if q_value is not None and family != "quniform":
        raise click.UsageError("--q-value is only valid with --family quniform")

    try:
        if family == "file":
            series = hilb(load_flats_file(flats_path), augmented)
        elif family == "uniform":
            series = hilb(uniform(rank, size), augmented)
        else:
            series = hilb_q_uniform(rank, size, augmented, q_value=q_value)
    except Exception as e:
        fail(e, module="chowfy")
    click.echo(render_laurent(series, out))
