# resources/cd.py
from __future__ import annotations

from typing import Optional

import click

from models.cd_report import CDMethod
from resources.common import fail, rank_option, require, size_option, variant_option
from services.charney import cd_normalized, cd_report, cd_route
from services.render_service import json_dump, render_laurent


@click.command("cd")
@rank_option
@size_option
@variant_option
@click.option(
    "--method",
    type=click.Choice([m.value for m in CDMethod] + ["all"]),
    default="all",
    show_default=True,
    help="One route, or all of them compared in a report",
)
@click.option("--normalized", is_flag=True, help="Apply the sign (-1)^floor(D/2) (single method only)")
@click.option("--out", type=click.Choice(["json", "latex"]), default="json", show_default=True)
def cd_command(rank: Optional[int], size: Optional[int], variant: str, method: str, normalized: bool, out: str):
    """Charney-Davis quantity of the (augmented) Chow ring of U_{r,n}(q)."""
    require(r=rank, n=size)
    augmented = variant == "aug"
    if method == "all" and (out == "latex" or normalized):
        raise click.UsageError("--method all prints a JSON report; drop --out latex/--normalized")

    try:
        if method != "all":
            value = cd_route(method, rank, size, augmented)
            if normalized:
                value = cd_normalized(value, rank, augmented)
            click.echo(render_laurent(value, out))
            return
        report = cd_report(rank, size, augmented)
    except Exception as e:
        fail(e, module="charney")

    click.echo(json_dump(report))
    if not report.agreement:
        click.echo(f"[charney] routes disagree for r={rank}, n={size}, variant={variant}", err=True)
        raise click.exceptions.Exit(1)
