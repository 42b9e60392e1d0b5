# resources/matroid.py
from __future__ import annotations

import click

from models.matroid import MatroidReport
from resources.common import fail, variant_option
from services.chowfy import load_flats_file
from services.exactalg import LaurentQT
from services.rankselect import matroid_report, parse_cycles
from services.render_service import json_dump, latex_laurent


def _subset_label(subset: list[int]) -> str:
    return "{" + ",".join(str(s) for s in subset) + "}"


def render_text(report: MatroidReport) -> str:
    series = LaurentQT.from_json([term.model_dump() for term in report.hilbert])
    lines = [
        f"ground: {report.ground}",
        f"rank: {report.rank}",
        "flats by rank: " + " ".join(f"{k}:{v}" for k, v in sorted(report.flats_by_rank.items())),
        f"variant: {report.variant.value}",
        f"hilbert: {latex_laurent(series)}",
        f"cd: {report.cd}",
        "flag h: " + " ".join(f"{_subset_label(e.subset)}:{e.flag_h}" for e in report.flag_vectors),
    ]
    for row in report.characters:
        lines.append(f"character {row.g}: fixed {row.fixed_side}, beta {row.beta_side}")
    return "\n".join(lines)


@click.command("matroid")
@click.option("--flats", "flats_path", type=click.Path(dir_okay=False), required=True, help="Flats file (JSON)")
@variant_option
@click.option("--aut", "auts", multiple=True, help='Automorphism in cycle notation, e.g. "(1 2)(3 4)"')
@click.option("--out", type=click.Choice(["json", "text"]), default="json", show_default=True)
def matroid_command(flats_path: str, variant: str, auts: tuple[str, ...], out: str):
    """Validate a flats file and summarize its (augmented) Chow ring."""
    try:
        matroid = load_flats_file(flats_path)
    except Exception as e:
        fail(e, module="chowfy")
    try:
        perms = [parse_cycles(text, matroid.n) for text in auts]
        report = matroid_report(matroid, variant == "aug", perms)
    except Exception as e:
        fail(e, module="rankselect")
    click.echo(json_dump(report) if out == "json" else render_text(report))
