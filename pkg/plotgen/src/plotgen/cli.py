"""plotgen command line: `plotgen <figure-id> --in data.csv --out figure.png`."""

from __future__ import annotations

import sys

import click

from .figures import RENDERERS, FigureSpec, SchemaError, render


@click.command()
@click.argument("figure_id", type=click.Choice(sorted(RENDERERS)))
@click.option("--in", "inputs", type=click.Path(exists=True), multiple=True,
              required=True, help="input CSV (repeat for multi-panel figures)")
@click.option("--out", "output", type=click.Path(), required=True)
@click.option("--mark", "marks", multiple=True, metavar="X,Y,LABEL",
              help="annotate a point, e.g. --mark 0.51,0.045,x")
@click.option("--no-extremes", is_flag=True, help="skip automatic A/C labels")
@click.option("--colormap", default="RdBu_r", show_default=True)
@click.option("--dpi", type=int, default=150, show_default=True)
def main(figure_id, inputs, output, marks, no_extremes, colormap, dpi):
    parsed = []
    for mark in marks:
        try:
            x_str, y_str, label = mark.split(",", 2)
            parsed.append((float(x_str), float(y_str), label))
        except ValueError:
            click.echo(f"error: bad --mark {mark!r}, expected X,Y,LABEL", err=True)
            sys.exit(2)
    spec = FigureSpec(
        figure_id=figure_id,
        inputs=tuple(inputs),
        output=output,
        marks=tuple(parsed),
        extremes=not no_extremes,
        colormap=colormap,
        dpi=dpi,
    )
    try:
        render(spec)
    except SchemaError as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(1)
    click.echo(output)


if __name__ == "__main__":
    main()
