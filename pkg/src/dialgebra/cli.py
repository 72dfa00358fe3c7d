"""Command-line front end.

Usage:
    dialgebra check --class L3 --b 0
    dialgebra derive --class L6 --a 3 --family 101
    dialgebra derive --file zero2.json --rho 0 --tau 0 --sigma 0
    dialgebra table --format csv --out table.csv
    dialgebra canon 0 2 6
    dialgebra nilpotent --class L1 --a 2 --b 3
    dialgebra sweep --class L1 --a 2,3 --b 0,1 --family 111
"""

from __future__ import annotations

import json
import sys

import click

from .algebra import check_diassociative, check_left_symmetric
from .catalog import (CLASS_IDS, DEFAULT_DELTA, DEFAULT_PARAMS,
                      ConstraintViolation, instantiate, make_spec)
from .derivations import (FAMILIES, READINGS, Family, WeightTriple,
                          canonicalize_triple, defining_equations,
                          der_lie_structure, derivation_space,
                          lower_central_series)
from .fileio import ParseError, derivation_space_to_dict, load_algebra
from .linalg import format_rational, parse_rational
from .report import build_table, format_matrix, render, render_csv, sweep

__all__ = ["cli", "main"]


def _rational(ctx, param, value):
    if value is None:
        return None
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from None


def _rational_list(ctx, param, value):
    if value is None:
        return None
    if value.strip() == "":
        return []
    try:
        return [parse_rational(v) for v in value.split(",")]
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from None


def _family(ctx, param, value):
    if value is None:
        return None
    try:
        return Family.from_tag(value)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from None


def algebra_options(f):
    f = click.option("--c", "c", callback=_rational, help="Class parameter c.")(f)
    f = click.option("--b", "b", callback=_rational, help="Class parameter b.")(f)
    f = click.option("--a", "a", callback=_rational, help="Class parameter a.")(f)
    f = click.option("--class", "class_id", type=click.Choice(CLASS_IDS), help="Catalog class.")(f)
    f = click.option("--file", "path", type=click.Path(exists=True, dir_okay=False),
                     help="Algebra JSON file.")(f)
    return f


def output_options(f):
    f = click.option("--out", "out", type=click.Path(dir_okay=False), help="Write output to PATH.")(f)
    f = click.option("--format", "fmt", type=click.Choice(["md", "csv", "json"]), default="md",
                     show_default=True)(f)
    return f


def _load(path, class_id, a, b, c):
    if (path is None) == (class_id is None):
        raise click.UsageError("give exactly one of --file or --class")
    if path is not None:
        try:
            return load_algebra(path)
        except ParseError as exc:
            raise click.ClickException(f"{path}: {exc}") from None
    params = {k: v if v is not None else DEFAULT_PARAMS[k] for k, v in (("a", a), ("b", b), ("c", c))}
    try:
        return instantiate(make_spec(class_id, **params))
    except ConstraintViolation as exc:
        raise click.ClickException(f"{class_id}: constraint {exc} violated") from None


def _emit(text: str, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=not text.endswith("\n"))


def _fmt_vec(v) -> str:
    return "(" + ", ".join(format_rational(x) for x in v) + ")"


def _axiom_lines(title, report):
    if report.satisfied:
        return [f"{title}: OK"]
    lines = [f"{title}: {len(report.violations)} violation(s)"]
    for v in report.violations:
        triple = ",".join(str(i + 1) for i in v.triple)
        lines.append(f"  {v.axiom} at (e{triple.replace(',', ', e')}): residual {_fmt_vec(v.residual)}")
    return lines


@click.group()
def cli():
    """Generalized derivations of two-product algebras, in exact arithmetic."""


@cli.command()
@algebra_options
def check(path, class_id, a, b, c):
    """Check the left-symmetric and diassociative axioms."""
    alg = _load(path, class_id, a, b, c)
    ls = check_left_symmetric(alg)
    di = check_diassociative(alg)
    click.echo("\n".join(_axiom_lines("left-symmetric", ls) + _axiom_lines("diassociative", di)))
    sys.exit(0 if ls.satisfied else 1)


@cli.command()
@algebra_options
@click.option("--family", callback=_family, help="Family tag: 111,110,101,100,011,001,010,01d.")
@click.option("--delta", callback=_rational, help="delta for the 01d family.")
@click.option("--rho", callback=_rational)
@click.option("--tau", callback=_rational)
@click.option("--sigma", callback=_rational)
@click.option("--reading", type=click.Choice(READINGS), default="prop", show_default=True,
              help="Sign reading of the rho = 0 families.")
@output_options
def derive(path, class_id, a, b, c, family, delta, rho, tau, sigma, reading, fmt, out):
    """Compute a derivation space and its canonical basis."""
    alg = _load(path, class_id, a, b, c)
    raw = (rho, tau, sigma)
    if family is not None and any(x is not None for x in raw):
        raise click.UsageError("use either --family or --rho/--tau/--sigma")
    if family is None:
        if any(x is None for x in raw):
            raise click.UsageError("give --family or all of --rho, --tau, --sigma")
        triple = WeightTriple.of(*raw)
    elif family is Family.EndS:
        triple = WeightTriple.of(0, 0, 0)
    else:
        if family is Family.D01d and (delta is None or delta in (0, 1)):
            raise click.BadParameter("the 01d family needs --delta outside {0, 1}", param_hint="--delta")
        triple = defining_equations(family, reading, delta if family is Family.D01d else None)
    space = derivation_space(alg, triple)
    if fmt == "json":
        text = json.dumps(derivation_space_to_dict(space), indent=2) + "\n"
    elif fmt == "csv":
        text = "index,matrix\n" + "".join(f'{i},"{format_matrix(m)}"\n' for i, m in enumerate(space.basis))
    else:
        lines = [f"algebra: {alg.name or 'from file'}", f"triple: {triple}", f"dim: {space.dim}"]
        lines += [f"  D{i + 1} = {format_matrix(m)}" for i, m in enumerate(space.basis)]
        text = "\n".join(lines) + "\n"
    _emit(text, out)


@cli.command()
@click.option("--class", "class_id", type=click.Choice(CLASS_IDS), help="Restrict to one class.")
@click.option("--a", callback=_rational)
@click.option("--b", callback=_rational)
@click.option("--c", callback=_rational)
@click.option("--delta", callback=_rational, default=str(DEFAULT_DELTA), show_default=True)
@click.option("--reading", type=click.Choice(READINGS), default="prop", show_default=True)
@output_options
def table(class_id, a, b, c, delta, reading, fmt, out):
    """Recompute the published tables and list errata with evidence."""
    if delta in (0, 1):
        raise click.BadParameter("delta must lie outside {0, 1}", param_hint="--delta")
    classes = (class_id,) if class_id else CLASS_IDS
    try:
        report = build_table(classes, {"a": a, "b": b, "c": c}, delta, reading)
    except ConstraintViolation as exc:
        raise click.ClickException(f"constraint {exc} violated") from None
    _emit(render(report, fmt), out)
    sys.exit(0 if report.consistent else 2)


@cli.command()
@click.argument("rho")
@click.argument("tau")
@click.argument("sigma")
def canon(rho, tau, sigma):
    """Canonical family of a raw (rho, tau, sigma)."""
    try:
        t = WeightTriple.of(*(parse_rational(x) for x in (rho, tau, sigma)))
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from None
    cls = canonicalize_triple(t)
    line = cls.family.name if cls.delta is None else f"D01δ, delta={format_rational(cls.delta)}"
    if cls.family is Family.EndS:
        line = "EndS (every linear map)"
    else:
        line += f", realizing triple {defining_equations(cls)}"
    click.echo(line)


@cli.command()
@algebra_options
def nilpotent(path, class_id, a, b, c):
    """Decide characteristic nilpotency of the ordinary derivation algebra."""
    alg = _load(path, class_id, a, b, c)
    basis, consts = der_lie_structure(alg)
    series = lower_central_series(consts)
    lines = [f"Der dim {len(basis)}"]
    lines += [f"  B{i + 1} = {format_matrix(m)}" for i, m in enumerate(basis)]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if any(consts[i][j]):
                terms = " + ".join(f"{format_rational(x)}*B{k + 1}" for k, x in enumerate(consts[i][j]) if x)
                lines.append(f"  [B{i + 1}, B{j + 1}] = {terms}")
    verdict = "nilpotent" if series[-1] == 0 else "NOT nilpotent"
    lines.append(f"lower central series: {', '.join(map(str, series))}")
    lines.append(f"verdict: {verdict}")
    click.echo("\n".join(lines))


@cli.command("sweep")
@click.option("--class", "class_id", type=click.Choice(CLASS_IDS), required=True)
@click.option("--a", callback=_rational_list, help="Comma-separated values, e.g. 2,3,1/2.")
@click.option("--b", callback=_rational_list)
@click.option("--c", callback=_rational_list)
@click.option("--family", "families", multiple=True, callback=lambda ctx, p, v: [_family(ctx, p, x) for x in v],
              help="Family tag; repeatable. Default: all eight.")
@click.option("--delta", callback=_rational, default=str(DEFAULT_DELTA), show_default=True)
@click.option("--reading", type=click.Choice(READINGS), default="prop", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False))
def sweep_cmd(class_id, a, b, c, families, delta, reading, out):
    """CSV of derivation dimensions over a parameter grid."""
    grid = {"a": a, "b": b, "c": c}
    if any(v == [] for v in grid.values()):
        rows, skipped = [], []
    else:
        rows, skipped = sweep(class_id, grid, families or FAMILIES, delta, reading)
    for spec, reason in skipped:
        click.echo(f"skipped {spec}: {reason}", err=True)
    _emit(render_csv(rows), out)


def main(argv=None):
    cli.main(args=argv, prog_name="dialgebra")


if __name__ == "__main__":
    main()
