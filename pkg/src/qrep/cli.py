"""Command line interface.

Exit status: 0 on success, 1 when a requested check fails, 2 on usage errors
(unknown flags, unavailable series or levels).
"""

from __future__ import annotations

import csv
import io
import json
import logging
import sys

import click

from .category import LabelError, category
from .commutant import (UnsupportedLevelError, decomposition_report, projector_idempotency, projector_traces,
                        verify_fusion_relations)
from .frobenius import (AlgebraPresentation, UnsupportedAlgebraError, available_series, build_ade, check_ssfa,
                        unit_algebra)
from .modular_invariant import is_modular_invariant, is_trivial, z_matrix
from .recoupling import ColoredNet, evaluate_closed_net
from .rig import UnknownClassError, render_table, rig_table, table_to_json
from .scalars import ExactScalar
from .tqft_spaces import enumerate_basis

log = logging.getLogger("qrep")


class CheckFailed(click.ClickException):
    exit_code = 1


def _exact(x: ExactScalar) -> dict:
    z = x.to_complex()
    return {"exact": x.to_json(), "float": [z.real, z.imag]}


def _emit(ctx, payload, pretty=None, csv_rows=None):
    fmt = ctx.obj["format"]
    if fmt == "pretty" and pretty is not None:
        text = pretty
    elif fmt == "csv":
        if csv_rows is None:
            raise click.UsageError("csv output is only available for matrices")
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(csv_rows)
        text = buf.getvalue().rstrip("\n")
    else:
        text = json.dumps(payload, sort_keys=True, indent=2)
    out = ctx.obj["output"]
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


def _algebra(level: int, series: str) -> AlgebraPresentation:
    try:
        return unit_algebra(level) if series == "A" else build_ade(level, series)
    except UnsupportedAlgebraError as exc:
        raise click.UsageError(str(exc)) from exc


SERIES = click.Choice(["A", "D", "E6", "E7", "E8"])


@click.group()
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "pretty"]), default="json",
              help="Output format; csv applies to matrices only.")
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write output to this file.")
@click.option("-v", "--verbose", count=True, help="Log progress to stderr (repeat for more).")
@click.pass_context
def cli(ctx, fmt, output, verbose):
    """Exact su(2)_k Frobenius algebras, modular invariants and block-space decompositions."""
    level = logging.WARNING - 10 * min(verbose, 2)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(message)s")
    ctx.obj = {"format": fmt, "output": output}


# category ---------------------------------------------------------------------------------

@cli.group("category")
def category_group():
    """Fusion rules, dimensions, twists and S."""


@category_group.command("info")
@click.option("--level", type=click.IntRange(0), required=True)
@click.pass_context
def category_info(ctx, level):
    cat = category(level)
    payload = cat.to_json()
    payload["global_dim_squared"] = _exact(cat.global_dim_squared())
    pretty = "\n".join(
        [f"su(2)_{level}: labels 0..{level}, field Q(zeta_{cat.field.order})"]
        + [f"  {i}: d = {cat.qdim(i).to_complex().real:.6f}  theta = {cat.twist(i).pretty()}" for i in cat.labels])
    _emit(ctx, payload, pretty)


# algebras ---------------------------------------------------------------------------------

@cli.group("algebra")
def algebra_group():
    """Build or check Frobenius algebras."""


@algebra_group.command("build")
@click.option("--level", type=click.IntRange(0), required=True)
@click.option("--series", type=SERIES, required=True)
@click.pass_context
def algebra_build(ctx, level, series):
    alg = _algebra(level, series)
    payload = alg.to_json()
    payload["checks"] = check_ssfa(alg)
    _emit(ctx, payload, f"{series} at level {level}: object {list(alg.summands)}, checks {payload['checks']}")


@algebra_group.command("check")
@click.option("--level", type=click.IntRange(0), default=None)
@click.option("--series", type=SERIES, default=None)
@click.option("--file", "path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Algebra presentation as JSON (as written by 'algebra build').")
@click.pass_context
def algebra_check(ctx, level, series, path):
    if path:
        with open(path, encoding="utf-8") as fh:
            alg = AlgebraPresentation.from_json(json.load(fh))
    elif level is not None and series:
        alg = _algebra(level, series)
    else:
        raise click.UsageError("give --file or both --level and --series")
    report = check_ssfa(alg)
    _emit(ctx, {"level": alg.level, "algebra": alg.tag, "checks": report},
          "\n".join(f"{key}: {'ok' if ok else 'FAIL'}" for key, ok in sorted(report.items())))
    if not all(report.values()):
        raise CheckFailed("algebra fails " + ", ".join(sorted(key for key, ok in report.items() if not ok)))


# modular invariants -----------------------------------------------------------------------

@cli.command("zmatrix")
@click.option("--level", type=click.IntRange(0), required=True)
@click.option("--series", type=SERIES, required=True)
@click.pass_context
def zmatrix_cmd(ctx, level, series):
    """Torus partition function Z(A) of an ADE algebra."""
    Z = z_matrix(_algebra(level, series))
    rows = Z.to_lists()
    payload = {"level": level, "series": series, "Z": rows, "trivial": is_trivial(Z),
               "modular_invariant": is_modular_invariant(Z)}
    pretty = "\n".join(" ".join(f"{x:2d}" for x in r) for r in rows) + f"\ntrivial: {payload['trivial']}"
    _emit(ctx, payload, pretty, csv_rows=rows)


# block spaces -----------------------------------------------------------------------------

@cli.group("basis")
def basis_group():
    """Standard bases of the genus-g block spaces."""


@basis_group.command("list")
@click.option("--genus", type=click.IntRange(1), required=True)
@click.option("--level", type=click.IntRange(0), required=True)
@click.pass_context
def basis_list(ctx, genus, level):
    trees = [t.to_json() for t in enumerate_basis(genus, level)]
    payload = {"genus": genus, "level": level, "dimension": len(trees), "trees": trees}
    _emit(ctx, payload, "\n".join(" ".join(map(str, t)) for t in trees), csv_rows=trees)


@cli.command("decompose")
@click.option("--genus", type=click.IntRange(1), required=True)
@click.option("--level", type=click.IntRange(0), required=True)
@click.option("--series", type=click.Choice(["D", "E"]), default=None)
@click.pass_context
def decompose_cmd(ctx, genus, level, series):
    """Dimensions of the invariant subspaces cut out by the projectors."""
    try:
        rep = decomposition_report(genus, level, series)
    except UnsupportedLevelError as exc:
        raise click.UsageError(str(exc)) from exc
    payload = rep.to_json()
    payload["dims_only"] = [d for _, d in rep.dims]
    lines = [f"{name}: {d}" for name, d in rep.dims] + [f"total {rep.verlinde}"]
    for note in rep.notes:
        if not note["match"]:
            lines.append(f"note: {note['quantity']} computed {note['computed']}, stated {note['stated']}")
    _emit(ctx, payload, "\n".join(lines))


@cli.command("verify")
@click.option("--level", type=click.IntRange(0), required=True)
@click.option("--genus", type=click.IntRange(1), required=True)
@click.option("--products/--no-products", default=True, help="Include box product and sum checks.")
@click.pass_context
def verify_cmd(ctx, level, genus, products):
    """Run the exact relation suite; exit 1 if any identity fails."""
    if not available_series(level):
        raise click.UsageError(f"no D or E algebra at level {level}")
    report = verify_fusion_relations(genus, level, products=products)
    checks = {name: entry["ok"] for name, entry in report.items()}
    traces = projector_traces(genus, level)
    checks["projectors_sum_to_dimension"] = traces["D+"] + traces["D-"] == len(enumerate_basis(genus, level))
    checks.update(projector_idempotency(genus, level))
    payload = {"level": level, "genus": genus, "checks": checks, "details": report, "traces": traces}
    _emit(ctx, payload, "\n".join(f"{n}: {'ok' if ok else 'FAIL'}" for n, ok in sorted(checks.items())))
    if not all(checks.values()):
        raise CheckFailed("failed: " + ", ".join(sorted(n for n, ok in checks.items() if not ok)))


# rig ----------------------------------------------------------------------------------------

@cli.group("rig")
def rig_group():
    """Multiplication of Morita classes."""


@rig_group.command("table")
@click.option("--level", type=click.IntRange(0), required=True)
@click.option("--method", type=click.Choice(["z", "tensor"]), default="z",
              help="Multiply Z-matrices, or build the box product algebra (slow).")
@click.pass_context
def rig_table_cmd(ctx, level, method):
    try:
        table = rig_table(level, method)
    except UnknownClassError as exc:
        raise CheckFailed(str(exc)) from exc
    _emit(ctx, table_to_json(level, table), render_table(level, table))


# nets -----------------------------------------------------------------------------------------

@cli.group("net")
def net_group():
    """Closed colored nets."""


@net_group.command("eval")
@click.option("--file", "path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.pass_context
def net_eval(ctx, path):
    with open(path, encoding="utf-8") as fh:
        try:
            net = ColoredNet.from_json(json.load(fh))
        except (KeyError, ValueError) as exc:
            raise click.UsageError(f"bad net file: {exc}") from exc
    value = evaluate_closed_net(net)
    _emit(ctx, {"level": net.level, "value": _exact(value)}, value.pretty())


# entry points -----------------------------------------------------------------------------------

def run(argv=None) -> int:
    """Run one command and return its exit status instead of exiting."""
    try:
        cli.main(args=argv, prog_name="qrep", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        return 1
    except (LabelError, UnsupportedAlgebraError, UnsupportedLevelError) as exc:
        click.echo(f"Error: {exc}", err=True)
        return 2
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
