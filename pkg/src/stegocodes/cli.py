"""Command-line interface.

One binary, six verbs: construct, embed, extract, table, verify, convert,
metrics.  All file formats are defined in :mod:`stegocodes.formats`; every
command is deterministic for a fixed seed, and the exit code is 0 exactly
when the underlying verification or operation passes.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import convert as conv
from . import formats, metrics
from .config import RunConfig
from .construct import DirectSumPlan, direct_sum_construct, f5_matrix
from .errors import BudgetExceededError, StegoCodesError
from .field import Word, distance
from .perfect import verify_perfect
from .stegocode import (
    CodingTable,
    VerificationReport,
    build_coding_table,
    embed as embed_op,
    extract as extract_op,
    is_stego_matrix,
    is_stego_partition,
)


def _fail(message: str, code: int = 1):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _write_or_stdout(text: str, path):
    if path is None:
        click.echo(text, nl=False)
    else:
        Path(path).write_text(text)


def _report_lines(report: VerificationReport, params: str) -> str:
    lines = [f"kind: {report.kind}", f"params: {params}"]
    lines.append(f"result: {'PASS' if report.passed else 'FAIL'}")
    if report.witness is not None:
        w = report.witness
        if isinstance(w, tuple):
            word, idx = w
            lines.append(f"witness: word {word.to_text()} vs class {idx}")
        else:
            lines.append(f"witness: {w.to_text()}")
    if report.probabilistic:
        lines.append(f"probabilistic: true (samples={report.samples}, seed={report.rng_seed})")
    lines.append(f"work: {report.work}")
    if report.note:
        lines.append(f"note: {report.note}")
    return "\n".join(lines)


@click.group()
@click.option("--cap", type=int, default=None, help="Enumeration cap for exhaustive checks.")
@click.option("--samples", type=int, default=None, help="Sample count for probabilistic checks.")
@click.option("--seed", type=int, default=None, help="RNG seed for probabilistic checks.")
@click.pass_context
def main(ctx, cap, samples, seed):
    """Stego-codes over GF(q): construct, verify, embed, convert, measure."""
    kwargs = {}
    if cap is not None:
        kwargs["enumeration_cap"] = cap
    if samples is not None:
        kwargs["sample_count"] = samples
    if seed is not None:
        kwargs["rng_seed"] = seed
    try:
        ctx.obj = RunConfig(**kwargs)
    except ValueError as exc:
        raise click.UsageError(str(exc))


@main.command()
@click.option("--family", type=click.Choice(["direct-sum", "f5"]), default="direct-sum")
@click.option("--q", "q", type=int, default=2, help="Field size.")
@click.option("--k", "k", type=int, required=True, help="Message length.")
@click.option("--t", "t", type=int, default=1, help="Change budget.")
@click.option("--parts", type=str, default=None, help="Block sizes k1,k2,... (direct-sum).")
@click.option("-o", "--output", type=click.Path(), default=None, help="Matrix file path.")
@click.pass_obj
def construct(config, family, q, k, t, parts, output):
    """Construct a stego-coding matrix and verify it."""
    try:
        if family == "f5":
            H = f5_matrix(k)
        else:
            if parts:
                split = tuple(int(s) for s in parts.split(","))
                plan = DirectSumPlan(q, k, split)
            else:
                plan = DirectSumPlan.balanced(q, k, t)
            H = direct_sum_construct(plan)
        report = is_stego_matrix(H, config)
    except (StegoCodesError, ValueError) as exc:
        _fail(str(exc))
    doc = formats.dump_matrix(H)
    if output is None:
        click.echo(doc, nl=False)
        out = click.get_text_stream("stderr")
    else:
        Path(output).write_text(doc)
        out = click.get_text_stream("stdout")
    status = "pass" if report.passed else "FAIL"
    click.echo(
        f"{status} q={H.field.q} k={H.k} n={H.n} t={H.t} work={report.work}",
        file=out,
    )
    sys.exit(0 if report.passed else 1)


def _load_matrix(path) -> "formats.StegoMatrix":
    try:
        return formats.parse_matrix(Path(path).read_text())
    except (StegoCodesError, OSError) as exc:
        _fail(str(exc))


def _load_table(config, matrix, table_path) -> CodingTable:
    if table_path is None:
        return build_coding_table(matrix, config)
    pairs = formats.parse_table(Path(table_path).read_text())
    return CodingTable.from_entries(matrix, pairs)


@main.command()
@click.option("--matrix", "matrix_path", type=click.Path(exists=True), required=True)
@click.option("--table", "table_path", type=click.Path(exists=True), default=None)
@click.option("--cover", type=str, required=True, help="Cover word.")
@click.option("--message", type=str, required=True, help="Message word.")
@click.pass_obj
def embed(config, matrix_path, table_path, cover, message):
    """Embed a message into a cover word; prints the stego word."""
    H = _load_matrix(matrix_path)
    try:
        table = _load_table(config, H, table_path)
        x = Word.from_text(H.field, cover, H.n)
        y = Word.from_text(H.field, message, H.k)
        stego = embed_op(H, table, x, y)
    except (StegoCodesError, ValueError) as exc:
        _fail(str(exc))
    click.echo(f"{stego.to_text()} changes={distance(x, stego)}")


@main.command()
@click.option("--matrix", "matrix_path", type=click.Path(exists=True), required=True)
@click.option("--stego", type=str, required=True, help="Stego word.")
@click.pass_obj
def extract(config, matrix_path, stego):
    """Extract the embedded message from a stego word."""
    H = _load_matrix(matrix_path)
    try:
        x = Word.from_text(H.field, stego, H.n)
        y = extract_op(H, x)
    except (StegoCodesError, ValueError) as exc:
        _fail(str(exc))
    click.echo(y.to_text())


@main.command()
@click.option("--matrix", "matrix_path", type=click.Path(exists=True), required=True)
@click.option("-o", "--output", type=click.Path(), default=None, help="Table file path.")
@click.pass_obj
def table(config, matrix_path, output):
    """Build and write the complete coding table of a matrix."""
    H = _load_matrix(matrix_path)
    try:
        tab = build_coding_table(H, config)
    except StegoCodesError as exc:
        _fail(str(exc))
    _write_or_stdout(formats.dump_table(tab), output)


@main.command()
@click.option("--kind", type=click.Choice(["matrix", "partition", "perfect"]), required=True)
@click.argument("input_path", type=click.Path(exists=True))
@click.option("--t", "t", type=int, default=None, help="Radius (required for perfect).")
@click.option(
    "--mode",
    type=click.Choice(["auto", "exhaustive", "sampled"]),
    default="auto",
    help="Partition verification mode.",
)
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.pass_obj
def verify(config, kind, input_path, t, mode, as_json):
    """Verify a matrix, partition, or perfect code; exit 0 iff it passes."""
    text = Path(input_path).read_text()
    try:
        if kind == "matrix":
            H = formats.parse_matrix(text)
            if t is not None and t != H.t:
                H = type(H)(H.rows, t)
            report = is_stego_matrix(H, config)
            params = f"q={H.field.q} k={H.k} n={H.n} t={H.t}"
            payload = {"params": params, **report.to_dict()}
            rendered = _report_lines(report, params)
            passed = report.passed
        elif kind == "partition":
            S = formats.parse_partition(text)
            if t is not None and t != S.t:
                S = type(S)(S.field, S.n, t, parts=S._parts)
            report = is_stego_partition(S, config, mode=mode)
            params = f"q={S.field.q} n={S.n} M={S.M} t={S.t}"
            payload = {"params": params, **report.to_dict()}
            rendered = _report_lines(report, params)
            passed = report.passed
        else:
            if t is None:
                raise click.UsageError("--t is required for --kind perfect")
            code = formats.parse_code(text)
            cert = verify_perfect(code, t, config)
            payload = cert.to_dict()
            rendered = "\n".join(
                [
                    "kind: perfect",
                    f"params: q={code.field.q} n={cert.n} M={cert.M} t={cert.t}",
                    f"d: {cert.d}",
                    f"sphere_packing: {cert.sphere_packing_lhs} vs {cert.total}",
                    f"equal: {str(cert.equal).lower()}",
                    f"d_consistent: {str(cert.d_consistent).lower()}",
                    f"result: {'PASS' if cert.passed else 'FAIL'}",
                ]
            )
            passed = cert.passed
    except BudgetExceededError as exc:
        _fail(f"budget exceeded: {exc}", code=3)
    except (StegoCodesError, ValueError) as exc:
        _fail(str(exc))
    click.echo(json.dumps(payload, indent=2) if as_json else rendered)
    sys.exit(0 if passed else 1)


@main.command()
@click.option("--direction", type=click.Choice(["p2m", "m2p"]), required=True)
@click.argument("input_path", type=click.Path(exists=True))
@click.option("--t", "t", type=int, default=None, help="Radius (required for p2m).")
@click.option("-o", "--output", type=click.Path(), default=None)
@click.option("--leaders-out", type=click.Path(), default=None, help="Leaders file (p2m).")
@click.pass_obj
def convert(config, direction, input_path, t, output, leaders_out):
    """Convert a perfect code to an MLE partition (p2m) or back (m2p)."""
    text = Path(input_path).read_text()
    try:
        if direction == "p2m":
            if t is None:
                raise click.UsageError("--t is required for p2m")
            code = formats.parse_code(text)
            result = conv.perfect_to_mle(code, t, config)
            doc = formats.dump_partition(result.partition)
            _write_or_stdout(doc, output)
            if leaders_out is None and output is not None:
                leaders_out = str(output) + ".leaders"
            if leaders_out is not None:
                Path(leaders_out).write_text(formats.dump_leaders(result.coset_leaders))
            click.echo(
                f"p2m: M={result.partition.M} classes, class 0 is the input code",
                err=output is None,
            )
        else:
            S = formats.parse_partition(text)
            certs = conv.mle_to_perfect(S, config)
            payload = json.dumps([c.to_dict() for c in certs], indent=2) + "\n"
            _write_or_stdout(payload, output)
    except BudgetExceededError as exc:
        _fail(f"budget exceeded: {exc}", code=3)
    except (StegoCodesError, ValueError) as exc:
        _fail(str(exc))


@main.command("metrics")
@click.option("--matrix", "matrix_path", type=click.Path(exists=True), default=None)
@click.option("--curve", is_flag=True, help="Emit the capacity/rate curve CSV.")
@click.option("--kmax", type=int, default=8, help="Largest k for the discrete points.")
@click.option("--grid", type=int, default=101, help="Grid points over [0, 1/2].")
@click.option("--krotov", type=int, default=None, help="Evaluate the code-count bound at n.")
@click.option("--json", "as_json", is_flag=True)
@click.option("-o", "--output", type=click.Path(), default=None)
@click.pass_obj
def metrics_cmd(config, matrix_path, curve, kmax, grid, krotov, as_json, output):
    """Redundancy report for a matrix, the curve CSV, or the count bound."""
    try:
        if curve:
            rows = metrics.redundancy_curve(kmax, grid)
            _write_or_stdout(metrics.curve_csv(rows), output)
            return
        if krotov is not None:
            bound = metrics.krotov_lower_bound(krotov)
            if as_json:
                _write_or_stdout(json.dumps(bound.to_dict(), indent=2) + "\n", output)
            else:
                exact = "-" if bound.exact is None else str(bound.exact)
                _write_or_stdout(
                    f"n={bound.n} exact={exact} log2={bound.log2:.9g}\n", output
                )
            return
        if matrix_path is None:
            raise click.UsageError("need one of --matrix, --curve, --krotov")
        H = _load_matrix(matrix_path)
        tab = build_coding_table(H, config)
        report = metrics.redundancy_report(H, tab)
        if as_json:
            _write_or_stdout(json.dumps(report.to_dict(), indent=2) + "\n", output)
        else:
            d = report.to_dict()
            lines = [
                f"n={report.n} k={report.k} t={report.t}",
                f"message_rate={report.message_rate} ({d['message_rate_float']:.9g})",
                f"change_density={report.change_density} ({d['change_density_float']:.9g})",
                f"capacity={report.capacity:.9g}",
                f"redundancy={report.redundancy:.9g}",
                f"embedding_efficiency={report.embedding_efficiency} "
                f"({d['embedding_efficiency_float']:.9g})",
            ]
            _write_or_stdout("\n".join(lines) + "\n", output)
    except (StegoCodesError, ValueError) as exc:
        _fail(str(exc))


if __name__ == "__main__":
    main()
