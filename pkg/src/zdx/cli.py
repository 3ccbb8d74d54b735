"""Command-line interface.

Every subcommand is reproducible: exact arithmetic, fixed seeds, stable
ordering, LF line endings.  Exit codes: 0 success, 1 check failure,
2 usage error, 3 inadmissible input.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction

import click

from .density import (
    BalanceViolation,
    BoundCurve,
    EmptyRegion,
    InadmissiblePair,
    Provenance,
    audit_balance,
    baseline_curves,
    bound_table_rows,
    crossover,
    exponent_curve,
    optimize,
    piecewise_to_json_obj,
    regions_for,
)
from .exact import Interval, LinFrac, RootBracket, dec_str, rat, rat_str
from .hecke import (
    DEFAULT_LIMIT,
    compute_tau,
    convolution_values,
    deligne_check,
    hecke_recursion_failures,
    mollifier_from,
    multiplicativity_failures,
)
from .pairs import DEFAULT_DEPTH, ExponentPair, InvalidPair, generate_pairs
from .probes import HM_REL_TOLERANCE, mellin_probe, zeta_growth_scan
from .svg import render_curves_svg

EXIT_CHECK_FAILURE = 1
EXIT_INADMISSIBLE = 3


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _parse_rat(text: str, label: str) -> Fraction:
    try:
        return rat(text)
    except (ValueError, ZeroDivisionError):
        raise click.UsageError(f"{label} must be a rational like 17/18, got {text!r}")


def _parse_pair(text: str) -> ExponentPair:
    parts = text.split(",")
    if len(parts) != 2:
        raise click.UsageError(f"--pair expects 'kappa,lambda', got {text!r}")
    k = _parse_rat(parts[0], "kappa")
    l = _parse_rat(parts[1], "lambda")
    try:
        return ExponentPair(k, l, word=None)
    except InvalidPair as exc:
        _fail(EXIT_INADMISSIBLE, str(exc))
        raise AssertionError  # unreachable


def _parse_interval(text: str) -> Interval:
    parts = text.split(",")
    if len(parts) != 2:
        raise click.UsageError(f"--interval expects 'lo,hi', got {text!r}")
    lo = _parse_rat(parts[0], "interval endpoint")
    hi = _parse_rat(parts[1], "interval endpoint")
    if lo > hi:
        raise click.UsageError(f"interval endpoints out of order: {text!r}")
    return Interval(lo, hi)


def _parse_baselines(texts: tuple[str, ...], region: Interval) -> tuple[BoundCurve, ...]:
    extra = []
    for text in texts:
        try:
            f = LinFrac.parse(text)
        except (ValueError, ZeroDivisionError):
            raise click.UsageError(
                f"--baseline expects a curve like 4/(8s-5), got {text!r}"
            )
        extra.append(BoundCurve.from_A(f, region, Provenance(text, baseline=True)))
    return tuple(extra)


def _write_out(text: str, out: str) -> None:
    if out == "-":
        click.echo(text, nl=False)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _root_str(root) -> str:
    if isinstance(root, RootBracket):
        return f"[{rat_str(root.lo)}, {rat_str(root.hi)}]"
    return rat_str(root)


def _root_decimal(root) -> str:
    x = root.midpoint() if isinstance(root, RootBracket) else root
    return dec_str(x)


out_option = click.option(
    "--out", default="-", show_default=True, help="Output file, or - for stdout."
)


@click.group()
@click.version_option(package_name="zdx", prog_name="zdx")
def cli() -> None:
    """Exact workbench for exponent-pair zero-density bounds."""


# ---------------------------------------------------------------------------
# pairs
# ---------------------------------------------------------------------------

@cli.command("pairs")
@click.option("--depth", type=click.IntRange(min=0), default=DEFAULT_DEPTH,
              show_default=True, help="Maximum A/B word length.")
@click.option("--prune", is_flag=True, help="Drop Pareto-dominated pairs.")
@out_option
def cmd_pairs(depth: int, prune: bool, out: str) -> None:
    """Generate the exponent-pair family as JSON."""
    family = generate_pairs(depth, prune=prune)
    _write_out(family.to_json(), out)


# ---------------------------------------------------------------------------
# bound
# ---------------------------------------------------------------------------

@cli.command("bound")
@click.option("--pair", "pair_text", required=True, help="kappa,lambda (exact rationals).")
@click.option("--sigma", "sigma_text", required=True, help="Evaluation point (exact rational).")
@out_option
def cmd_bound(pair_text: str, sigma_text: str, out: str) -> None:
    """One-line report of A(sigma) and E(sigma) for a pair."""
    pair = _parse_pair(pair_text)
    sigma = _parse_rat(sigma_text, "--sigma")
    try:
        regions = regions_for(pair)
    except InadmissiblePair as exc:
        _fail(EXIT_INADMISSIBLE, str(exc))
    in1 = regions.region1.contains(sigma)
    in2 = regions.region2.contains(sigma)
    if not in1 and not in2:
        _fail(
            EXIT_INADMISSIBLE,
            f"sigma = {rat_str(sigma)} outside the validity regions "
            f"{regions.region1} and {regions.region2} of pair {pair}",
        )
    region = 1 if in1 else 2
    try:
        curve = exponent_curve(pair, region)
    except (InadmissiblePair, EmptyRegion) as exc:
        _fail(EXIT_INADMISSIBLE, str(exc))
    a = curve.eval_A(sigma)
    e = curve.eval_E(sigma)
    note = " note=region-boundary" if (in1 and in2) else ""
    line = (
        f"sigma={rat_str(sigma)} region={region} A={rat_str(a)} A_dec={dec_str(a)} "
        f"E={rat_str(e)} E_dec={dec_str(e)}{note}\n"
    )
    _write_out(line, out)


# ---------------------------------------------------------------------------
# optimize
# ---------------------------------------------------------------------------

@cli.command("optimize")
@click.option("--depth", type=click.IntRange(min=0), default=DEFAULT_DEPTH, show_default=True)
@click.option("--interval", "interval_text", default="17/18,1", show_default=True)
@click.option("--resolution", type=click.IntRange(min=1), default=256, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True)
@click.option("--include-conjectural", is_flag=True,
              help="Let the conjectural baseline compete as a candidate.")
@out_option
def cmd_optimize(depth: int, interval_text: str, resolution: int, fmt: str,
                 include_conjectural: bool, out: str) -> None:
    """Minimize E(sigma) over a pair family plus baselines."""
    interval = _parse_interval(interval_text)
    family = generate_pairs(depth)
    bound = optimize(family, interval, resolution,
                     include_conjectural=include_conjectural)
    if fmt == "json":
        _write_out(_json_text(piecewise_to_json_obj(bound)), out)
        return
    rows = bound_table_rows(bound, resolution)
    header = list(rows[0].keys()) if rows else []
    _write_out(_csv_text(header, [list(r.values()) for r in rows]), out)


# ---------------------------------------------------------------------------
# compare
# ---------------------------------------------------------------------------

@cli.command("compare")
@click.option("--depth", type=click.IntRange(min=0), default=3, show_default=True)
@click.option("--interval", "interval_text", default="17/18,1", show_default=True)
@click.option("--resolution", type=click.IntRange(min=1), default=256, show_default=True)
@click.option("--baseline", "baseline_texts", multiple=True,
              help="Extra baseline A-curve (repeatable), e.g. '4/(8s-5)'.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "text"]),
              default="text", show_default=True)
@out_option
def cmd_compare(depth: int, interval_text: str, resolution: int,
                baseline_texts: tuple[str, ...], fmt: str, out: str) -> None:
    """Optimized bound vs baselines: segments and exact crossovers."""
    interval = _parse_interval(interval_text)
    family = generate_pairs(depth)
    bound = optimize(family, interval, resolution)
    comparisons = baseline_curves() + _parse_baselines(baseline_texts, interval)

    rows: list[dict[str, str]] = []
    for seg in bound.segments:
        rows.append({
            "kind": "segment",
            "sigma": "",
            "sigma_decimal": "",
            "lo": rat_str(seg.region.lo),
            "hi": rat_str(seg.region.hi),
            "left": "",
            "right": seg.curve.provenance.label,
            "curve": str(seg.curve.A),
        })
    for prev, cur in zip(bound.segments, bound.segments[1:]):
        x = cur.region.lo
        rows.append({
            "kind": "boundary",
            "sigma": rat_str(x),
            "sigma_decimal": dec_str(x),
            "lo": "", "hi": "",
            "left": prev.curve.provenance.label,
            "right": cur.curve.provenance.label,
            "curve": "",
        })
    for seg in bound.segments:
        for base in comparisons:
            if base.region.intersect(seg.region).is_empty:
                continue
            if base.A == seg.curve.A:
                continue
            cx = crossover(seg.curve, base)
            if cx.kind != "points":
                continue
            for root in cx.points:
                if not seg.region.contains(
                    root.midpoint() if isinstance(root, RootBracket) else root
                ):
                    continue
                rows.append({
                    "kind": "baseline-crossover",
                    "sigma": _root_str(root),
                    "sigma_decimal": _root_decimal(root),
                    "lo": "", "hi": "",
                    "left": seg.curve.provenance.label,
                    "right": base.provenance.label,
                    "curve": "",
                })

    if fmt == "json":
        _write_out(_json_text(rows), out)
    elif fmt == "csv":
        header = ["kind", "sigma", "sigma_decimal", "lo", "hi", "left", "right", "curve"]
        _write_out(_csv_text(header, [[r[h] for h in header] for r in rows]), out)
    else:
        lines = []
        for r in rows:
            if r["kind"] == "segment":
                lines.append(f"segment [{r['lo']}, {r['hi']}]  {r['right']}  A = {r['curve']}")
            elif r["kind"] == "boundary":
                lines.append(f"boundary at sigma = {r['sigma']}  ({r['left']} -> {r['right']})")
            else:
                lines.append(
                    f"crossover at sigma = {r['sigma']}  ({r['left']} meets {r['right']})"
                )
        _write_out("\n".join(lines) + "\n", out)


# ---------------------------------------------------------------------------
# audit
# ---------------------------------------------------------------------------

def _audit_report_obj(report) -> dict:
    terms = []
    for t in report.terms:
        terms.append({
            "label": t.label,
            "numerator": str(t.num),
            "relation": "achieves-E" if t.achieves else "below-E",
            "certificate": t.diff_cert.kind,
            "equality_points": [
                _root_str(r) for r in t.diff_cert.roots
            ],
        })
    return {
        "pair": {"kappa": rat_str(report.pair.kappa), "lambda": rat_str(report.pair.lam)},
        "region_index": report.region_index,
        "region": {"lo": rat_str(report.region.lo), "hi": rat_str(report.region.hi)},
        "y_exponent": str(report.y),
        "t0_exponent_in_N": str(report.t0_exponent),
        "shared_denominator": str(report.denominator),
        "terms": terms,
        "passed": report.passed,
    }


@cli.command("audit")
@click.option("--pair", "pair_text", required=True, help="kappa,lambda (exact rationals).")
@click.option("--region", "region_text", type=click.Choice(["1", "2", "both"]),
              default="both", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True)
@out_option
def cmd_audit(pair_text: str, region_text: str, fmt: str, out: str) -> None:
    """Certify the exponent balance of both branches for one pair."""
    pair = _parse_pair(pair_text)
    regions = (1, 2) if region_text == "both" else (int(region_text),)
    reports = []
    for region in regions:
        try:
            reports.append(audit_balance(pair, region))
        except EmptyRegion as exc:
            click.echo(f"region {region}: skipped ({exc})", err=True)
        except InadmissiblePair as exc:
            _fail(EXIT_INADMISSIBLE, str(exc))
        except BalanceViolation as exc:
            _fail(
                EXIT_CHECK_FAILURE,
                f"balance violation in region {region}: term {exc.term} "
                f"at sigma = {rat_str(exc.witness)}",
            )
    if fmt == "json":
        _write_out(_json_text([_audit_report_obj(r) for r in reports]), out)
        return
    lines = []
    for r in reports:
        lines.append(
            f"pair {rat_str(r.pair.kappa)},{rat_str(r.pair.lam)} region {r.region_index} "
            f"{r.region}: {'PASS' if r.passed else 'FAIL'}"
        )
        lines.append(f"  Y = T^y with y = {r.y}; T0 exponent in N = {r.t0_exponent}")
        for t in r.terms:
            status = "= E identically" if t.achieves else "<= E"
            pts = ", ".join(_root_str(x) for x in t.diff_cert.roots)
            tight = f" (tight at {pts})" if pts and not t.achieves else ""
            lines.append(f"  {t.label}: ({t.num}) / ({r.denominator}) {status}{tight}")
    _write_out("\n".join(lines) + "\n", out)


# ---------------------------------------------------------------------------
# hecke-verify
# ---------------------------------------------------------------------------

@cli.command("hecke-verify")
@click.option("--limit", type=click.IntRange(min=1), default=DEFAULT_LIMIT, show_default=True)
@out_option
def cmd_hecke(limit: int, out: str) -> None:
    """Tau table checks; CSV of n, tau, m, convolution value."""
    from .hecke import MAX_LIMIT, TableLimitError

    try:
        table = compute_tau(limit)
    except TableLimitError:
        raise click.UsageError(f"--limit is capped at {MAX_LIMIT}")
    moll = mollifier_from(table)
    conv = convolution_values(table, moll, limit)
    failures = 0
    for n in range(1, limit + 1):
        if conv[n] != (1 if n == 1 else 0):
            failures += 1
    recursion = hecke_recursion_failures(table)
    mult = multiplicativity_failures(table)
    deligne = deligne_check(table)
    rows = [
        [str(n), str(table[n]), str(moll[n]), str(conv[n])]
        for n in range(1, limit + 1)
    ]
    _write_out(_csv_text(["n", "tau", "m", "convolution_value"], rows), out)
    click.echo(
        f"limit={limit} convolution_failures={failures} "
        f"recursion_failures={len(recursion)} multiplicativity_failures={len(mult)} "
        f"deligne_ok={deligne.ok} deligne_max_ratio={deligne.max_ratio_decimal}",
        err=True,
    )
    if failures or recursion or mult or not deligne.ok:
        sys.exit(EXIT_CHECK_FAILURE)


# ---------------------------------------------------------------------------
# hm-test
# ---------------------------------------------------------------------------

@cli.command("hm-test")
@click.option("--seed", type=int, default=1, show_default=True)
@click.option("--trials", type=click.IntRange(min=1), default=10_000, show_default=True)
@click.option("--dim", type=click.IntRange(min=1), default=64, show_default=True,
              help="Cap on the vector dimension.")
@click.option("--r", "r_cap", type=click.IntRange(min=1), default=16, show_default=True,
              help="Cap on the number of test vectors.")
@click.option("--tol", type=float, default=HM_REL_TOLERANCE, show_default=True)
@out_option
def cmd_hm(seed: int, trials: int, dim: int, r_cap: int, tol: float, out: str) -> None:
    """Random-system harness for the bilinear large-values inequality."""
    from .probes import hm_inequality_check, hm_random_system

    rows = []
    max_slack, worst = -1.0, 0
    for i in range(trials):
        system = hm_random_system(seed + i, dim, r_cap)
        res = hm_inequality_check(system)
        if res.rel_slack > max_slack:
            max_slack, worst = res.rel_slack, i
        rows.append([
            str(i),
            str(system.xi.shape[0]),
            str(system.phis.shape[0]),
            f"{res.lhs:.17g}",
            f"{res.rhs:.17g}",
            f"{res.rel_slack:.17g}",
        ])
    _write_out(_csv_text(["trial", "dim", "r", "lhs", "rhs", "rel_slack"], rows), out)
    click.echo(
        f"trials={trials} seed={seed} max_rel_slack={max_slack:.3e} worst_trial={worst}",
        err=True,
    )
    if max_slack > tol:
        sys.exit(EXIT_CHECK_FAILURE)


# ---------------------------------------------------------------------------
# mellin-probe
# ---------------------------------------------------------------------------

@cli.command("mellin-probe")
@click.option("--x", "x_texts", multiple=True, default=("1/2", "1", "2"),
              show_default=True, help="Positive evaluation point (repeatable).")
@click.option("--line", type=float, default=2.0, show_default=True)
@click.option("--halfwidth", type=float, default=40.0, show_default=True)
@click.option("--steps", type=click.IntRange(min=1), default=4000, show_default=True)
@click.option("--tol", type=float, default=1e-6, show_default=True)
@click.option("--imag-tol", type=float, default=1e-8, show_default=True)
@out_option
def cmd_mellin(x_texts: tuple[str, ...], line: float, halfwidth: float, steps: int,
               tol: float, imag_tol: float, out: str) -> None:
    """Gamma-kernel quadrature recovery of exp(-x)."""
    rows = []
    worst_err = worst_imag = 0.0
    for text in x_texts:
        x = float(_parse_rat(text, "--x"))
        if x <= 0:
            raise click.UsageError(f"--x must be positive, got {text!r}")
        res = mellin_probe(x, line=line, halfwidth=halfwidth, steps=steps)
        worst_err = max(worst_err, res.abs_error)
        worst_imag = max(worst_imag, res.imag_residual)
        rows.append([
            text,
            f"{res.value:.17g}",
            f"{res.target:.17g}",
            f"{res.abs_error:.17g}",
            f"{res.imag_residual:.17g}",
        ])
    _write_out(
        _csv_text(["x", "value", "target", "abs_error", "imag_residual"], rows), out
    )
    click.echo(f"max_abs_error={worst_err:.3e} max_imag_residual={worst_imag:.3e}", err=True)
    if worst_err > tol or worst_imag > imag_tol:
        sys.exit(EXIT_CHECK_FAILURE)


# ---------------------------------------------------------------------------
# zeta-probe
# ---------------------------------------------------------------------------

@cli.command("zeta-probe")
@click.option("--pair", "pair_text", default="1/14,11/14", show_default=True,
              help="Pair fixing sigma0 = lambda - kappa and the ratio exponent kappa.")
@click.option("--t-max", type=float, default=1000.0, show_default=True)
@click.option("--samples", type=click.IntRange(min=1), default=101, show_default=True)
@out_option
def cmd_zeta(pair_text: str, t_max: float, samples: int, out: str) -> None:
    """Growth scan of zeta on the line sigma0 = lambda - kappa (report only)."""
    pair = _parse_pair(pair_text)
    sigma0 = pair.lam - pair.kappa
    if not Fraction(1, 2) < sigma0 < 1:
        _fail(
            EXIT_INADMISSIBLE,
            f"lambda - kappa = {rat_str(sigma0)} is not strictly inside (1/2, 1)",
        )
    if t_max > 10_000:
        raise click.UsageError("--t-max is capped at 10000")
    rows = zeta_growth_scan(float(sigma0), t_max, samples, float(pair.kappa))
    out_rows = [[f"{t:.17g}", f"{z:.17g}", f"{ratio:.17g}"] for t, z, ratio in rows]
    _write_out(_csv_text(["t", "abs_zeta", "ratio"], out_rows), out)


# ---------------------------------------------------------------------------
# plot
# ---------------------------------------------------------------------------

@cli.command("plot")
@click.option("--depth", type=click.IntRange(min=0), default=3, show_default=True)
@click.option("--interval", "interval_text", default="17/18,1", show_default=True)
@click.option("--resolution", type=click.IntRange(min=1), default=256, show_default=True)
@out_option
def cmd_plot(depth: int, interval_text: str, resolution: int, out: str) -> None:
    """SVG of the optimized E(sigma) against the baselines."""
    interval = _parse_interval(interval_text)
    family = generate_pairs(depth)
    bound = optimize(family, interval, resolution)
    _write_out(render_curves_svg(bound, baseline_curves(), interval), out)


def main() -> None:
    cli(prog_name="zdx")


if __name__ == "__main__":
    main()
