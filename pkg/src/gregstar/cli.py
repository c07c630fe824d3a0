"""Command-line interface.

Every subcommand emits bit-stable output: identical flags and seed produce
byte-identical files.  The default output directory is taken from the
``GREGSTAR_OUT`` environment variable (current directory if unset).
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
from fractions import Fraction

import click

from . import verifier
from .backend import BACKEND
from .coefficients import coeffs_from_c, extremal, vector_from_series
from .functionals import (FunctionalReport, fekete_bound, fekete_szego,
                          gen_zalcman, hankel_log, zalcman)
from .gregory import gregory, psi_boundary, psi_series
from .caratheodory import KernelMix, kernel_coefficients

FORMATS = click.Choice(["table", "json", "csv"])


def _out_path(name: str, out: str | None) -> str | None:
    if out is not None:
        return out
    base = os.environ.get("GREGSTAR_OUT")
    if base:
        os.makedirs(base, exist_ok=True)
        return os.path.join(base, name)
    return None


def _emit(text: str, path: str | None):
    if not text.endswith("\n"):
        text += "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
        click.echo(f"wrote {path}")
    else:
        click.echo(text, nl=False)


def _frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _render_rows(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, sort_keys=True)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    widths = {k: max(len(k), *(len(str(r[k])) for r in rows))
              for k in rows[0]}
    lines = ["  ".join(k.ljust(widths[k]) for k in rows[0])]
    for r in rows:
        lines.append("  ".join(str(r[k]).ljust(widths[k]) for k in rows[0]))
    return "\n".join(lines)


@click.group()
def main():
    """Sharp-bound verification lab for Gregory-coefficient starlike functions."""


@main.command("gregory")
@click.option("--n", "n_max", type=int, default=6, show_default=True,
              help="Largest index to print.")
@click.option("--format", "fmt", type=FORMATS, default="table",
              show_default=True, help="Output format.")
@click.option("--out", type=click.Path(), default=None,
              help="Output file (default: stdout or GREGSTAR_OUT).")
def cmd_gregory(n_max, fmt, out):
    """Print the exact Gregory coefficients G_0..G_n."""
    if n_max < 0:
        raise click.BadParameter("--n must be >= 0")
    rows = [{"n": n, "value": _frac(g)} for n, g in enumerate(gregory(n_max))]
    _emit(_render_rows(rows, fmt), _out_path("gregory." + fmt, out))


@main.command("psi")
@click.option("--order", type=int, default=12, show_default=True,
              help="Truncation order of the series.")
@click.option("--format", "fmt", type=FORMATS, default="table",
              show_default=True, help="Output format.")
@click.option("--out", type=click.Path(), default=None,
              help="Output file (default: stdout or GREGSTAR_OUT).")
def cmd_psi(order, fmt, out):
    """Print the truncated series of z/ln(1+z)."""
    if order < 0:
        raise click.BadParameter("--order must be >= 0")
    s = psi_series(order)
    if fmt == "json":
        _emit(s.to_json(), _out_path("psi.json", out))
        return
    rows = [{"k": k, "coeff": _frac(c)} for k, c in enumerate(s.coeffs)]
    _emit(_render_rows(rows, fmt), _out_path("psi." + fmt, out))


@main.command("boundary")
@click.option("--samples", type=int, default=512, show_default=True,
              help="Number of boundary samples (>= 8).")
@click.option("--out", type=click.Path(), default=None,
              help="CSV output file (default: stdout or GREGSTAR_OUT).")
def cmd_boundary(samples, out):
    """Emit psi(e^{i theta}) boundary samples as CSV (theta, re, im)."""
    if samples < 8:
        raise click.BadParameter("--samples must be >= 8")
    rows = [{"theta": repr(t), "re": repr(v.real), "im": repr(v.imag)}
            for t, v in psi_boundary(samples)]
    _emit(_render_rows(rows, "csv"), _out_path("boundary.csv", out))


def _functional_reports(vec) -> list[dict]:
    reports = [
        FunctionalReport.build("h21", hankel_log(vec), Fraction(1, 64)),
        FunctionalReport.build("fekete(mu=1)", fekete_szego(vec, Fraction(1)),
                               fekete_bound(Fraction(1))),
        FunctionalReport.build("zalcman", zalcman(vec), Fraction(1, 8)),
        FunctionalReport.build("gen-zalcman", gen_zalcman(vec), Fraction(1, 6)),
    ]
    return [r.to_json_dict() for r in reports]


@main.command("coeffs")
@click.option("--tau1", type=float, default=None, help="tau1 in [0, 1].")
@click.option("--tau2", type=str, default="0", show_default=True,
              help="tau2 as a complex literal, e.g. '0.3+0.2j'.")
@click.option("--tau3", type=str, default="0", show_default=True,
              help="tau3 as a complex literal.")
@click.option("--weights", type=str, default=None,
              help="Comma-separated kernel-mix weights (sum to 1).")
@click.option("--angles", type=str, default=None,
              help="Comma-separated kernel-mix angles (radians).")
@click.option("--out", type=click.Path(), default=None,
              help="JSON output file (default: stdout or GREGSTAR_OUT).")
def cmd_coeffs(tau1, tau2, tau3, weights, angles, out):
    """Taylor coefficients a2..a5 from tau coordinates or a kernel mix."""
    if (weights is None) != (angles is None):
        raise click.UsageError("--weights and --angles go together")
    if weights is not None:
        try:
            w = tuple(float(x) for x in weights.split(","))
            a = tuple(float(x) for x in angles.split(","))
            mix = KernelMix(w, a)
        except ValueError as exc:
            raise click.UsageError(str(exc))
        c1, c2, c3, c4 = kernel_coefficients(mix, 4)
        source = {"sampler": "kernel-mix", "weights": list(w),
                  "angles": list(a)}
    elif tau1 is not None:
        from .caratheodory import CaratheodoryParams, c_from_tau
        try:
            params = CaratheodoryParams(tau1, complex(tau2), complex(tau3))
        except ValueError as exc:
            raise click.UsageError(str(exc))
        c1, c2, c3 = c_from_tau(params)
        c4 = 0j  # not determined by three tau coordinates
        source = {"sampler": "tau", "tau1": tau1, "tau2": tau2, "tau3": tau3}
    else:
        raise click.UsageError("give either --tau1 [...] or --weights/--angles")
    vec = coeffs_from_c(c1, c2, c3, c4)
    doc = {"source": source, "coefficients": vec.to_json_dict(),
           "functionals": _functional_reports(vec)}
    _emit(json.dumps(doc, sort_keys=True), _out_path("coeffs.json", out))


@main.command("extremal")
@click.option("--k", type=int, required=True,
              help="Power in psi(t^k) defining the witness function (>= 1).")
@click.option("--order", type=int, default=None,
              help="Truncation order (default 4k+2).")
@click.option("--out", type=click.Path(), default=None,
              help="JSON output file (default: stdout or GREGSTAR_OUT).")
def cmd_extremal(k, order, out):
    """Exact series and functional values of the k-th sharpness witness."""
    if k < 1:
        raise click.BadParameter("--k must be >= 1")
    f = extremal(k, order)
    vec = vector_from_series(f.series)
    doc = {
        "k": k,
        "series": json.loads(f.series.to_json()),
        "coefficients": vec.to_json_dict(),
        "functionals": _functional_reports(vec),
    }
    _emit(json.dumps(doc, sort_keys=True), _out_path(f"extremal_k{k}.json", out))


def _parse_grid(grid: str | None, dims: int):
    if grid is None:
        return ()
    try:
        res = tuple(int(x) for x in grid.split("x"))
    except ValueError:
        raise click.BadParameter("grid must look like 100x50x64x64")
    if len(res) != dims:
        raise click.BadParameter(f"grid needs {dims} resolutions")
    return res


@main.command("verify")
@click.argument("selector",
                type=click.Choice(["h21", "fekete", "zalcman",
                                   "gen-zalcman", "all"]))
@click.option("--mu", type=str, default="1", show_default=True,
              help="Fekete-Szego parameter (rational, e.g. -2/3).")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Campaign seed.")
@click.option("--samples", type=int, default=200_000, show_default=True,
              help="Random kernel-mix sample count.")
@click.option("--grid", type=str, default=None,
              help="Grid resolutions, e.g. 100x50x64x64 (h21) or "
                   "201x101x128 (fekete).")
@click.option("--tau1-min", type=float, default=0.0, show_default=True,
              help="Lower end of the tau1 range.")
@click.option("--tau1-max", type=float, default=1.0, show_default=True,
              help="Upper end of the tau1 range.")
@click.option("--workers", type=int, default=1, show_default=True,
              help="Parallel workers for sharded campaigns.")
@click.option("--out", type=click.Path(), default=None,
              help="JSON report file (default: stdout or GREGSTAR_OUT).")
def cmd_verify(selector, mu, seed, samples, grid, tau1_min, tau1_max,
               workers, out):
    """Run bound-verification campaigns; exit 1 on any violation."""
    try:
        mu_frac = Fraction(mu)
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter("--mu must be rational, e.g. 1 or -2/3")
    verdicts = []
    try:
        if selector == "all":
            verdicts, attain = verifier.run_all(seed)
        else:
            attain = None
            if selector == "h21":
                spec = verifier.CampaignSpec(
                    "h21", sampler="tau-grid", seed=seed,
                    resolutions=_parse_grid(grid, 4),
                    tau1_range=(tau1_min, tau1_max))
                verdicts = [verifier.verify_hankel(spec)]
            elif selector == "fekete":
                spec = verifier.CampaignSpec(
                    "fekete", sampler="tau-grid", seed=seed,
                    resolutions=_parse_grid(grid, 3),
                    tau1_range=(tau1_min, tau1_max))
                verdicts = [verifier.verify_fekete(mu_frac, spec)]
            else:
                spec = verifier.CampaignSpec(
                    selector, sampler="kernel-mix", seed=seed,
                    samples=samples, workers=workers)
                fn = (verifier.verify_zalcman if selector == "zalcman"
                      else verifier.verify_gen_zalcman)
                verdicts = [fn(spec)]
    except ValueError as exc:
        raise click.UsageError(str(exc))
    doc = {"seed": seed, "backend": BACKEND,
           "verdicts": [v.to_json_dict() for v in verdicts]}
    if attain is not None:
        doc["attainment"] = attain
    _emit(json.dumps(doc, sort_keys=True),
          _out_path(f"verify_{selector}.json", out))
    if any(v.violated for v in verdicts):
        sys.exit(1)


@main.command("report")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Campaign seed.")
@click.option("--out", type=click.Path(), default=None,
              help="JSON report file; a CSV with the same stem is also written.")
def cmd_report(seed, out):
    """Run every campaign and write a consolidated JSON + CSV report."""
    verdicts, attain = verifier.run_all(seed)
    doc = {"seed": seed, "backend": BACKEND,
           "verdicts": [v.to_json_dict() for v in verdicts],
           "attainment": attain}
    path = _out_path("report.json", out)
    _emit(json.dumps(doc, sort_keys=True), path)
    rows = [{"functional": v.functional,
             "claimed_bound": _frac(v.claimed_bound),
             "empirical_max": repr(v.empirical_max),
             "margin": repr(v.margin),
             "samples": v.samples,
             "violated": v.violated,
             "attained": v.attained} for v in verdicts]
    csv_path = None
    if path:
        csv_path = os.path.splitext(path)[0] + ".csv"
    _emit(_render_rows(rows, "csv"), csv_path)
    if any(v.violated for v in verdicts):
        sys.exit(1)


if __name__ == "__main__":
    main()
