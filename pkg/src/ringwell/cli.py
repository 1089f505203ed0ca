"""Command-line front end: spectrum tables, wavefunction samples, curve data,
verification reports, and the smooth-radius query, emitted as CSV or JSON.

Figures are emitted as plot-ready data, never rendered.  Exit codes are a
stable contract: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import dataclasses
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import click

from .charfn import (
    SignConvention,
    approx_bound,
    approx_unbound,
    cot_pi,
    coth,
    solve_bound,
    solve_unbound,
)
from .core import SystemParams, physical_energy, reduce
from .states import make_bound, make_cos, make_sin, smooth_radius
from .verify import Tolerances, VerificationReport, check_spectrum, check_state

__all__ = ["main"]


@dataclass(frozen=True)
class RunConfig:
    """Validated options shared by the subcommands.

    Exactly one of --q (with --R0) or a direct --kappa selects the well
    strength; ``params`` carries the radius for unit conversions (its charge
    is a placeholder when --kappa was given directly).
    """

    kappa: float
    params: SystemParams
    convention: SignConvention
    energy_mode: str
    fmt: str
    out: str | None
    n_max: int
    eps_max: float | None
    samples: int


def _build_config(
    q=None,
    kappa=None,
    r0=1.0,
    convention="derived",
    energy="reduced",
    fmt="csv",
    out=None,
    n_max=None,
    eps_max=None,
    samples=2,
) -> RunConfig:
    if (q is None) == (kappa is None):
        raise click.UsageError("provide exactly one of --q or --kappa")
    if r0 is None or r0 <= 0:
        raise click.UsageError("--R0 must be positive")
    if q is not None:
        if q <= 0:
            raise click.UsageError("--q must be positive (attractive well)")
        params = SystemParams(q=q, R0=r0)
        kappa = reduce(params).kappa
    else:
        if kappa <= 0:
            raise click.UsageError("--kappa must be positive")
        params = SystemParams(q=1.0, R0=r0)
    if n_max is not None and eps_max is not None:
        raise click.UsageError("provide at most one of --n-max or --eps-max")
    if n_max is None:
        n_max = 5
    if n_max < 0:
        raise click.UsageError("--n-max must be nonnegative")
    if samples < 2:
        raise click.UsageError("--samples must be at least 2")
    return RunConfig(
        kappa=kappa,
        params=params,
        convention=SignConvention(convention),
        energy_mode=energy,
        fmt=fmt,
        out=out,
        n_max=n_max,
        eps_max=eps_max,
        samples=samples,
    )


def _strength_options(f):
    f = click.option("--R0", "r0", type=float, default=1.0, show_default=True, help="Ring radius in bohr.")(f)
    f = click.option("--kappa", type=float, default=None, help="Dimensionless well strength (bypasses --q/--R0).")(f)
    f = click.option("--q", type=float, default=None, help="Well charge in elementary charges.")(f)
    return f


_convention_option = click.option(
    "--convention",
    type=click.Choice(["derived", "paper-compat"]),
    default="derived",
    show_default=True,
    help="Sign of the oscillatory characteristic equation.",
)
_energy_option = click.option(
    "--energy",
    type=click.Choice(["reduced", "hartree", "paper-compat"]),
    default="reduced",
    show_default=True,
    help="Energy column convention.",
)
_format_option = click.option(
    "--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True
)
_out_option = click.option("--out", type=click.Path(), default=None, help="Output path (default stdout).")


def _fmt_val(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def _emit(rows: list[dict], fields: list[str], fmt: str, out, comments: dict | None = None):
    """Write rows as CSV (17-significant-digit decimals) or JSON, same fields."""
    if fmt == "json":
        doc: object = rows if not comments else {**comments, "rows": rows}
        text = json.dumps(doc, indent=2) + "\n"
    else:
        lines = []
        if comments:
            for key, val in comments.items():
                rendered = " ".join(_fmt_val(v) for v in val) if isinstance(val, list) else _fmt_val(val)
                lines.append(f"# {key}: {rendered}")
        lines.append(",".join(fields))
        for row in rows:
            lines.append(",".join(_fmt_val(row[f]) for f in fields))
        text = "\n".join(lines) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


def _energy(eps: float, d: float, branch: int, mode: str, params: SystemParams) -> float:
    if mode == "reduced":
        return eps
    if mode == "hartree":
        return physical_energy(eps, params)
    # compatibility energies mirror the historic tables (atomic units, unit
    # radius): -d^2/(2 pi^2) for the localized row, +d^2/2 above it
    if branch == 0:
        return -(d * d) / (2.0 * math.pi**2)
    return (d * d) / 2.0


@click.group()
def main():
    """Spectrum of a particle on a ring with an attractive point well."""


@main.command()
@_strength_options
@_convention_option
@_energy_option
@_format_option
@_out_option
@click.option("--n-max", type=int, default=None, help="Oscillatory branches to solve (default 5).")
@click.option("--eps-max", type=float, default=None, help="Solve branches up to this reduced energy instead.")
def solve(q, kappa, r0, convention, energy, fmt, out, n_max, eps_max):
    """Characteristic-equation roots, estimates, energies and residuals."""
    cfg = _build_config(q, kappa, r0, convention, energy, fmt, out, n_max, eps_max)
    rows = []

    def row(root, d_approx):
        eps = -root.d * root.d if root.branch == 0 else root.d * root.d
        return {
            "branch": root.branch,
            "d_exact": root.d,
            "d_approx": d_approx,
            "eps": eps,
            "energy": _energy(eps, root.d, root.branch, cfg.energy_mode, cfg.params),
            "residual": root.residual,
        }

    rows.append(row(solve_bound(cfg.kappa), approx_bound(cfg.kappa)))
    n = 1
    while True:
        if cfg.eps_max is not None:
            if (n - 1) ** 2 > cfg.eps_max:
                break
        elif n > cfg.n_max:
            break
        root = solve_unbound(cfg.kappa, n, cfg.convention)
        if cfg.eps_max is not None and root.d * root.d > cfg.eps_max:
            break
        rows.append(row(root, approx_unbound(cfg.kappa, n)))
        n += 1
    _emit(rows, ["branch", "d_exact", "d_approx", "eps", "energy", "residual"], cfg.fmt, cfg.out)


@main.command()
@_strength_options
@_convention_option
@_format_option
@_out_option
@click.option("--state", "selector", type=click.Choice(["bound", "cos", "sin"]), default="bound", show_default=True)
@click.option("--n", type=int, default=1, show_default=True, help="Branch for cos/sin states.")
@click.option("--samples", type=int, default=360, show_default=True)
def wavefunction(q, kappa, r0, convention, fmt, out, selector, n, samples):
    """Samples (theta, psi, x, y) of one eigenstate over [0, 2pi)."""
    cfg = _build_config(q, kappa, r0, convention, fmt=fmt, out=out, samples=samples)
    if selector in ("cos", "sin") and n < 1:
        raise click.UsageError("--n must be at least 1 for cos/sin states")
    if selector == "bound":
        state = make_bound(cfg.kappa)
    elif selector == "cos":
        state = make_cos(cfg.kappa, n, cfg.convention)
    else:
        state = make_sin(n)
    r = cfg.params.R0
    rows = []
    for i in range(cfg.samples):
        theta = 2.0 * math.pi * i / cfg.samples
        rows.append(
            {
                "theta": theta,
                "psi": float(state.psi(theta)),
                "x": r * math.cos(theta),
                "y": r * math.sin(theta),
            }
        )
    _emit(rows, ["theta", "psi", "x", "y"], cfg.fmt, cfg.out)


@main.command()
@_strength_options
@_format_option
@_out_option
@click.option("--n-max", type=int, default=None, help="Sets the d range (0, n_max + 0.75] (default 5).")
@click.option("--samples", type=int, default=512, show_default=True)
def charplot(q, kappa, r0, fmt, out, n_max, samples):
    """Curve data for coth(pi d), cot(pi d) and the lines +-(2/kappa) d.

    Curve intersections are the spectrum roots; pole positions of cot inside
    the sampled range are listed in the header so plotting tools can split
    the branches.
    """
    cfg = _build_config(q, kappa, r0, fmt=fmt, out=out, n_max=n_max, samples=samples)
    d_max = cfg.n_max + 0.75
    poles = [float(k) for k in range(1, int(d_max) + 1)]
    rows = []
    for i in range(cfg.samples):
        d = (i + 0.5) * d_max / cfg.samples
        slope = 2.0 * d / cfg.kappa
        rows.append(
            {
                "d": d,
                "coth_pi_d": coth(math.pi * d),
                "cot_pi_d": cot_pi(d),
                "line_plus": slope,
                "line_minus": -slope,
            }
        )
    _emit(
        rows,
        ["d", "coth_pi_d", "cot_pi_d", "line_plus", "line_minus"],
        cfg.fmt,
        cfg.out,
        comments={"poles": poles},
    )


@main.command()
@_strength_options
@_convention_option
@_format_option
@_out_option
@click.option("--n-max", type=int, default=None, help="Oscillatory levels per family to verify (default 2).")
def verify(q, kappa, r0, convention, fmt, out, n_max):
    """Run the invariant suite; exit 0 only if every check passes."""
    cfg = _build_config(q, kappa, r0, convention, fmt=fmt, out=out, n_max=2 if n_max is None else n_max)
    tol = Tolerances()
    merged = VerificationReport(label=f"kappa={cfg.kappa:.17g} convention={cfg.convention.value}")
    states = [make_bound(cfg.kappa)]
    for n in range(1, cfg.n_max + 1):
        states.append(make_cos(cfg.kappa, n, cfg.convention))
        states.append(make_sin(n))
    for state in states:
        tag = f"{type(state).__name__}{getattr(state, 'branch', getattr(state, 'n', 0))}"
        for c in check_state(state, cfg.kappa, tol).checks:
            merged.checks.append(dataclasses.replace(c, name=f"{tag}_{c.name}"))
    spectrum = check_spectrum(cfg.kappa, count=2 * cfg.n_max + 1, convention=cfg.convention, tol=tol)
    merged.checks.extend(spectrum.checks)
    _emit(merged.as_rows(), ["check", "value", "tolerance", "passed"], cfg.fmt, cfg.out)
    click.echo(f"overall: {'pass' if merged.passed else 'FAIL'}", err=True)
    if not merged.passed:
        sys.exit(1)


@main.command("smooth-radius")
@click.option("--q", type=float, required=True, help="Well charge in elementary charges.")
@_energy_option
@_format_option
@_out_option
def smooth_radius_cmd(q, energy, fmt, out):
    """Ring radius at which the localized state loses its kink (d = 1/2)."""
    if q <= 0:
        raise click.UsageError("--q must be positive")
    r0 = smooth_radius(q)
    params = SystemParams(q=q, R0=r0)
    d = solve_bound(reduce(params).kappa).d
    rows = [{"q": q, "R0": r0, "d": d, "energy": _energy(-d * d, d, 0, energy, params)}]
    _emit(rows, ["q", "R0", "d", "energy"], fmt, out)
