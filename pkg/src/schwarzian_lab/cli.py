"""
Command-line front end.

    schwarzian-lab bounds    --alpha-range -60deg:60deg:15deg --beta 0.25
    schwarzian-lab sharpness --alpha 0 --beta 0.75 --z0 0.2,0.5,0.99
    schwarzian-lab verify    --seed 0
    schwarzian-lab norm      f.series
    schwarzian-lab plot      --kind surface --out bounds.svg

Angles take an optional ``deg`` or ``rad`` suffix (default radians) and may be
written with ``pi``, e.g. ``pi/6``. Ranges are inclusive ``start:stop:step``.

Series files are the text record of :meth:`ComplexSeries.to_text`: a line
``order N`` followed by ``n re im`` lines, one per coefficient; anything else
is rejected.

CSV output has a header row, ``.`` decimals and 15 significant digits; JSON
output mirrors the CSV column names. Identical arguments give byte-identical
CSV/JSON. Exit status is 0 on success, 1 when a verification suite fails and
2 on configuration or input errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from dataclasses import dataclass

import numpy as np

from . import bounds as B
from .errors import ConfigError, ExtremalNotDefined, ParseError, SchwarzianLabError, NotLocallyUnivalentAtOrigin
from .extremal import (
    ExtremalKind,
    blaschke_extremal,
    closed_form_S_f0,
    extremal_schwarzian,
    extremal_series,
    half_plane_extremal,
    sharpness_witness,
)
from .grid import CLOSED_FORM_RCAP, GridSpec
from .norm import estimate_norm, radial_profile
from .schwarzian import preschwarzian_series, schwarzian_series
from .series import DEFAULT_ORDER, R_MAX, ComplexSeries, eval_series, truncation_error
from .verify import default_params, ordered_map, run_suites

_PI_RE = re.compile(r"^([+-]?(?:\d+(?:\.\d*)?|\.\d+)?)\*?pi(?:/((?:\d+(?:\.\d*)?|\.\d+)))?$")


def parse_angle(text):
    """Parse ``0.5``, ``30deg``, ``-pi/6``, ``2pi/3rad``; returns radians."""
    t = text.strip().lower()
    scale = 1.0
    if t.endswith("deg"):
        t, scale = t[:-3], math.pi / 180.0
    elif t.endswith("rad"):
        t = t[:-3]
    t = t.strip()
    m = _PI_RE.match(t)
    try:
        if m:
            k = m.group(1)
            coef = 1.0 if k in ("", "+") else (-1.0 if k == "-" else float(k))
            value = coef * math.pi / (float(m.group(2)) if m.group(2) else 1.0)
        else:
            value = float(t)
    except ValueError:
        raise ConfigError(f"cannot parse angle {text!r}") from None
    return value * scale


def parse_number(text):
    try:
        return float(text)
    except ValueError:
        raise ConfigError(f"cannot parse number {text!r}") from None


def parse_range(text, parse=parse_number):
    """Inclusive ``start:stop:step``; an empty list when ``stop < start``."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"range {text!r} must look like start:stop:step")
    a, b, step = (parse(x) for x in parts)
    if not step > 0:
        raise ConfigError(f"range step must be positive, got {step}")
    if b < a:
        return []
    n = int(math.floor((b - a) / step + 1e-9)) + 1
    return [a + k * step for k in range(n)]


def parse_list(text, parse=parse_number):
    return [parse(x) for x in text.split(",") if x.strip()]


def parse_grid(text):
    parts = text.split(",")
    if len(parts) != 4:
        raise ConfigError("--grid expects angles,radii,rcap,refine")
    try:
        return GridSpec(int(parts[0]), int(parts[1]), float(parts[2]), int(parts[3]))
    except ValueError as exc:
        raise ConfigError(f"bad --grid {text!r}: {exc}") from None


def parse_sweep(text):
    parts = text.split(",")
    if len(parts) != 3:
        raise ConfigError("--sweep expects m,p,q")
    try:
        out = tuple(int(x) for x in parts)
    except ValueError:
        raise ConfigError(f"bad --sweep {text!r}") from None
    if min(out) < 1:
        raise ConfigError("--sweep entries must be positive")
    return out


@dataclass
class RunConfig:
    command: str
    alphas: list | None = None
    betas: list | None = None
    z0s: list | None = None
    grid: GridSpec | None = None
    sweep: tuple | None = None
    order: int = DEFAULT_ORDER
    fmt: str = "csv"
    out: str | None = None
    seed: int = 0

    def params(self):
        out = []
        for a in (self.alphas if self.alphas is not None else [0.0]):
            for b in (self.betas if self.betas is not None else [0.0]):
                try:
                    out.append(B.make_params(a, b))
                except SchwarzianLabError as exc:
                    raise ConfigError(str(exc)) from None
        return out


# formatting

def _fmt(v):
    if v is None:
        return None
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        v = float(v)
        if not math.isfinite(v):
            return None
        return float(f"{v:.15g}")
    return v


def _csv_cell(v):
    v = _fmt(v)
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.15g}"
    return str(v)


def render(rows, columns, fmt, command):
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([_csv_cell(row.get(c)) for c in columns])
        return buf.getvalue()
    if fmt == "json":
        doc = {"command": command, "columns": columns,
               "rows": [{c: _fmt(row.get(c)) for c in columns} for row in rows]}
        return json.dumps(doc, indent=2) + "\n"
    raise ConfigError(f"format {fmt!r} not supported for {command}")


def emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# commands

BOUNDS_COLUMNS = ["alpha", "beta", "d", "regime", "lambda", "schwarzian_bound", "preschwarzian_bound"]


def cmd_bounds(cfg):
    rows = []
    for p in cfg.params():
        rows.append({
            "alpha": p.alpha,
            "beta": p.beta,
            "d": p.d,
            "regime": p.regime.value,
            "lambda": p.lam,
            "schwarzian_bound": B.schwarzian_norm_bound(p),
            "preschwarzian_bound": B.preschwarzian_norm_bound(p),
        })
    return rows, BOUNDS_COLUMNS


SHARPNESS_COLUMNS = [
    "alpha", "beta", "z0", "witness", "weighted_closed", "weighted_series", "series_tail",
    "pointwise_weighted", "norm_bound", "pointwise_ratio", "norm_ratio", "error",
]

DEFAULT_Z0 = [0.0, 0.5, 0.9, 0.99]


def sharpness_row(p, z0, order=DEFAULT_ORDER, witness="auto"):
    """One row of the sharpness table: the witness's weighted ``|S(z0)|`` against the bounds."""
    row = {"alpha": p.alpha, "beta": p.beta, "z0": z0}
    try:
        if witness == "auto":
            spec = sharpness_witness(z0, p)
        elif witness == "blaschke":
            spec = blaschke_extremal(z0, p)
        else:
            spec = half_plane_extremal(p)
    except ExtremalNotDefined as exc:
        row["error"] = f"ExtremalNotDefined: {exc}"
        return row
    row["witness"] = spec.kind.value
    weight = (1.0 - z0 * z0) ** 2
    row["weighted_closed"] = weight * abs(extremal_schwarzian(spec, z0))
    if abs(z0) <= R_MAX:
        S = schwarzian_series(extremal_series(spec, order))
        val, tail = eval_series(S, z0, with_error=True)
        row["weighted_series"] = weight * abs(val)
        row["series_tail"] = weight * tail
    row["pointwise_weighted"] = weight * B.pointwise_bound(p, abs(z0)).value
    row["norm_bound"] = B.schwarzian_norm_bound(p)
    row["pointwise_ratio"] = row["weighted_closed"] / row["pointwise_weighted"]
    row["norm_ratio"] = row["weighted_closed"] / row["norm_bound"]
    return row


def cmd_sharpness(cfg, witness="auto"):
    z0s = cfg.z0s if cfg.z0s is not None else DEFAULT_Z0
    jobs = [(p, z0) for p in cfg.params() for z0 in z0s]
    rows = ordered_map(lambda job: sharpness_row(job[0], job[1], cfg.order, witness), jobs)
    return rows, SHARPNESS_COLUMNS


VERIFY_COLUMNS = ["suite", "passed", "worst", "tolerance", "n_checked", "detail"]


def random_params(seed, n=8):
    """``n`` parameter pairs drawn uniformly from the class domain."""
    rng = np.random.default_rng(seed)
    alphas = rng.uniform(-0.49 * math.pi, 0.49 * math.pi, n)
    betas = rng.uniform(0.0, 0.98, n)
    return [B.make_params(float(a), float(b)) for a, b in zip(alphas, betas)]


def cmd_verify(cfg, fault=None):
    """Run the invariant suites; with no alpha or beta given, a default grid plus seeded random pairs."""
    if cfg.alphas is None and cfg.betas is None:
        params = default_params() + random_params(cfg.seed)
    else:
        params = cfg.params()
    if not params:
        return [], VERIFY_COLUMNS
    results = run_suites(params, fault=fault, sweep=cfg.sweep, grid=cfg.grid)
    return [r.as_row() for r in results], VERIFY_COLUMNS


NORM_COLUMNS = ["quantity", "weight_power", "value", "argmax_re", "argmax_im", "r_cap", "truncation_note"]


def load_series(path, check_normalized=True):
    try:
        with open(path, encoding="utf-8") as fh:
            s = ComplexSeries.from_text(fh.read())
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from None
    if s.order < 3:
        raise ParseError("need at least order 3 for a Schwarzian")
    if s.coeffs[1] == 0:
        raise NotLocallyUnivalentAtOrigin("coefficient c1 = f'(0) is zero")
    if check_normalized and (s.coeffs[0] != 0 or s.coeffs[1] != 1):
        raise ConfigError("series is not normalized (need c0 = 0, c1 = 1); pass --no-normalization-check")
    return s


def cmd_norm(cfg, series):
    grid = cfg.grid or GridSpec(256, 129, R_MAX, 3)
    if grid.r_cap > R_MAX:
        raise ConfigError(f"series evaluations are capped at r = {R_MAX}")
    pre = preschwarzian_series(series)
    sch = schwarzian_series(series)
    rows = []
    for name, s, k in (("preschwarzian", pre, 1), ("schwarzian", sch, 2)):
        est = estimate_norm(s, k, grid)
        rows.append({
            "quantity": name,
            "weight_power": k,
            "value": est.value,
            "argmax_re": est.argmax.real,
            "argmax_im": est.argmax.imag,
            "r_cap": grid.r_cap,
            "truncation_note": est.truncation_note,
        })
    return rows, NORM_COLUMNS


def surface_data(alphas, betas):
    Z = np.array([[B.schwarzian_norm_bound(B.make_params(a, b)) for a in alphas] for b in betas])
    return Z


def cmd_plot(cfg, kind="surface"):
    """Render an SVG: the norm bound over ``(alpha, beta)`` or a radial profile."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    if cfg.fmt != "svg":
        raise ConfigError("plot only writes svg")
    plt.rcParams["svg.hashsalt"] = "schwarzian-lab"
    fig, ax = plt.subplots(figsize=(6, 4.5))
    if kind == "surface":
        alphas = cfg.alphas if cfg.alphas and len(cfg.alphas) > 1 else list(np.linspace(-1.4, 1.4, 50))
        betas = cfg.betas if cfg.betas and len(cfg.betas) > 1 else list(np.linspace(0.0, 0.95, 50))
        Z = surface_data(alphas, betas)
        mesh = ax.pcolormesh(alphas, betas, Z, shading="nearest", cmap="viridis")
        fig.colorbar(mesh, ax=ax, label="Schwarzian norm bound")
        ca, cb = B.regime_curve()
        ax.plot(ca, cb, color="white", lw=1.5, label="d = 1/4")
        ax.set_xlabel("alpha (rad)")
        ax.set_ylabel("beta")
        ax.legend(loc="upper right")
    elif kind == "profile":
        for p in cfg.params():
            prof = radial_profile(lambda z, p=p: closed_form_S_f0(z, p), 2, 0.0, 400, CLOSED_FORM_RCAP)
            r, v = zip(*prof)
            ax.plot(r, v, label=f"alpha={p.alpha:.3g}, beta={p.beta:.3g}")
            ax.axhline(B.boundary_supremum(p), ls=":", color="gray")
        ax.set_xlabel("r")
        ax.set_ylabel("(1-r^2)^2 |S(r)|, half-plane extremal")
        ax.legend()
    else:
        raise ConfigError(f"unknown plot kind {kind!r}")
    buf = io.StringIO()
    fig.savefig(buf, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buf.getvalue()


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", help="single alpha (radians; suffix deg allowed)")
    common.add_argument("--beta", help="single beta")
    common.add_argument("--alpha-range", help="inclusive start:stop:step")
    common.add_argument("--beta-range", help="inclusive start:stop:step")
    common.add_argument("--z0", help="comma-separated real points")
    common.add_argument("--z0-range", help="inclusive start:stop:step")
    common.add_argument("--grid", help="angles,radii,rcap,refine")
    common.add_argument("--sweep", help="m,p,q Dieudonne sweep resolution")
    common.add_argument("--order", type=int, default=DEFAULT_ORDER, help="series truncation order")
    common.add_argument("--format", dest="fmt", choices=["csv", "json", "svg"])
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("--seed", type=int, default=0)

    ap = argparse.ArgumentParser(prog="schwarzian-lab", description=__doc__.split("\n\n")[0].strip())
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("bounds", parents=[common], help="tabulate the norm bounds")
    sp = sub.add_parser("sharpness", parents=[common], help="extremal values against the bounds")
    sp.add_argument("--witness", choices=["auto", "blaschke", "halfplane"], default="auto")
    vp = sub.add_parser("verify", parents=[common], help="run invariant suites")
    vp.add_argument("--inject-fault", choices=["perturb-b"])
    np_ = sub.add_parser("norm", parents=[common], help="norms of a series read from a file")
    np_.add_argument("series_file")
    np_.add_argument("--no-normalization-check", action="store_true")
    pp = sub.add_parser("plot", parents=[common], help="SVG figures")
    pp.add_argument("--kind", choices=["surface", "profile"], default="surface")
    return ap


def config_from_args(args):
    cfg = RunConfig(command=args.command)
    if args.alpha_range:
        cfg.alphas = parse_range(args.alpha_range, parse_angle)
    elif args.alpha is not None:
        cfg.alphas = parse_list(args.alpha, parse_angle)
    if args.beta_range:
        cfg.betas = parse_range(args.beta_range)
    elif args.beta is not None:
        cfg.betas = parse_list(args.beta)
    if args.z0_range:
        cfg.z0s = parse_range(args.z0_range)
    elif args.z0 is not None:
        cfg.z0s = parse_list(args.z0)
    if args.grid:
        cfg.grid = parse_grid(args.grid)
    if args.sweep:
        cfg.sweep = parse_sweep(args.sweep)
    if args.order < 3:
        raise ConfigError("--order must be at least 3")
    cfg.order = args.order
    cfg.fmt = args.fmt or ("svg" if args.command == "plot" else "csv")
    cfg.out = args.out
    cfg.seed = args.seed
    return cfg


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        if cfg.command == "plot":
            emit(cmd_plot(cfg, args.kind), cfg.out)
            return 0
        if cfg.fmt == "svg":
            raise ConfigError(f"{cfg.command} writes csv or json, not svg")
        status = 0
        if cfg.command == "bounds":
            rows, cols = cmd_bounds(cfg)
        elif cfg.command == "sharpness":
            rows, cols = cmd_sharpness(cfg, args.witness)
        elif cfg.command == "verify":
            rows, cols = cmd_verify(cfg, args.inject_fault)
            status = 0 if all(r["passed"] for r in rows) else 1
        else:
            series = load_series(args.series_file, not args.no_normalization_check)
            rows, cols = cmd_norm(cfg, series)
        emit(render(rows, cols, cfg.fmt, cfg.command), cfg.out)
        return status
    except SchwarzianLabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
