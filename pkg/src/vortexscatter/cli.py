"""Command-line front end: parameter sweeps and verification tables.

Commands emit deterministic delimited tables (CSV with a header row, or a
JSON array of objects with the same key order); floats are printed with 17
significant digits in lowercase scientific notation so identical
invocations are byte-identical.

Exit codes: 0 ok, 2 usage error, 3 numerical failure, 4 verification
failure (an exact unitarity identity exceeded its gate).
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

import numpy as np

from . import asymptotics, cross_sections, unitarity
from .amplitudes import f0 as _f0
from .amplitudes import fc_values
from .angular_kernels import wrap_angle
from .errors import (ChannelCapError, DomainError, OverflowRangeError,
                     PreconditionError, VortexScatterError)
from .fields import wavefield_grid
from .partial_waves import (PartialWaveChannel, PartialWaveSet, VortexConfig,
                            build_partial_waves)

_SWEEPABLE = ("k", "r_c", "mu", "rho", "phi")

_COLUMNS = {
    "amplitude": ["k", "r_c", "mu", "rho", "phi", "fc_re", "fc_im", "f0_re",
                  "f0_im", "fc_asym_re", "fc_asym_im", "est_error"],
    "xsection": ["k", "r_c", "mu", "rho", "sigma_parseval", "sigma_quadrature",
                 "sigma_closed_short", "sigma_over_4rc", "truncation_n",
                 "est_error"],
    "optical-theorem": ["k", "r_c", "mu", "rho", "identity", "phi1", "phi2",
                        "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_residual",
                        "rel_residual", "certified_error", "exact_gate"],
    "wavefield": ["k", "r_c", "mu", "rho", "r", "phi", "psi_re", "psi_im",
                  "truncation_n"],
}

_EXACT_GATE = 1e-8


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    if isinstance(value, str):
        return value
    return format(float(value), ".16e")


def _write_table(rows: list[dict], columns: list[str], fmt: str, output: str) -> None:
    if output == "-":
        _dump_table(rows, columns, fmt, sys.stdout)
        return
    with open(output, "w", encoding="utf-8", newline="") as fh:
        _dump_table(rows, columns, fmt, fh)


def _dump_table(rows, columns, fmt, fh) -> None:
    if fmt == "json":
        payload = [{c: _json_value(r.get(c)) for c in columns} for r in rows]
        json.dump(payload, fh, indent=1)
        fh.write("\n")
        return
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow([_fmt(r.get(c)) for c in columns])


def _json_value(value):
    if value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return int(value)
    return float(value)


def _normalized_phi(phi: float) -> float:
    w = wrap_angle(phi)
    if w != phi:
        print(f"warning: phi={phi!r} normalized to {w!r}", file=sys.stderr)
    return w


def _sweep_grid(args, parser) -> list[float]:
    if args.values is not None:
        try:
            return [float(v) for v in args.values.split(",") if v.strip() != ""]
        except ValueError:
            parser.error(f"--values must be a comma list of numbers, got {args.values!r}")
    if args.start is None or args.stop is None or args.count is None:
        parser.error("--sweep needs either --values or --start/--stop/--count")
    if args.count < 1:
        parser.error("--count must be >= 1")
    if args.spacing == "log":
        if args.start <= 0 or args.stop <= 0:
            parser.error("log spacing requires positive endpoints")
        return list(np.geomspace(args.start, args.stop, args.count))
    return list(np.linspace(args.start, args.stop, args.count))


def _param_rows(args, parser) -> list[dict]:
    """Expand flags into an ordered list of parameter dicts."""
    base = {"k": args.k, "r_c": args.rc, "mu": args.mu, "rho": args.rho,
            "phi": getattr(args, "phi", 0.0)}
    if args.sweep is not None:
        name = "r_c" if args.sweep == "rc" else args.sweep
        if name not in _SWEEPABLE:
            parser.error(f"--sweep must be one of {_SWEEPABLE}")
        return [{**base, name: v} for v in _sweep_grid(args, parser)]
    if getattr(args, "phi_count", None):
        stop = args.phi_stop if args.phi_stop is not None else args.phi_start
        grid = np.linspace(args.phi_start, stop, args.phi_count)
        return [{**base, "phi": float(p)} for p in grid]
    return [base]


class _SetCache:
    """Memoize channel-set construction across sweep rows."""

    def __init__(self, tail_tol: float):
        self.tail_tol = tail_tol
        self._cache: dict[tuple, PartialWaveSet] = {}

    def get(self, k: float, r_c: float, mu: float, rho: float) -> PartialWaveSet:
        key = (k, r_c, mu, rho)
        if key not in self._cache:
            cfg = VortexConfig(k=k, r_c=r_c, mu=mu, rho=rho)
            self._cache[key] = build_partial_waves(cfg, self.tail_tol)
        return self._cache[key]


def cmd_amplitude(args, parser) -> int:
    cache = _SetCache(args.tail_tol)
    rows = []
    for p in _param_rows(args, parser):
        phi = _normalized_phi(p["phi"])
        pws = cache.get(p["k"], p["r_c"], p["mu"], p["rho"])
        cfg = pws.config
        fc = complex(fc_values(pws, phi)[0])
        est = math.sqrt(2.0 / (cfg.k * math.pi)) * pws.tail_bound
        if cfg.mu == math.floor(cfg.mu):
            f0v = 0.0 + 0.0j
        elif phi == 0.0:
            f0v = None
        else:
            f0v = _f0(cfg.k, cfg.mu, phi).value
        if cfg.s > 10.0:
            asym = (asymptotics.fc_forward(cfg) if phi == 0.0
                    else asymptotics.fc_quasiclassical(cfg, phi).value)
        else:
            asym = None
        rows.append({
            "k": cfg.k, "r_c": cfg.r_c, "mu": cfg.mu, "rho": cfg.rho, "phi": phi,
            "fc_re": fc.real, "fc_im": fc.imag,
            "f0_re": None if f0v is None else f0v.real,
            "f0_im": None if f0v is None else f0v.imag,
            "fc_asym_re": None if asym is None else asym.real,
            "fc_asym_im": None if asym is None else asym.imag,
            "est_error": est,
        })
    _write_table(rows, _COLUMNS["amplitude"], args.format, args.output)
    return 0


def cmd_xsection(args, parser) -> int:
    cache = _SetCache(args.tail_tol)
    rows = []
    for p in _param_rows(args, parser):
        pws = cache.get(p["k"], p["r_c"], p["mu"], p["rho"])
        cfg = pws.config
        par = cross_sections.sigma_parseval(pws)
        quad = cross_sections.sigma_quadrature(pws)
        closed = (cross_sections.sigma_closed_short(cfg).sigma
                  if cfg.s > 10.0 else None)
        rows.append({
            "k": cfg.k, "r_c": cfg.r_c, "mu": cfg.mu, "rho": cfg.rho,
            "sigma_parseval": par.sigma, "sigma_quadrature": quad.sigma,
            "sigma_closed_short": closed,
            "sigma_over_4rc": par.sigma / (4.0 * cfg.r_c),
            "truncation_n": par.truncation_n,
            "est_error": par.est_error + quad.est_error,
        })
    _write_table(rows, _COLUMNS["xsection"], args.format, args.output)
    return 0


def _perturbed(pws: PartialWaveSet, factor: float = 1.01) -> PartialWaveSet:
    """Test hook: scale the largest reflection coefficient, breaking
    per-channel unitarity on purpose."""
    idx = int(np.argmax(np.abs(pws.upsilons)))
    channels = list(pws.channels)
    ch = channels[idx]
    channels[idx] = PartialWaveChannel(n=ch.n, order=ch.order,
                                       upsilon=ch.upsilon * factor, phase=ch.phase)
    return PartialWaveSet(config=pws.config, channels=tuple(channels),
                          tail_bound=pws.tail_bound)


def _identity_rows(cfg: VortexConfig, tail_tol: float, phi1: float, phi2: float,
                   inject_fault: bool, full: bool) -> list[unitarity.UnitarityReport]:
    pws = build_partial_waves(cfg, tail_tol)
    if inject_fault:
        pws = _perturbed(pws)
    reports = [
        unitarity.vortex_optical_theorem(pws),
        unitarity.vortex_offdiagonal(pws, phi1, phi2),
        unitarity.singular_vortex_weak_form(cfg.k, cfg.mu, mode=1),
    ]
    if full:
        if cfg.mu == 0.0:
            reports.append(unitarity.tube_optical_theorem(pws))
            reports.append(unitarity.tube_offdiagonal_unitarity(pws, phi1, phi2))
        if cfg.s > 10.0:
            reports.append(unitarity.quasiclassical_optical_theorem(cfg, tail_tol))
            reports.append(unitarity.quasiclassical_offdiagonal(pws, phi1, phi2))
    return reports


def cmd_optical_theorem(args, parser) -> int:
    explicit = [v for v in (args.k, args.rc, args.mu, args.rho) if v is not None]
    if explicit:
        configs = [VortexConfig(k=args.k if args.k is not None else 1.0,
                                r_c=args.rc if args.rc is not None else 1.0,
                                mu=args.mu if args.mu is not None else 0.0,
                                rho=args.rho if args.rho is not None else 0.0)]
        full = True
    else:
        configs = unitarity.suite_configs()
        full = False
    rows = []
    worst_exact = 0.0
    inject = args.inject_fault
    for cfg in configs:
        for rep in _identity_rows(cfg, args.tail_tol, args.phi1, args.phi2,
                                  inject, full):
            inject = False  # perturb a single channel set only
            if rep.exact:
                worst_exact = max(worst_exact, rep.rel_residual)
            rows.append({
                "k": cfg.k, "r_c": cfg.r_c, "mu": cfg.mu, "rho": cfg.rho,
                "identity": rep.identity,
                "phi1": None if rep.angles is None else rep.angles[0],
                "phi2": None if rep.angles is None else rep.angles[1],
                "lhs_re": rep.lhs.real, "lhs_im": rep.lhs.imag,
                "rhs_re": rep.rhs.real, "rhs_im": rep.rhs.imag,
                "abs_residual": rep.abs_residual,
                "rel_residual": rep.rel_residual,
                "certified_error": rep.certified_error,
                "exact_gate": int(rep.exact),
            })
    _write_table(rows, _COLUMNS["optical-theorem"], args.format, args.output)
    if worst_exact > _EXACT_GATE:
        print(f"verification failure: exact-identity residual {worst_exact:.3e} "
              f"exceeds {_EXACT_GATE:.0e}", file=sys.stderr)
        return 4
    return 0


def cmd_wavefield(args, parser) -> int:
    cfg = VortexConfig(k=args.k, r_c=args.rc, mu=args.mu, rho=args.rho)
    r_stop = args.r_stop if args.r_stop is not None else args.r_start
    r_grid = np.linspace(args.r_start, r_stop, args.r_count)
    phi_stop = args.phi_stop if args.phi_stop is not None else args.phi_start
    phi_grid = [_normalized_phi(p) for p in np.linspace(args.phi_start, phi_stop,
                                                        args.phi_count)]
    if np.any(r_grid < cfg.r_c):
        parser.error(f"wavefield radii must satisfy r >= r_c = {cfg.r_c}")
    rows = []
    # row-major: r outer, phi inner
    for sample in wavefield_grid(cfg, r_grid, phi_grid, args.tail_tol):
        rows.append({
            "k": cfg.k, "r_c": cfg.r_c, "mu": cfg.mu, "rho": cfg.rho,
            "r": sample.r, "phi": sample.phi,
            "psi_re": sample.psi.real, "psi_im": sample.psi.imag,
            "truncation_n": sample.truncation_n,
        })
    _write_table(rows, _COLUMNS["wavefield"], args.format, args.output)
    return 0


def cmd_report(args, parser) -> int:
    from .report import make_report
    paths = make_report(args.outdir, tail_tol=args.tail_tol, quick=args.quick)
    for p in paths:
        print(p)
    return 0


def _add_common(sp, with_defaults=True):
    dk = 1.0 if with_defaults else None
    sp.add_argument("--k", type=float, default=dk, help="wavenumber (1/length)")
    sp.add_argument("--rc", type=float, default=dk, help="core radius (length)")
    sp.add_argument("--mu", type=float, default=(0.0 if with_defaults else None),
                    help="reduced flux")
    sp.add_argument("--rho", type=float, default=(0.0 if with_defaults else None),
                    help="Robin parameter in [0, 1)")
    sp.add_argument("--tail-tol", type=float, default=1e-14,
                    help="channel truncation tolerance")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--output", default="-", help="output path or - for stdout")


def _add_sweep(sp):
    sp.add_argument("--sweep", choices=("k", "rc", "r_c", "mu", "rho", "phi"),
                    help="parameter to sweep")
    sp.add_argument("--start", type=float)
    sp.add_argument("--stop", type=float)
    sp.add_argument("--count", type=int)
    sp.add_argument("--spacing", choices=("linear", "log"), default="linear")
    sp.add_argument("--values", help="explicit comma-separated sweep values")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vortexscatter",
        description="Scattering off a finite-radius impermeable magnetic vortex: "
                    "amplitudes, cross sections, wave fields and optical-theorem checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    amp = sub.add_parser("amplitude", help="scattering amplitudes on an angle grid")
    _add_common(amp)
    _add_sweep(amp)
    amp.add_argument("--phi", type=float, default=0.0, help="scattering angle (rad)")
    amp.add_argument("--phi-start", type=float, default=0.0)
    amp.add_argument("--phi-stop", type=float)
    amp.add_argument("--phi-count", type=int)
    amp.set_defaults(func=cmd_amplitude)

    xs = sub.add_parser("xsection", help="total cross sections")
    _add_common(xs)
    _add_sweep(xs)
    xs.set_defaults(func=cmd_xsection)

    ot = sub.add_parser("optical-theorem", help="unitarity identity residuals")
    _add_common(ot, with_defaults=False)
    ot.add_argument("--phi1", type=float, default=0.7)
    ot.add_argument("--phi2", type=float, default=-0.4)
    ot.add_argument("--inject-fault", action="store_true",
                    help=argparse.SUPPRESS)  # test hook: break one channel
    ot.set_defaults(func=cmd_optical_theorem)

    wf = sub.add_parser("wavefield", help="exact exterior wave function on a grid")
    _add_common(wf)
    wf.add_argument("--r-start", type=float, required=True)
    wf.add_argument("--r-stop", type=float)
    wf.add_argument("--r-count", type=int, default=1)
    wf.add_argument("--phi-start", type=float, default=0.0)
    wf.add_argument("--phi-stop", type=float)
    wf.add_argument("--phi-count", type=int, default=1)
    wf.set_defaults(func=cmd_wavefield)

    rp = sub.add_parser("report", help="write summary tables and figures")
    rp.add_argument("--outdir", required=True)
    rp.add_argument("--tail-tol", type=float, default=1e-14)
    rp.add_argument("--quick", action="store_true",
                    help="smaller grids (for smoke tests)")
    rp.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except (DomainError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ChannelCapError, OverflowRangeError, VortexScatterError,
            FloatingPointError) as exc:
        params = {k: v for k, v in vars(args).items()
                  if k in ("k", "rc", "mu", "rho", "tail_tol")}
        print(f"numerical failure: {exc} (parameters: {params})", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
