"""Summary report: delimited tables with matplotlib figures alongside.

Each section writes one CSV and one PNG into the output directory.  The
figures are rendered to files only (Agg backend); there is no interactive
mode.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path

import numpy as np

from . import cross_sections, unitarity
from .amplitudes import fc_values
from .fields import psi_vortex
from .partial_waves import VortexConfig, build_partial_waves


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def _write_csv(path: Path, header: list[str], rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([format(float(v), ".16e") if isinstance(v, (int, float, np.floating))
                        and not isinstance(v, bool) else v for v in row])


def _angular_section(outdir: Path, tail_tol: float, quick: bool) -> list[Path]:
    cfg = VortexConfig(k=1.0, r_c=200.0, mu=0.3, rho=0.0)
    pws = build_partial_waves(cfg, tail_tol)
    n = 600 if quick else 2400
    phi = np.linspace(0.002, math.pi - 0.01, n)
    exact = np.abs(fc_values(pws, phi)) ** 2
    asym = cross_sections.dsigma_asymptotic(cfg, phi)
    csv_path = outdir / "angular_distribution.csv"
    _write_csv(csv_path, ["phi", "dsigma_exact", "dsigma_asymptotic"],
               zip(phi, exact, asym))
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 4.2))
    ax.semilogy(phi, exact / cfg.r_c, lw=0.7, label="exact partial waves")
    ax.semilogy(phi, asym / cfg.r_c, lw=0.7, alpha=0.8, label="short-wavelength form")
    ax.set_xlabel(r"scattering angle $\varphi$ (rad)")
    ax.set_ylabel(r"$({d\sigma}/{d\varphi})\,/\,r_c$")
    ax.set_title(f"Differential cross section, $kr_c={cfg.s:g}$, "
                 f"$\\mu={cfg.mu}$, $\\rho={cfg.rho}$")
    ax.legend()
    fig_path = outdir / "angular_distribution.png"
    fig.savefig(fig_path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return [csv_path, fig_path]


def _trend_section(outdir: Path, tail_tol: float, quick: bool) -> list[Path]:
    sizes = [25.0, 50.0, 100.0, 200.0] if quick else [25.0, 50.0, 100.0, 200.0, 400.0]
    combos = [(0.0, 0.0), (0.3, 0.25), (0.5, 0.5)]
    rows = []
    series = {c: [] for c in combos}
    for s in sizes:
        for (mu, rho) in combos:
            cfg = VortexConfig(k=1.0, r_c=s, mu=mu, rho=rho)
            sig = cross_sections.sigma_parseval(build_partial_waves(cfg, tail_tol)).sigma
            ratio = sig / (4.0 * cfg.r_c)
            rows.append((s, mu, rho, sig, ratio))
            series[(mu, rho)].append(ratio)
    csv_path = outdir / "xsection_trend.csv"
    _write_csv(csv_path, ["kr_c", "mu", "rho", "sigma", "sigma_over_4rc"], rows)
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.5, 4.2))
    for (mu, rho), vals in series.items():
        ax.plot(sizes, vals, "o-", label=f"$\\mu={mu}$, $\\rho={rho}$")
    ax.axhline(1.0, color="k", lw=0.8, ls="--")
    ax.set_xscale("log")
    ax.set_xlabel(r"$kr_c$")
    ax.set_ylabel(r"$\sigma / (4 r_c)$")
    ax.set_title("Approach to twice the classical cross section")
    ax.legend()
    fig_path = outdir / "xsection_trend.png"
    fig.savefig(fig_path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return [csv_path, fig_path]


def _unitarity_section(outdir: Path, tail_tol: float) -> list[Path]:
    reports = unitarity.run_suite(tail_tol)
    rows = [(r.config.s, r.config.mu, r.config.rho, r.identity,
             r.rel_residual, r.certified_error) for r in reports]
    csv_path = outdir / "unitarity_suite.csv"
    _write_csv(csv_path, ["kr_c", "mu", "rho", "identity", "rel_residual",
                          "certified_error"], rows)
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(8, 4.2))
    labels = [f"$kr_c$={r.config.s:g}\n$\\mu$={r.config.mu}" for r in reports]
    vals = [max(r.rel_residual, 1e-18) for r in reports]
    colors = {"vortex_ot": "C0", "vortex_offdiag": "C1", "singular_vortex_weak": "C2"}
    ax.bar(range(len(vals)), vals, color=[colors[r.identity] for r in reports])
    ax.set_yscale("log")
    ax.axhline(1e-10, color="r", lw=0.8, ls="--", label="acceptance gate")
    ax.set_xticks(range(0, len(vals), 3))
    ax.set_xticklabels(labels[::3], fontsize=7)
    ax.set_ylabel("relative residual")
    ax.set_title("Unitarity identity residuals (default suite)")
    handles = [plt.Rectangle((0, 0), 1, 1, color=c) for c in colors.values()]
    ax.legend(handles + [ax.lines[0]], list(colors) + ["gate"], fontsize=8)
    fig_path = outdir / "unitarity_suite.png"
    fig.savefig(fig_path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return [csv_path, fig_path]


def _shadow_section(outdir: Path, tail_tol: float, quick: bool) -> list[Path]:
    k, r_c, r = 1.0, 50.0, 1e4
    mus = np.linspace(0.0, 1.0, 11 if quick else 21)
    base = None
    rows = []
    for mu in mus:
        cfg = VortexConfig(k=k, r_c=r_c, mu=float(mu), rho=0.0)
        psi = psi_vortex(cfg, r, 0.0, tail_tol).psi
        if base is None:
            base = abs(psi)
        rows.append((mu, abs(psi), abs(psi) / base, abs(math.cos(mu * math.pi))))
    csv_path = outdir / "forward_shadow.csv"
    _write_csv(csv_path, ["mu", "abs_psi", "abs_psi_normalized", "abs_cos_mu_pi"], rows)
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.5, 4.2))
    ax.plot(mus, [r[2] for r in rows], "o", label=r"$|\psi(r,0)|$ normalized")
    ax.plot(mus, [r[3] for r in rows], "-", label=r"$|\cos(\mu\pi)|$")
    ax.set_xlabel(r"reduced flux $\mu$")
    ax.set_ylabel("forward wave modulation")
    ax.set_title(f"Forward shadow modulation, $kr={k*r:g}$, $kr_c={k*r_c:g}$")
    ax.legend()
    fig_path = outdir / "forward_shadow.png"
    fig.savefig(fig_path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return [csv_path, fig_path]


def make_report(outdir: str, tail_tol: float = 1e-14, quick: bool = False) -> list[str]:
    """Write all report sections; returns the created file paths."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    paths += _angular_section(out, tail_tol, quick)
    paths += _trend_section(out, tail_tol, quick)
    paths += _unitarity_section(out, tail_tol)
    paths += _shadow_section(out, tail_tol, quick)
    return [str(p) for p in paths]
