"""Matplotlib renderers for spectra and experiment ladders.

SVG output is byte-deterministic: a fixed hash salt replaces the default
per-process element ids and the creation date is suppressed.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

import numpy as np

from .experiments import GrowthTable, LindelofReport, ProbeTable
from .oscillation import OscillationReport
from .spectra import SpectrumDescription

SVG_HASHSALT = "toepspec"

# 800 x 800 viewport: matplotlib writes pt = inches * 72.
_SPECTRUM_FIGSIZE = (800.0 / 72.0, 800.0 / 72.0)


def render_spectrum(desc: SpectrumDescription) -> plt.Figure:
    """Range curves and jump arcs in the complex plane, square window."""
    fig, ax = plt.subplots(figsize=_SPECTRUM_FIGSIZE)
    arc_color_idx = 0
    for seg in desc.segments:
        pts = seg.curve.points
        if seg.kind == "range":
            ax.plot(pts.real, pts.imag, color="tab:blue", lw=1.5, solid_capstyle="round")
            ax.plot(pts.real[:1], pts.imag[:1], ".", color="tab:blue", ms=4)
        else:
            arc_color_idx += 1
            ax.plot(
                pts.real,
                pts.imag,
                color=f"C{arc_color_idx % 9 + 1}",
                lw=1.5,
                ls="--",
            )
    points = desc.all_points()
    cx = (points.real.min() + points.real.max()) / 2.0
    cy = (points.imag.min() + points.imag.max()) / 2.0
    half = max(np.ptp(points.real), np.ptp(points.imag), 1e-6) / 2.0 * 1.1
    ax.set_xlim(cx - half, cx + half)
    ax.set_ylim(cy - half, cy + half)
    ax.set_aspect("equal")
    ax.axhline(0.0, color="0.6", lw=0.6, zorder=0)
    ax.axvline(0.0, color="0.6", lw=0.6, zorder=0)
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_title(f"essential spectrum, p = {desc.p:g}")
    return fig


def render_growth(table: GrowthTable) -> plt.Figure:
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    ns = [row.n for row in table.rows]
    ratios = [row.ratio for row in table.rows]
    ax.loglog(ns, ratios, "o-", color="tab:red")
    ax.set_xlabel("n")
    ax.set_ylabel("ratio")
    ax.set_title("H1 norm-growth ladder")
    ax.grid(True, which="both", alpha=0.3)
    return fig


def render_probe(table: ProbeTable) -> plt.Figure:
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    ns = [row.n for row in table.rows]
    sigmas = [row.sigma_min for row in table.rows]
    ax.semilogy(ns, sigmas, "s-", color="tab:purple")
    ax.set_xlabel("n")
    ax.set_ylabel("sigma_min")
    ax.set_title("finite-section smallest singular value")
    ax.grid(True, which="both", alpha=0.3)
    return fig


def render_oscillation(report: OscillationReport) -> plt.Figure:
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    ax.semilogx(report.resolutions, report.bmo_log, "o-", label="log-weighted", base=2)
    ax.semilogx(report.resolutions, report.bmo, "s-", label="plain", base=2)
    ax.set_xlabel("grid size")
    ax.set_ylabel("seminorm")
    ax.set_title(f"oscillation ladder ({report.verdict_hint.value})")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    return fig


def render_lindelof(report: LindelofReport) -> plt.Figure:
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    eps = 1.0 - report.radii
    ax.semilogx(eps, np.abs(report.plus_values - report.boundary_value), "o-", label="+ side")
    ax.semilogx(eps, np.abs(report.minus_values - report.boundary_value), "s-", label="- side")
    ax.set_xlabel("1 - r")
    ax.set_ylabel("|f(z) - f(e^{it})|")
    ax.set_title("tangential boundary approach")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    return fig


def save_figure(fig: plt.Figure, target, fmt: str) -> None:
    """Write the figure; svg output is byte-reproducible."""
    with matplotlib.rc_context({"svg.hashsalt": SVG_HASHSALT}):
        if fmt == "svg":
            fig.savefig(target, format="svg", metadata={"Date": None})
        else:
            fig.savefig(target, format=fmt, dpi=100)
    plt.close(fig)
