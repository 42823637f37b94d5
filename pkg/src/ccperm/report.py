"""
Sweep reports: delimited verification results plus rendered figures.

run_sweeps() exercises every identity over the standard parameter grid and
returns the reports; write_csv() and render_figures() persist them as a CSV
file and a pair of PNGs (the Stirling triangle as a heatmap, and the
enumerated sums laid over the product formulas they must match).
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .perm import COLORED_ENUM_LIMIT, PERM_ENUM_LIMIT
from .stirling import falling_factorial, rising_factorial, stirling_table
from .verify import (
    VerificationReport,
    default_palette,
    verify_bijection,
    verify_involution,
    verify_signed,
    verify_unsigned,
)

__all__ = ["run_sweeps", "write_csv", "render_figures"]

CSV_FIELDS = ["identity", "n", "x", "left", "right", "pass", "counterexample"]


def run_sweeps(max_n_perm: int = PERM_ENUM_LIMIT,
               max_n_colored: int = COLORED_ENUM_LIMIT,
               max_x_perm: int = 5,
               max_x_colored: int = 3) -> list[VerificationReport]:
    """All identity checks over the standard grid, in a fixed order."""
    reports = []
    for n in range(1, max_n_perm + 1):
        for x in range(0, max_x_perm + 1):
            reports.append(verify_unsigned(n, x, max_n=max_n_perm))
            reports.append(verify_signed(n, x, max_n=max_n_perm))
    for n in range(1, max_n_colored + 1):
        for x in range(1, max_x_colored + 1):
            palette = default_palette(x)
            reports.append(verify_bijection(n, palette, max_n=max_n_colored))
            reports.append(verify_involution(n, palette, max_n=max_n_colored))
    return reports


def write_csv(reports: list[VerificationReport], path: Path | str) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(CSV_FIELDS)
        for r in reports:
            writer.writerow([r.identity, r.n, r.x, r.left, r.right,
                             "true" if r.passed else "false",
                             r.counterexample or ""])


def _triangle_figure(path: Path, n_max: int) -> None:
    table = stirling_table(n_max)
    grid = np.full((n_max + 1, n_max + 1), np.nan)
    for n in range(n_max + 1):
        for k in range(n + 1):
            value = table.value(n, k)
            if value > 0:
                grid[n, k] = np.log10(value)
    fig, ax = plt.subplots(figsize=(6, 5))
    mesh = ax.imshow(grid, origin="lower", cmap="viridis")
    fig.colorbar(mesh, ax=ax, label="log10 c(n, k)")
    ax.set_xlabel("k (number of cycles)")
    ax.set_ylabel("n")
    ax.set_title(f"Permutations of [n] with k cycles, n <= {n_max}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _identity_figure(path: Path, reports: list[VerificationReport],
                     max_x: int) -> None:
    unsigned = [r for r in reports if r.identity == "eq1"]
    signed = [r for r in reports if r.identity == "eq2"]
    degrees = sorted({r.n for r in unsigned})
    xs = np.arange(0, max_x + 1)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    for n in degrees:
        ax1.plot(xs, [rising_factorial(x, n) for x in xs], "-", lw=1, alpha=0.6)
        points = {r.x: r.left for r in unsigned if r.n == n}
        ax1.plot(sorted(points), [points[x] for x in sorted(points)], "o", ms=4,
                 label=f"n={n}")
        ax2.plot(xs, [falling_factorial(x, n) for x in xs], "-", lw=1, alpha=0.6)
        s_points = {r.x: r.left for r in signed if r.n == n}
        ax2.plot(sorted(s_points), [s_points[x] for x in sorted(s_points)], "o", ms=4)
    ax1.set_yscale("symlog")
    ax2.set_yscale("symlog")
    ax1.set_title("sum of x^cycles over S_n vs rising factorial")
    ax2.set_title("signed sum over S_n vs falling factorial")
    for ax in (ax1, ax2):
        ax.set_xlabel("x")
    ax1.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_figures(reports: list[VerificationReport], out_dir: Path | str,
                   triangle_n_max: int = 12) -> list[Path]:
    """Render the report figures into out_dir and return their paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    max_x = max((r.x for r in reports if r.identity == "eq1"), default=5)
    triangle = out_dir / "stirling_triangle.png"
    identities = out_dir / "identity_sums.png"
    _triangle_figure(triangle, triangle_n_max)
    _identity_figure(identities, reports, max_x)
    return [triangle, identities]
