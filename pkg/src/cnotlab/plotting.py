"""Render the delimited command outputs as figures (Agg backend, file only)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def save_surface_figure(rows, path) -> None:
    """Heatmap of the truth-probability surface from x-major (x, y, p) rows."""
    xs = np.unique([r[0] for r in rows])
    n = xs.size
    grid = np.array([r[2] for r in rows], dtype=float).reshape(n, n)
    fig, ax = plt.subplots(figsize=(6.0, 5.0))
    mesh = ax.pcolormesh(xs, xs, grid.T, cmap="viridis", vmin=0.0, vmax=1.0,
                         shading="auto")
    fig.colorbar(mesh, ax=ax, label="p")
    ax.set_xlabel("p(control)")
    ax.set_ylabel("p(target)")
    ax.set_title("Gate output probability on product inputs")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_werner_sweep_figure(rows, path) -> None:
    """Line plot of (alpha, p_total, p_fuzzy, incidence) rows."""
    data = np.array(rows, dtype=float)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(data[:, 0], data[:, 1], label="p_total")
    ax.plot(data[:, 0], data[:, 2], label="p_fuzzy", linestyle="--")
    ax.plot(data[:, 0], data[:, 3], label="incidence", linestyle=":")
    ax.set_xlabel("alpha")
    ax.set_ylabel("probability / incidence")
    ax.set_title("Gate output along the Werner family")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
