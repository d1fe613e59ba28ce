"""Matplotlib renderings for the report path: Hasse diagrams and the
quotient-atom matrix as a cell grid."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .decomposition import QuotientAtomMatrix
from .lattices import QuotientLattice, hasse_edges


def _layered_positions(lattice: QuotientLattice):
    """Longest-path layering over the cover relation; containment respects
    set size, so elements are already topologically sorted."""
    edges = hasse_edges(lattice)
    rank = [0] * len(lattice.elements)
    for low, high in edges:
        rank[high] = max(rank[high], rank[low] + 1)
    layers: dict[int, list[int]] = {}
    for i, r in enumerate(rank):
        layers.setdefault(r, []).append(i)
    positions = {}
    for r, members in layers.items():
        for slot, i in enumerate(members):
            positions[i] = ((slot + 1) / (len(members) + 1), r)
    return positions, edges, max(rank) if rank else 0


def hasse_figure(lattice: QuotientLattice, labels, title: str):
    positions, edges, height = _layered_positions(lattice)
    fig, ax = plt.subplots(figsize=(7, 1.6 * (height + 1) + 1))
    for low, high in edges:
        (x0, y0), (x1, y1) = positions[low], positions[high]
        ax.plot([x0, x1], [y0, y1], color="0.55", lw=1.2, zorder=1)
    for i, label in enumerate(labels):
        x, y = positions[i]
        ax.text(
            x,
            y,
            label,
            ha="center",
            va="center",
            fontsize=9,
            zorder=2,
            bbox=dict(boxstyle="round,pad=0.35", fc="white", ec="0.3"),
        )
    ax.set_xlim(-0.05, 1.05)
    ax.set_ylim(-0.6, height + 0.6)
    ax.set_title(title)
    ax.axis("off")
    fig.tight_layout()
    return fig


def matrix_figure(matrix: QuotientAtomMatrix, title: str, row_labels=None, col_labels=None):
    fig, ax = plt.subplots(
        figsize=(1.0 + 0.6 * matrix.cols, 1.0 + 0.6 * matrix.rows)
    )
    ax.imshow(matrix.entries, cmap="Greys", vmin=0, vmax=1.4)
    for i in range(matrix.rows):
        for j in range(matrix.cols):
            cell = matrix.entries[i][j]
            ax.text(
                j,
                i,
                str(cell),
                ha="center",
                va="center",
                fontsize=10,
                color="white" if cell else "0.4",
            )
    ax.set_xticks(range(matrix.cols))
    ax.set_yticks(range(matrix.rows))
    if col_labels is not None:
        ax.set_xticklabels(col_labels, fontsize=8)
    if row_labels is not None:
        ax.set_yticklabels(row_labels, fontsize=8)
    ax.set_title(title)
    fig.tight_layout()
    return fig


def save_figure(fig, path, dpi: int = 150):
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
