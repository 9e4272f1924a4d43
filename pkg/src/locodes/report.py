"""Report rendering: delimited run summaries plus pattern figures.

The reproduction run can drop its results as a CSV table next to one PNG
per builtin grid pattern (drawn on the pattern's base torus) and a chart
of the recomputed hypercube optima, so a run leaves an inspectable paper
trail on disk.
"""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bitset import iter_bits
from .graphs import grid_offsets
from .patterns import BUILTIN_PATTERNS, BuiltinPattern


def write_rows_csv(rows, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["row_id", "group", "status", "expected", "got", "seconds", "note"])
        for r in rows:
            w.writerow([r.row_id, r.group, "pass" if r.ok else "FAIL",
                        r.expected, r.got, f"{r.seconds:.3f}", r.note])


def render_pattern(bp: BuiltinPattern, path, scale: int = 1) -> None:
    """Draw a pattern on its base torus: filled codewords, open non-codewords,
    light local edges (wrapping edges omitted for readability)."""
    px, py = bp.base_torus[0] * scale, bp.base_torus[1] * scale
    code = bp.pattern.to_torus_code(px, py)
    member = {(v // py, v % py) for v in iter_bits(code.bits)}

    fig, ax = plt.subplots(figsize=(max(3.2, px * 0.42), max(3.2, py * 0.42)))
    for i in range(px):
        for j in range(py):
            for di, dj in grid_offsets(bp.pattern.family, i, j):
                u, v = i + di, j + dj
                if 0 <= u < px and 0 <= v < py and (i, j) < (u, v):
                    ax.plot([i, u], [j, v], color="0.8", lw=0.8, zorder=1)
    xs, ys, face = [], [], []
    for i in range(px):
        for j in range(py):
            xs.append(i)
            ys.append(j)
            face.append("black" if (i, j) in member else "white")
    ax.scatter(xs, ys, s=60, facecolors=face, edgecolors="black", zorder=2)
    ax.set_aspect("equal")
    ax.set_xticks([])
    ax.set_yticks([])
    ax.set_title(f"{bp.pattern_id}  ({bp.pattern.family.value}, {bp.klass}, "
                 f"density {bp.density}, {px}x{py} torus)", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_hypercube_chart(rows, path) -> None:
    """Bar chart of recomputed hypercube optima from the reproduction rows."""
    vals = {}
    for r in rows:
        if r.group != "hypercube" or not r.ok:
            continue
        head = r.row_id.split("/", 1)[1]  # e.g. "K(4)=4"
        name, rest = head.split("(")
        n = int(rest.split(")")[0])
        vals[(name, n)] = int(head.split("=")[1])
    if not vals:
        return
    names = ["K", "ML", "MLD", "M"]
    ns = sorted({n for _, n in vals})
    width = 0.8 / len(names)
    fig, ax = plt.subplots(figsize=(6, 3.4))
    for k, name in enumerate(names):
        xs = [i + k * width for i, n in enumerate(ns) if (name, n) in vals]
        ys = [vals[(name, n)] for n in ns if (name, n) in vals]
        ax.bar(xs, ys, width=width, label=name)
    ax.set_xticks([i + 1.5 * width for i in range(len(ns))])
    ax.set_xticklabels([f"n={n}" for n in ns])
    ax.set_ylabel("optimal code size")
    ax.set_title("certified optima in the binary n-cube", fontsize=10)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(rows, outdir) -> list:
    """CSV summary plus one figure per builtin pattern; returns written paths."""
    os.makedirs(outdir, exist_ok=True)
    written = []
    csv_path = os.path.join(outdir, "paper_check.csv")
    write_rows_csv(rows, csv_path)
    written.append(csv_path)
    chart = os.path.join(outdir, "hypercube_optima.png")
    render_hypercube_chart(rows, chart)
    if os.path.exists(chart):
        written.append(chart)
    for pid, bp in BUILTIN_PATTERNS.items():
        fname = "pattern_" + pid.replace("/", "_of_") + ".png"
        fpath = os.path.join(outdir, fname)
        render_pattern(bp, fpath)
        written.append(fpath)
    return written
