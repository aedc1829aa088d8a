"""Rendered reports: delimited summaries plus figures for one monomial set.

Builds the full complex and both pruned variants, tabulates ranks, Betti
numbers and strand-by-strand homology into CSV files, and draws the rank
profile and the per-degree elimination counts as PNG figures.
"""
from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .algebra import Monomial, VarContext
from .reduction import build_lyubeznik
from .taylor import build_taylor
from .verify import betti_numbers, check_exactness


def build_report_data(context: VarContext, monomials, force: bool = False) -> dict:
    taylor = build_taylor(context, monomials, force=force)
    fwd, fwd_report = build_lyubeznik(taylor, "forward")
    rev, rev_report = build_lyubeznik(taylor, "reverse")
    return {
        "context": context,
        "monomials": tuple(monomials),
        "taylor": taylor,
        "forward": fwd,
        "forward_report": fwd_report,
        "reverse": rev,
        "reverse_report": rev_report,
        "betti": betti_numbers(taylor),
        "exactness": check_exactness(taylor),
    }


def _pad(values, width):
    return list(values) + [0] * (width - len(values))


def write_report(data: dict, out_dir: str) -> list[str]:
    os.makedirs(out_dir, exist_ok=True)
    written = []
    written.append(_write_summary_csv(data, out_dir))
    written.append(_write_strands_csv(data, out_dir))
    written.append(_draw_ranks(data, out_dir))
    written.append(_draw_elimination(data, out_dir))
    return written


def _write_summary_csv(data, out_dir) -> str:
    path = os.path.join(out_dir, "summary.csv")
    width = data["taylor"].max_degree + 1
    rows = [
        ("taylor",) + tuple(_pad(data["taylor"].ranks(), width)),
        ("pruned-forward",) + tuple(_pad(data["forward"].ranks(), width)),
        ("pruned-reverse",) + tuple(_pad(data["reverse"].ranks(), width)),
        ("betti",) + tuple(_pad(data["betti"], width)),
    ]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["complex"] + [f"q{q}" for q in range(width)])
        writer.writerows(rows)
    return path


def _write_strands_csv(data, out_dir) -> str:
    path = os.path.join(out_dir, "strands.csv")
    context = data["context"]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["multidegree", "homology", "expected_h0", "exact"])
        for check in data["exactness"].checks:
            writer.writerow([check.mu.format(context),
                             " ".join(map(str, check.homology)),
                             check.expected_h0,
                             "yes" if check.ok else "NO"])
    return path


def _draw_ranks(data, out_dir) -> str:
    path = os.path.join(out_dir, "ranks.png")
    width = data["taylor"].max_degree + 1
    qs = list(range(width))
    series = [
        ("Taylor", _pad(data["taylor"].ranks(), width)),
        ("pruned (forward)", _pad(data["forward"].ranks(), width)),
        ("pruned (reverse)", _pad(data["reverse"].ranks(), width)),
        ("Betti", _pad(data["betti"], width)),
    ]
    fig, ax = plt.subplots(figsize=(7, 4))
    bar = 0.8 / len(series)
    for s, (name, values) in enumerate(series):
        ax.bar([q + s * bar for q in qs], values, bar, label=name)
    ax.set_xticks([q + 1.5 * bar for q in qs], [str(q) for q in qs])
    ax.set_xlabel("homological degree")
    ax.set_ylabel("rank")
    ax.set_title("module ranks vs. Betti numbers")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def _draw_elimination(data, out_dir) -> str:
    path = os.path.join(out_dir, "elimination.png")
    width = data["taylor"].max_degree + 1
    qs = list(range(width))
    fig, ax = plt.subplots(figsize=(7, 4))
    for name, report, shift in (("forward", data["forward_report"], -0.15),
                                ("reverse", data["reverse_report"], 0.15)):
        kept = [len(level) for level in report.kept]
        dropped = [len(level) for level in report.dropped]
        ax.bar([q + shift for q in qs], _pad(kept, width), 0.3,
               label=f"kept ({name})")
        ax.bar([q + shift for q in qs], _pad(dropped, width), 0.3,
               bottom=_pad(kept, width), label=f"dropped ({name})")
    ax.set_xticks(qs, [str(q) for q in qs])
    ax.set_xlabel("homological degree")
    ax.set_ylabel("labels")
    ax.set_title("elimination profile")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
