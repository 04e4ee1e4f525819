"""Rendering of comparison reports: aligned text, JSON-shaped dicts, figures.

The machine-readable shape is versioned; tests pin FORMAT_VERSION.
"""

from __future__ import annotations

from .analysis import AXIS_NAMES, SEMANTICS, ComparisonReport

FORMAT_VERSION = 1

_VERDICT_COLORS = {"yes": "#4caf91", "no": "#d06a5e", "n/a": "#b9b9b9"}


def report_to_dict(report: ComparisonReport) -> dict:
    return {
        "format-version": FORMAT_VERSION,
        "axes": {sem: dict(report.axes[sem]) for sem in SEMANTICS},
        "matrix": {q: dict(report.matrix[q]) for q in report.queries},
        "exceptions": {
            gen: {sem: list(members) for sem, members in per_sem.items()}
            for gen, per_sem in report.exceptions.items()
        },
        "warnings": list(report.warnings),
    }


def _table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [
        "  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def render_text(report: ComparisonReport) -> str:
    sections = []
    axis_rows = [[sem] + [report.axes[sem][a] for a in AXIS_NAMES] for sem in SEMANTICS]
    sections.append("axes:\n" + _table(["semantics", *AXIS_NAMES], axis_rows))
    if report.queries:
        rows = [[q] + [report.matrix[q][sem] for sem in SEMANTICS] for q in report.queries]
        sections.append("matrix:\n" + _table(["query", *SEMANTICS], rows))
    if report.exceptions:
        rows = []
        for gen in sorted(report.exceptions):
            for sem, members in report.exceptions[gen].items():
                rows.append([gen, sem, ", ".join(members) if members else "(none)"])
        sections.append("exceptions:\n" + _table(["generalisation", "semantics", "members"], rows))
    if report.warnings:
        sections.append("warnings:\n" + "\n".join(f"  - {w}" for w in report.warnings))
    return "\n\n".join(sections) + "\n"


def render_figure(report: ComparisonReport, path: str) -> None:
    """Render the axes block and the entailment matrix to an image file."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    n_panels = 2 if report.queries else 1
    fig, axs = plt.subplots(
        n_panels,
        1,
        figsize=(8.5, 2.2 + 0.45 * len(SEMANTICS) + (0.45 * len(report.queries) if report.queries else 0)),
        squeeze=False,
    )

    ax = axs[0][0]
    ax.axis("off")
    ax.set_title("formalism classification", fontsize=11)
    cells = [[report.axes[sem][a] for a in AXIS_NAMES] for sem in SEMANTICS]
    table = ax.table(
        cellText=cells,
        rowLabels=list(SEMANTICS),
        colLabels=list(AXIS_NAMES),
        loc="center",
        cellLoc="center",
    )
    table.scale(1.0, 1.3)

    if report.queries:
        ax = axs[1][0]
        ax.set_title("entailment matrix (skeptical)", fontsize=11)
        n_rows, n_cols = len(report.queries), len(SEMANTICS)
        for r, q in enumerate(report.queries):
            for c, sem in enumerate(SEMANTICS):
                verdict = report.matrix[q][sem]
                ax.add_patch(
                    plt.Rectangle((c, n_rows - 1 - r), 1, 1, color=_VERDICT_COLORS[verdict], ec="white")
                )
                ax.text(c + 0.5, n_rows - 0.5 - r, verdict, ha="center", va="center", fontsize=9)
        ax.set_xlim(0, n_cols)
        ax.set_ylim(0, n_rows)
        ax.set_xticks([c + 0.5 for c in range(n_cols)])
        ax.set_xticklabels(SEMANTICS, fontsize=8)
        ax.set_yticks([n_rows - 0.5 - r for r in range(n_rows)])
        ax.set_yticklabels(report.queries, fontsize=8)
        ax.tick_params(length=0)
        for spine in ax.spines.values():
            spine.set_visible(False)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
