"""Rendering for undecidability sweep reports.

Three output forms: a fixed-width text table for terminals, a tab-separated
file for downstream tooling, and a matplotlib figure of the accuracy
ceiling. Column order is stable so the outputs can be diffed across runs.
"""

from __future__ import annotations

from pathlib import Path

from .computability import UndecidabilityReport

_COLUMNS = ("N", "n", "strategies", "max_accuracy", "verdict")


def report_rows(report: UndecidabilityReport) -> list[tuple[str, ...]]:
    """The table body as strings, one row per (N, n) cell."""
    return [
        (
            str(cell.universe_size),
            str(cell.n),
            str(cell.strategies),
            str(cell.max_accuracy),
            cell.verdict,
        )
        for cell in report.cells
    ]


def format_report_table(report: UndecidabilityReport) -> str:
    rows = report_rows(report)
    widths = [
        max(len(_COLUMNS[i]), *(len(row[i]) for row in rows)) for i in range(len(_COLUMNS))
    ]

    def fmt(row):
        return "  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)).rstrip()

    lines = [fmt(_COLUMNS)]
    lines += [fmt(row) for row in rows]
    interior = [c for c in report.cells if 0 < c.n < c.universe_size]
    lines.append("")
    lines.append(
        f"interior cells (0 < n < N): {len(interior)}; "
        f"every strategy errs somewhere: {'yes' if all(c.every_strategy_errs for c in interior) else 'NO'}"
    )
    lines.append(
        "boundary rules correct everywhere: "
        f"{'yes' if all(c.engine_correct_everywhere for c in report.cells if c.engine_correct_everywhere is not None) else 'NO'}"
    )
    lines.append(f"verdict: {'confirmed' if report.confirmed() else 'NOT CONFIRMED'}")
    return "\n".join(lines) + "\n"


def write_report_tsv(report: UndecidabilityReport, path) -> None:
    rows = [_COLUMNS, *report_rows(report)]
    body = "\n".join("\t".join(row) for row in rows)
    Path(path).write_text(body + "\n", encoding="utf-8")


def render_accuracy_figure(report: UndecidabilityReport, path) -> None:
    """Plot the best achievable accuracy per collection size, one line per N."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for universe_size in range(1, report.max_universe_size + 1):
        cells = [c for c in report.cells if c.universe_size == universe_size]
        xs = [c.n for c in cells]
        ys = [float(c.max_accuracy) for c in cells]
        ax.plot(xs, ys, marker="o", label=f"N={universe_size}")
    ax.axhline(1.0, color="grey", linestyle=":", linewidth=1)
    ax.set_xlabel("members held (n)")
    ax.set_ylabel("best deterministic accuracy")
    ax.set_title("Membership game: accuracy ceiling by declared population")
    ax.set_ylim(0.0, 1.05)
    ax.legend(loc="lower left", fontsize="small")
    ax.grid(True, linewidth=0.3, alpha=0.5)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
