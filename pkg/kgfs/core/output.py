"""
Tabular and graphical output of scan rows.
"""
import csv
import io
import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from .runner import MEASURES, ScanRow

COLUMNS = (
    "model", "Z", "n", "l", "m", "epsilon_over_mc2", "S", "I", "J",
    "disequilibrium", "C_FS", "C_LMC", "zeta_FS", "error",
)
JSON_EXTRA = ("zeta_LMC", "fisher_regularized", "diseq_regularized")

# measure name -> (column, InfoReport attribute or None for zeta)
_MEASURE_COLUMNS = {
    "S": ("S", "shannon_S"),
    "I": ("I", "fisher_I"),
    "J": ("J", "entropic_power_J"),
    "diseq": ("disequilibrium", "disequilibrium"),
    "C_FS": ("C_FS", "c_fs"),
    "C_LMC": ("C_LMC", "c_lmc"),
    "zeta": ("zeta_FS", None),
}
_INT_COLUMNS = ("n", "l", "m")
_TEXT_COLUMNS = ("model", "error")


def row_record(row: ScanRow, measures: Sequence[str] = MEASURES) -> Dict[str, Any]:
    """Fixed-schema dict for one row; None marks a blank cell."""
    record: Dict[str, Any] = {c: None for c in COLUMNS + JSON_EXTRA}
    record.update(model=row.model.value, Z=row.Z, n=row.n, l=row.l, m=row.m, error=row.error)
    report = row.report
    if report is None:
        return record

    data = report.to_dict()
    record["epsilon_over_mc2"] = data["epsilon_over_mc2"]
    for measure in measures:
        column, attribute = _MEASURE_COLUMNS[measure]
        record[column] = data[attribute] if attribute else row.zeta_fs
    if "zeta" in measures:
        record["zeta_LMC"] = row.zeta_lmc
    record["fisher_regularized"] = data["fisher_regularized"]
    record["diseq_regularized"] = data["diseq_regularized"]
    return record


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return str(int(value)) if value.is_integer() and abs(value) < 1e15 else repr(value)
    return str(value)


def format_rows(
    rows: Sequence[ScanRow], fmt: str = "csv", measures: Sequence[str] = MEASURES
) -> str:
    records = [row_record(r, measures) for r in rows]
    if fmt == "json":
        return json.dumps(records, indent=2, ensure_ascii=False) + "\n"

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(COLUMNS)
    for record in records:
        writer.writerow([_cell(record[c]) for c in COLUMNS])
    return buffer.getvalue()


def write_rows(
    rows: Sequence[ScanRow], path: Path, fmt: str = "csv", measures: Sequence[str] = MEASURES
) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(format_rows(rows, fmt, measures))


def read_csv_rows(source: Any) -> List[Dict[str, Any]]:
    """Parse CSV text or a path back into typed records (blank cells become None)."""
    text = source.read_text(encoding="utf-8") if isinstance(source, Path) else str(source)
    records = []
    for raw in csv.DictReader(io.StringIO(text)):
        record: Dict[str, Any] = {}
        for column in COLUMNS:
            cell = raw.get(column, "")
            if cell == "":
                record[column] = None
            elif column in _TEXT_COLUMNS:
                record[column] = cell
            elif column in _INT_COLUMNS:
                record[column] = int(cell)
            else:
                record[column] = float(cell)
        records.append(record)
    return records


def write_svg(rows: Sequence[ScanRow], path: Path, title: str = "scan") -> None:
    """Self-contained SVG of a scan: zeta against n for fig2/fig3, C_FS against Z otherwise."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ok = [r for r in rows if r.report is not None]
    fig, ax = plt.subplots(figsize=(6.4, 4.8))

    if title in ("fig2", "fig3"):
        series: Dict[str, List[ScanRow]] = {}
        for r in ok:
            if r.model.value == "KG" and r.zeta_fs is not None:
                key = f"Z={r.Z:g}" if title == "fig2" else f"Z={r.Z:g}, l={r.l}"
                series.setdefault(key, []).append(r)
        for key, points in series.items():
            ax.plot([p.n for p in points], [p.zeta_fs for p in points], "o-", label=key)
        ax.set_xlabel("n")
        ax.set_ylabel(r"$\zeta_{FS}$")
    else:
        for model in ("KG", "SCH"):
            points = [r for r in ok if r.model.value == model]
            if points:
                ax.plot([p.Z for p in points], [p.report.c_fs for p in points], "o-", ms=3,
                        label=model)
        ax.set_xlabel("Z")
        ax.set_ylabel(r"$C_{FS}$")

    ax.set_title(title)
    if ax.get_legend_handles_labels()[0]:
        ax.legend()
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    with matplotlib.rc_context({"svg.hashsalt": "kgfs"}):
        fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)


def error_record(row: ScanRow) -> Dict[str, Optional[Any]]:
    """Machine-readable record of a failed row."""
    kind, _, message = (row.error or "").partition(": ")
    return {"model": row.model.value, "Z": row.Z, "n": row.n, "l": row.l, "m": row.m,
            "error": kind, "message": message}
