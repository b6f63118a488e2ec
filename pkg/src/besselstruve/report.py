"""Deterministic CSV / JSON / text rendering of audit records.

Machine formats serialize every number with 17 significant digits, which
round-trips doubles exactly; text output rounds to 12 significant digits
for readability.  Missing quantities (for example the stated value of a
form that failed to evaluate) become an empty CSV cell and a JSON null.
The JSON writer here is hand-rolled so the float formatting is bit-stable
across runs and Python versions.
"""

from __future__ import annotations

from .audit import AuditRecord, verdict_counts
from .errors import DomainError

__all__ = ["REPORT_COLUMNS", "render_report", "write_report"]

REPORT_COLUMNS = (
    "identity_id", "alpha", "mu", "lambda", "a", "gamma", "y",
    "lhs_value", "lhs_err", "rhs_stated", "rhs_derived",
    "rel_err_stated", "rel_err_derived", "verdict",
)

_FORMATS = ("csv", "json", "text")


def _row_values(rec: AuditRecord) -> list:
    return [
        rec.identity_id,
        rec.alpha,
        rec.mu,
        rec.lam,
        rec.a,
        rec.gamma,
        rec.y,
        rec.lhs.value if rec.lhs is not None else None,
        rec.lhs.abs_err_estimate if rec.lhs is not None else None,
        rec.rhs_stated.value if rec.rhs_stated is not None else None,
        rec.rhs_derived.value if rec.rhs_derived is not None else None,
        rec.rel_err_stated,
        rec.rel_err_derived,
        rec.verdict,
    ]


def _cell(value, digits: int) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, f".{digits}g")
    return str(value)


def _render_csv(records: list[AuditRecord]) -> str:
    lines = [",".join(REPORT_COLUMNS)]
    for rec in records:
        lines.append(",".join(_cell(v, 17) for v in _row_values(rec)))
    return "\n".join(lines) + "\n"


def _json_scalar(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, float):
        return format(value, ".17g")
    return '"' + str(value) + '"'


def _render_json(records: list[AuditRecord]) -> str:
    rows = []
    for rec in records:
        fields = ", ".join(
            f'"{col}": {_json_scalar(v)}'
            for col, v in zip(REPORT_COLUMNS, _row_values(rec))
        )
        rows.append("  {" + fields + "}")
    return "[\n" + ",\n".join(rows) + "\n]\n"


def _render_text(records: list[AuditRecord]) -> str:
    header = ("identity  alpha   mu     lambda  a      gamma  y      "
              "lhs_value        rel_err_stated   rel_err_derived  verdict")
    lines = [header, "-" * len(header)]
    for rec in records:
        vals = _row_values(rec)
        lines.append(
            f"{rec.identity_id:<9}"
            f"{_cell(rec.alpha, 4):<8}{_cell(rec.mu, 4):<7}{_cell(rec.lam, 4):<8}"
            f"{_cell(rec.a, 4):<7}{_cell(rec.gamma, 4):<7}{_cell(rec.y, 4):<7}"
            f"{_cell(vals[7], 12):<17}{_cell(rec.rel_err_stated, 6):<17}"
            f"{_cell(rec.rel_err_derived, 6):<17}{rec.verdict}"
        )
    counts = verdict_counts(records)
    lines.append(
        f"verdicts: {counts['VERIFIED']} verified, {counts['REFUTED']} refuted, "
        f"{counts['INCONCLUSIVE']} inconclusive ({len(records)} points)"
    )
    return "\n".join(lines) + "\n"


def render_report(records: list[AuditRecord], format: str = "csv") -> str:
    """Render records to a string in one of 'csv', 'json', 'text'."""
    if not records:
        raise DomainError("report requires at least one record")
    if format not in _FORMATS:
        raise DomainError(f"unknown report format {format!r}; expected one of {_FORMATS}")
    if format == "csv":
        return _render_csv(records)
    if format == "json":
        return _render_json(records)
    return _render_text(records)


def write_report(records: list[AuditRecord], format: str, path: str) -> None:
    """Render records and write them to ``path``."""
    text = render_report(records, format)
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write report to {path!r}: {exc}") from exc
