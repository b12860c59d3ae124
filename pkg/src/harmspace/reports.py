"""Structured verification reports with byte-stable JSON and CSV export.

Reports are deterministic functions of (suite, config, per-case results):
keys are sorted, floats serialize via shortest round-trip repr, and no
timestamps or timings enter the serialized bytes (wall-clock timing is
returned separately by the runner).  Non-finite values are encoded as the
strings "inf"/"-inf"/"nan" so files stay strict JSON.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

__all__ = ["CaseResult", "VerificationReport", "export_report", "read_report"]


@dataclass(frozen=True)
class CaseResult:
    """One verified statement instance: value vs expected at a tolerance."""

    case_id: str
    value: float | None
    expected: float | None
    tol: float | None
    passed: bool
    detail: dict = field(default_factory=dict)


@dataclass
class VerificationReport:
    """Result of one suite run; the verdict is recomputable from the cases."""

    suite: str
    config: dict
    cases: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def counts(self) -> dict:
        ok = sum(1 for c in self.cases if c.passed)
        return {"pass": ok, "fail": len(self.cases) - ok}

    def to_obj(self) -> dict:
        return {
            "suite": self.suite,
            "config": _jsonable(self.config),
            "passed": self.passed,
            "counts": self.counts,
            "cases": [
                {
                    "case_id": c.case_id,
                    "value": _jsonable(c.value),
                    "expected": _jsonable(c.expected),
                    "tol": _jsonable(c.tol),
                    "verdict": "pass" if c.passed else "fail",
                    "detail": _jsonable(c.detail),
                }
                for c in self.cases
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, indent=2,
                          allow_nan=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "case_id", "value", "expected", "tol",
                         "verdict"])
        for c in self.cases:
            writer.writerow([self.suite, c.case_id, _csv_num(c.value),
                             _csv_num(c.expected), _csv_num(c.tol),
                             "pass" if c.passed else "fail"])
        return buf.getvalue()


def _jsonable(obj):
    """Recursively convert to JSON-safe values with stable float encoding."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        if math.isnan(obj):
            return "nan"
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        return obj
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalars
        return _jsonable(obj.item())
    if hasattr(obj, "tolist"):  # numpy arrays
        return _jsonable(obj.tolist())
    return str(obj)


def _csv_num(x):
    if x is None:
        return ""
    if isinstance(x, float):
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return repr(x)
    return str(x)


def export_report(report: VerificationReport, path: str, fmt: str = "json") -> str:
    """Write the report to ``path``; returns the path.  Bit-stable per report."""
    if fmt == "json":
        text = report.to_json()
    elif fmt == "csv":
        text = report.to_csv()
    else:
        raise ValueError("format must be 'json' or 'csv'")
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"could not write report to {path}: {exc}") from exc
    return path


def read_report(path: str) -> VerificationReport:
    """Load a JSON report back into a VerificationReport."""
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    cases = [
        CaseResult(
            case_id=c["case_id"],
            value=_unjson(c["value"]),
            expected=_unjson(c["expected"]),
            tol=_unjson(c["tol"]),
            passed=c["verdict"] == "pass",
            detail=c.get("detail", {}),
        )
        for c in doc["cases"]
    ]
    return VerificationReport(doc["suite"], doc["config"], cases)


def _unjson(v):
    if v == "inf":
        return math.inf
    if v == "-inf":
        return -math.inf
    if v == "nan":
        return math.nan
    return v
