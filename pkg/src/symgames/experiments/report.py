"""CSV and JSON report files.

Rationals are written as ``"a/b"`` strings in JSON.  Nothing time- or
host-dependent is written, so identical runs give byte-identical files.
"""
from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction

from .. import __version__
from ..errors import GameError
from ..sampling import GENERATOR_NAME
from .stats import StatReport

FORMATS = ("csv", "json")


def rational_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return rational_str(obj)
    if isinstance(obj, float) and not math.isfinite(obj):
        return "nan" if math.isnan(obj) else ("inf" if obj > 0 else "-inf")
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def report_payload(report, config: dict | None = None) -> dict:
    payload = {"tool": "symgames", "version": __version__, "generator": GENERATOR_NAME}
    if config is not None:
        payload["config"] = config
    if isinstance(report, StatReport) and report.histogram is not None:
        payload["histogram"] = report.histogram.to_dict()
    payload["report"] = report.to_dict()
    return _jsonable(payload)


def render_json(report, config: dict | None = None) -> str:
    return json.dumps(report_payload(report, config), indent=2) + "\n"


def render_csv(report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if isinstance(report, StatReport):
        w.writerow(["bitmask", "cardinality", "count", "frequency", "expected", "z"])
        for r in report.rows:
            w.writerow([r.support, r.cardinality, r.count, repr(float(r.frequency)),
                        repr(float(r.expected)), repr(r.z)])
    else:
        w.writerow(["key", "value"])
        for key, value in _flatten(_jsonable(report.to_dict())):
            w.writerow([key, value])
    return buf.getvalue()


def _flatten(d: dict, prefix: str = ""):
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            yield from _flatten(v, key + ".")
        elif isinstance(v, list):
            yield key, " ".join(str(x) for x in v)
        else:
            yield key, v


def write_report(report, path, fmt: str = "csv", config: dict | None = None) -> None:
    """Write ``report`` to ``path`` as CSV (one row per support) or JSON."""
    if fmt not in FORMATS:
        raise GameError(f"unknown report format {fmt!r}; expected one of {FORMATS}")
    text = render_csv(report) if fmt == "csv" else render_json(report, config)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc.strerror or exc}") from exc


def read_json_report(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
