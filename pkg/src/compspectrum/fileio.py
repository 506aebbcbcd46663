"""Series and spectrum file formats, plus sweep and trace tables.

Text outputs carry their metadata as leading ``# key = value`` lines; blank
lines and ``#`` lines are skipped on input, and anything else that fails to
parse is a hard error naming the line. Numeric precision defaults to 17
significant digits (lossless float round-trip) and can be overridden with
the COMPSPECTRUM_PRECISION environment variable.
"""

from __future__ import annotations

import json
import math
import os

import numpy as np

from . import __version__
from .analysis import SweepRow
from .engine import SpectrumTrace, SubstitutionStep
from .errors import InvalidInputError, SeriesParseError
from .spectrum import CompressionSpectrum

TOOL_NAME = "compspectrum"


def _precision() -> int:
    raw = os.environ.get("COMPSPECTRUM_PRECISION")
    if raw is None:
        return 17
    try:
        p = int(raw)
    except ValueError:
        raise InvalidInputError(
            f"COMPSPECTRUM_PRECISION must be an integer, got {raw!r}"
        ) from None
    return min(max(p, 3), 17)


def _fmt(x: float, prec: int) -> str:
    return format(float(x), f".{prec}g")


def _header_lines(meta: dict) -> list[str]:
    lines = [f"# tool = {TOOL_NAME}", f"# version = {__version__}"]
    for key, value in meta.items():
        lines.append(f"# {key} = {value}")
    return lines


def _parse_header_line(line: str, meta: dict) -> None:
    body = line.lstrip("#").strip()
    if "=" in body:
        key, _, value = body.partition("=")
        meta[key.strip()] = value.strip()


# ---------------------------------------------------------------------------
# Series


def read_series(path, fmt: str = "plain", column: int = 0) -> np.ndarray:
    """Read a real-valued series, one sample per line.

    ``plain`` expects a single value per line; ``delimited`` splits each line
    on commas (if present) or whitespace and takes ``column`` (0-based).
    Blank lines and lines starting with '#' are skipped.
    """
    if fmt not in ("plain", "delimited"):
        raise InvalidInputError(f"unknown series format {fmt!r}")
    values: list[float] = []
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, 1):
            text = raw.strip()
            if not text or text.startswith("#"):
                continue
            if fmt == "plain":
                token = text
            else:
                fields = text.split(",") if "," in text else text.split()
                if column >= len(fields):
                    raise SeriesParseError(path, line_no, raw.rstrip("\n"))
                token = fields[column].strip()
            try:
                values.append(float(token))
            except ValueError:
                raise SeriesParseError(path, line_no, raw.rstrip("\n")) from None
    if not values:
        raise InvalidInputError(f"{path}: no data lines")
    return np.asarray(values)


def read_symbols(path) -> list[int]:
    """Read a pre-quantized symbol sequence: whitespace-separated integers,
    any number per line, comments and blanks skipped."""
    out: list[int] = []
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, 1):
            text = raw.strip()
            if not text or text.startswith("#"):
                continue
            for token in text.replace(",", " ").split():
                try:
                    out.append(int(token))
                except ValueError:
                    raise SeriesParseError(path, line_no, raw.rstrip("\n")) from None
    if not out:
        raise InvalidInputError(f"{path}: no data lines")
    return out


def write_series(values, path, meta: dict | None = None) -> None:
    prec = _precision()
    lines = _header_lines(meta or {})
    lines.extend(_fmt(v, prec) for v in values)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# Spectrum


def write_spectrum(
    spectrum: CompressionSpectrum,
    trace: SpectrumTrace | None,
    path,
    fmt: str = "delimited",
    meta: dict | None = None,
    loglog: bool = False,
) -> None:
    """Write (scale, cr, log2_cr) rows sorted by scale, plus header metadata.

    ``structured`` emits the same content as JSON. ``loglog`` adds a
    log2_scale column to the delimited table for direct log-log plotting.
    """
    prec = _precision()
    full_meta = dict(meta or {})
    full_meta["original_length"] = spectrum.origin_length
    if trace is not None:
        full_meta["final_length"] = trace.final_length
        full_meta["stop_reason"] = trace.stop_reason
        full_meta["iterations"] = len(trace.steps)
    rows = [(s, cr, math.log2(cr)) for s, cr in spectrum.points.items()]
    if fmt == "structured":
        doc = {
            "tool": TOOL_NAME,
            "version": __version__,
            "meta": {k: _jsonable(v) for k, v in full_meta.items()},
            "points": [
                {"scale": s, "cr": cr, "log2_cr": l2} for s, cr, l2 in rows
            ],
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
        return
    if fmt != "delimited":
        raise InvalidInputError(f"unknown spectrum format {fmt!r}")
    lines = _header_lines(full_meta)
    if loglog:
        lines.append("# columns = scale cr log2_scale log2_cr")
        for s, cr, l2 in rows:
            lines.append(
                f"{s}\t{_fmt(cr, prec)}\t{_fmt(math.log2(s), prec)}\t{_fmt(l2, prec)}"
            )
    else:
        lines.append("# columns = scale cr log2_cr")
        for s, cr, l2 in rows:
            lines.append(f"{s}\t{_fmt(cr, prec)}\t{_fmt(l2, prec)}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def _jsonable(v):
    if isinstance(v, (bool, int, float, str)) or v is None:
        return v
    return str(v)


def read_spectrum(path) -> tuple[CompressionSpectrum, dict]:
    """Read a spectrum written by :func:`write_spectrum` (either format)."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        doc = json.loads(text)
        meta = {k: v for k, v in doc.get("meta", {}).items()}
        points = {int(p["scale"]): float(p["cr"]) for p in doc.get("points", [])}
        origin = int(meta.get("original_length", 0))
        if origin < 1:
            raise InvalidInputError(f"{path}: missing original_length metadata")
        return CompressionSpectrum(points, origin), meta
    meta: dict = {}
    points = {}
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            _parse_header_line(line, meta)
            continue
        fields = line.split()
        try:
            points[int(fields[0])] = float(fields[1])
        except (IndexError, ValueError):
            raise SeriesParseError(path, line_no, raw) from None
    try:
        origin = int(meta["original_length"])
    except (KeyError, ValueError):
        raise InvalidInputError(f"{path}: missing original_length metadata") from None
    return CompressionSpectrum(points, origin), meta


# ---------------------------------------------------------------------------
# Trace and sweep tables


def write_trace(steps: list[SubstitutionStep], path, meta: dict | None = None) -> None:
    prec = _precision()
    lines = _header_lines(meta or {})
    lines.append(
        "# columns = iteration left right pair_scale new_symbol "
        "occurrences length_before length_after cr"
    )
    for st in steps:
        lines.append(
            f"{st.iteration}\t{st.pair[0]}\t{st.pair[1]}\t{st.pair_scale}\t"
            f"{st.new_symbol}\t{st.occurrences}\t{st.length_before}\t"
            f"{st.length_after}\t{_fmt(st.cr, prec)}"
        )
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def write_sweep(rows: list[SweepRow], path, meta: dict | None = None) -> None:
    prec = _precision()
    lines = _header_lines(meta or {})
    lines.append("# columns = a lyapunov bandwidth")
    for r in rows:
        lines.append(f"{_fmt(r.a, prec)}\t{_fmt(r.lyapunov, prec)}\t{r.bandwidth}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
