"""Scalar summaries of a compression spectrum and the logistic-map sweep."""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import stats

from .engine import run_spectrum
from .errors import InsufficientDataError, InvalidInputError
from .signals import gen_logistic, lyapunov_logistic
from .spectrum import LOG2_CR_EPS, CompressionSpectrum


def bandwidth(spectrum: CompressionSpectrum) -> int:
    """Number of scales with non-zero compression (log2 CR above threshold)."""
    return sum(1 for cr in spectrum.points.values() if math.log2(cr) > LOG2_CR_EPS)


@dataclass(frozen=True)
class LogLogFit:
    slope: float
    intercept: float
    r_squared: float
    n_points: int


def loglog_fit(spectrum: CompressionSpectrum) -> LogLogFit:
    """Least-squares line through (log2 scale, log2 CR) over stored points.

    Only scales with actual compression are stored, so nothing here can hit
    log of zero; the slope is independent of the log base since both axes
    are logged.
    """
    pts = spectrum.points
    if len(pts) < 2:
        raise InsufficientDataError("need at least two spectrum points to fit")
    xs = [math.log2(s) for s in pts]
    ys = [math.log2(cr) for cr in pts.values()]
    res = stats.linregress(xs, ys)
    return LogLogFit(
        slope=float(res.slope),
        intercept=float(res.intercept),
        r_squared=float(res.rvalue) ** 2,
        n_points=len(pts),
    )


@dataclass(frozen=True)
class SweepRow:
    a: float
    lyapunov: float
    bandwidth: int


def bifurcation_sweep(
    a_min: float,
    a_max: float,
    step: float,
    length: int = 2000,
    bins: int = 8,
    x0: float = 0.1,
    transient: int = 1000,
    lyapunov_n: int = 100_000,
) -> list[SweepRow]:
    """Bandwidth and Lyapunov exponent over a grid of logistic-map parameters.

    Rows come back in grid order; each is a pure function of its inputs, so
    repeated sweeps are identical.
    """
    if not a_min < a_max:
        raise InvalidInputError("a_min must be strictly below a_max")
    if step <= 0:
        raise InvalidInputError("step must be positive")
    n_steps = int(math.floor((a_max - a_min) / step + 1e-9))
    rows: list[SweepRow] = []
    for k in range(n_steps + 1):
        a = round(a_min + k * step, 9)
        series = gen_logistic(a, length, x0=x0, transient=transient)
        spec, _ = run_spectrum(series, bins)
        lam = lyapunov_logistic(a, lyapunov_n, x0=x0, transient=transient)
        rows.append(SweepRow(a=a, lyapunov=lam, bandwidth=bandwidth(spec)))
    return rows
