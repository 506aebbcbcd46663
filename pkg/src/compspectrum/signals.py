"""Test-signal generators and the logistic-map Lyapunov exponent."""

from __future__ import annotations

import math
import warnings

import numpy as np

from .errors import InvalidInputError

# Bit generator behind numpy's default_rng; recorded in output metadata so
# runs can be reproduced across machines.
RNG_ALGORITHM = "pcg64"


def gen_repeating(pattern, length: int) -> np.ndarray:
    """Cycle ``pattern`` until ``length`` samples are emitted.

    The final repetition may be partial.
    """
    pat = np.asarray(pattern, dtype=float)
    if pat.ndim != 1 or pat.size == 0:
        raise InvalidInputError("pattern must be a non-empty 1-d sequence")
    if length < 1:
        raise InvalidInputError("length must be at least 1")
    reps = -(-length // pat.size)
    return np.tile(pat, reps)[:length]


def gen_sinusoid(freq: float, fs: float, length: int, amplitude: float = 1.0) -> np.ndarray:
    """Sampled sine wave: amplitude * sin(2*pi*freq*k/fs) for k = 0..length-1.

    When fs/freq is an integer the phase is reduced modulo the period in
    integer arithmetic first, so the output repeats bit-exactly every fs/freq
    samples instead of drifting with the rounding of large phase arguments.
    """
    if fs <= 0:
        raise InvalidInputError("sampling rate must be positive")
    if length < 1:
        raise InvalidInputError("length must be at least 1")
    if freq > 0 and fs <= 2 * freq:
        warnings.warn(
            f"sampling rate {fs} Hz does not resolve {freq} Hz (need fs > 2*freq)",
            stacklevel=2,
        )
    k = np.arange(length)
    if freq > 0:
        period = fs / freq
        if abs(period - round(period)) < 1e-9 and round(period) >= 1:
            k = k % int(round(period))
    return amplitude * np.sin(2.0 * np.pi * freq * k / fs)


def gen_logistic(a: float, length: int, x0: float = 0.1, transient: int = 1000) -> np.ndarray:
    """Iterate x -> a*x*(1-x), discard ``transient`` samples, emit ``length``.

    All emitted values lie in [0, 1] for a in [0, 4]. Note that x0 = 0.5 at
    a = 4.0 maps straight onto the fixed point at 0 (0.5 -> 1 -> 0); the
    default x0 stays clear of that orbit.
    """
    if not 0.0 <= a <= 4.0:
        raise InvalidInputError("map parameter a must lie in [0, 4]")
    if not 0.0 < x0 < 1.0:
        raise InvalidInputError("initial condition x0 must lie in (0, 1)")
    if length < 1:
        raise InvalidInputError("length must be at least 1")
    if transient < 0:
        raise InvalidInputError("transient must be non-negative")
    x = float(x0)
    for _ in range(transient):
        x = a * x * (1.0 - x)
    out = np.empty(length)
    for k in range(length):
        x = a * x * (1.0 - x)
        out[k] = x
    return out


def gen_uniform(length: int, seed=None) -> np.ndarray:
    """Reproducible uniform noise in [0, 1)."""
    if length < 1:
        raise InvalidInputError("length must be at least 1")
    rng = np.random.default_rng(seed)
    return rng.random(length)


def gen_pink(length: int, seed=None) -> np.ndarray:
    """Spectral-synthesis 1/f noise, normalized to zero mean, unit variance.

    White noise is transformed to the frequency domain, every positive
    frequency amplitude is scaled by 1/sqrt(f) (so power falls off as 1/f),
    and the DC component is zeroed before inverting.
    """
    if length < 2:
        raise InvalidInputError("length must be at least 2")
    rng = np.random.default_rng(seed)
    white = rng.standard_normal(length)
    spec = np.fft.rfft(white)
    f = np.fft.rfftfreq(length)
    scale = np.zeros_like(f)
    scale[1:] = 1.0 / np.sqrt(f[1:])
    y = np.fft.irfft(spec * scale, n=length)
    y -= y.mean()
    return y / y.std()


def lyapunov_logistic(a: float, n: int = 100_000, x0: float = 0.1, transient: int = 1000) -> float:
    """Average log absolute derivative |a*(1-2x)| along the logistic orbit.

    Orbit points landing exactly on x = 0.5 (zero derivative) are skipped
    and the average is taken over the remaining terms; returns -inf if no
    term survives (e.g. a = 0).
    """
    if not 0.0 <= a <= 4.0:
        raise InvalidInputError("map parameter a must lie in [0, 4]")
    if not 0.0 < x0 < 1.0:
        raise InvalidInputError("initial condition x0 must lie in (0, 1)")
    if n < 1:
        raise InvalidInputError("n must be at least 1")
    x = float(x0)
    for _ in range(transient):
        x = a * x * (1.0 - x)
    total = 0.0
    used = 0
    for _ in range(n):
        d = abs(a * (1.0 - 2.0 * x))
        if d > 0.0:
            total += math.log(d)
            used += 1
        x = a * x * (1.0 - x)
    if not used:
        return float("-inf")
    return total / used
