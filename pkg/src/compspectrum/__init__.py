"""Scale-resolved compression analysis of time series.

A quantized series is compressed by recursive pair substitution; each
substitution is attributed to the scale (original-sample span) of the
pattern it replaces. The result is a per-scale profile of where the
signal's redundancy lives -- the compression spectrum -- alongside the
classic effort-to-compress iteration count.
"""

__version__ = "0.1.0"

from .analysis import LogLogFit, SweepRow, bandwidth, bifurcation_sweep, loglog_fit
from .engine import (
    STOP_ALL_PAIRS_UNIQUE,
    STOP_ALL_SYMBOLS_SAME,
    STOP_LENGTH_ONE,
    EtcResult,
    EtcTrace,
    PairCounts,
    SpectrumTrace,
    SubstitutionStep,
    SymbolicSequence,
    count_pairs,
    from_symbols,
    quantize,
    run_etc,
    run_etc_trace,
    run_spectrum,
    select_pair,
    spectrum_stop,
    substitute_pair,
)
from .errors import (
    CompSpectrumError,
    InsufficientDataError,
    InvalidInputError,
    NoOccurrenceError,
    SeriesParseError,
    TooShortError,
)
from .signals import (
    RNG_ALGORITHM,
    gen_logistic,
    gen_pink,
    gen_repeating,
    gen_sinusoid,
    gen_uniform,
    lyapunov_logistic,
)
from .spectrum import LOG2_CR_EPS, CompressionSpectrum
