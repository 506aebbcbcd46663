"""Symbolization and the scale-tracking pair-substitution engine.

A real-valued series is quantized into a symbolic sequence; the engine then
repeatedly replaces the most frequent adjacent pair with a fresh symbol.
Each substitution is attributed to the scale of the replaced pattern (the
number of original samples it spans), so the run yields both a per-scale
compression spectrum and the effort-to-compress iteration count.

Pair counting is non-overlapping and left-to-right: a run of k identical
symbols contributes floor(k/2) occurrences of the same-symbol pair,
anchored at the run start. The substitution pass replaces exactly those
counted occurrences.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInputError, NoOccurrenceError, TooShortError
from .spectrum import CompressionSpectrum

STOP_ALL_PAIRS_UNIQUE = "all-pairs-unique"
STOP_LENGTH_ONE = "length-one"
STOP_ALL_SYMBOLS_SAME = "all-symbols-same"

_EMPTY: frozenset = frozenset()


# ---------------------------------------------------------------------------
# Domain types


@dataclass
class SymbolicSequence:
    """Symbol ids plus the scale (original-sample span) each id stands for.

    ``scales`` is the alphabet: it must cover every symbol used, initial
    symbols have scale 1, and a symbol built from pair (x, y) has scale
    scale(x) + scale(y). The sum of scales over the sequence equals the
    original series length at every stage of a run.
    """

    symbols: list[int]
    scales: dict[int, int]

    def __post_init__(self):
        if not self.symbols:
            raise InvalidInputError("symbolic sequence is empty")
        missing = set(self.symbols) - self.scales.keys()
        if missing:
            raise InvalidInputError(
                f"symbols missing from alphabet: {sorted(missing)[:8]}"
            )
        for sym, sc in self.scales.items():
            if sym < 0 or sc < 1:
                raise InvalidInputError(f"bad alphabet entry {sym}: {sc}")

    def __len__(self) -> int:
        return len(self.symbols)

    def total_scale(self) -> int:
        """Sum of per-symbol scales; equals the original sample count."""
        scales = self.scales
        return sum(scales[s] for s in self.symbols)


@dataclass
class PairCounts:
    """Non-overlapping pair counts plus earliest occurrence index per pair."""

    counts: dict[tuple[int, int], int]
    first_pos: dict[tuple[int, int], int]

    def max_count(self) -> int:
        return max(self.counts.values(), default=0)


@dataclass(frozen=True)
class SubstitutionStep:
    """Record of one substitution: what was replaced, where it fits in scale,
    and the per-iteration compression ratio."""

    iteration: int
    pair: tuple[int, int]
    pair_scale: int
    new_symbol: int
    occurrences: int
    length_before: int
    length_after: int
    cr: float


@dataclass
class SpectrumTrace:
    """Spectrum-phase substitution history and why it stopped."""

    steps: list[SubstitutionStep]
    stop_reason: str
    original_length: int
    final_length: int


@dataclass(frozen=True)
class EtcResult:
    """Effort-to-compress: substitutions until length 1 or all symbols equal."""

    iterations: int
    normalized: float


@dataclass
class EtcTrace:
    """Full recorded effort-to-compress run, including intermediate states."""

    result: EtcResult
    steps: list[SubstitutionStep]
    states: list[list[int]]


# ---------------------------------------------------------------------------
# Symbolization


def quantize(series, bins: int = 8) -> SymbolicSequence:
    """Map a real series onto 1-indexed equal-width bins over [min, max].

    Value x maps to floor(bins * (x - min) / (max - min)), clamped into the
    top bin, then shifted to symbols 1..bins. A constant series maps every
    value to symbol 1. All produced symbols have scale 1.
    """
    x = np.asarray(series, dtype=float)
    if x.ndim != 1:
        raise InvalidInputError(f"series must be one-dimensional, got shape {x.shape}")
    if x.size == 0:
        raise InvalidInputError("series is empty")
    if not np.isfinite(x).all():
        raise InvalidInputError("series contains non-finite values")
    if bins < 2:
        raise InvalidInputError("bins must be at least 2")
    lo = x.min()
    hi = x.max()
    if hi > lo:
        idx = np.floor(bins * (x - lo) / (hi - lo)).astype(np.int64)
        np.clip(idx, 0, bins - 1, out=idx)
    else:
        idx = np.zeros(x.size, dtype=np.int64)
    return SymbolicSequence((idx + 1).tolist(), {s: 1 for s in range(1, bins + 1)})


def from_symbols(values) -> SymbolicSequence:
    """Wrap an already-symbolic integer sequence, bypassing quantization."""
    syms = []
    for v in values:
        iv = int(v)
        if iv != v or iv < 0:
            raise InvalidInputError(f"not a valid symbol id: {v!r}")
        syms.append(iv)
    if not syms:
        raise InvalidInputError("symbol sequence is empty")
    return SymbolicSequence(syms, {s: 1 for s in sorted(set(syms))})


def _as_sequence(x, bins: int) -> SymbolicSequence:
    if isinstance(x, SymbolicSequence):
        return x
    return quantize(x, bins)


# ---------------------------------------------------------------------------
# Single-pass pair operations (reference semantics, used on small inputs)


def count_pairs(seq) -> PairCounts:
    """Count adjacent pairs, non-overlapping left-to-right.

    Within a run of identical symbols only every second adjacency counts;
    all other adjacencies count unconditionally.
    """
    syms = seq.symbols if isinstance(seq, SymbolicSequence) else list(seq)
    n = len(syms)
    if n < 2:
        raise TooShortError("need at least two symbols to count pairs")
    counts: dict[tuple[int, int], int] = {}
    first: dict[tuple[int, int], int] = {}
    i = 0
    while i < n:
        a = syms[i]
        j = i
        while j + 1 < n and syms[j + 1] == a:
            j += 1
        for t in range(i, j, 2):
            p = (a, a)
            counts[p] = counts.get(p, 0) + 1
            first.setdefault(p, t)
        if j + 1 < n:
            p = (a, syms[j + 1])
            counts[p] = counts.get(p, 0) + 1
            first.setdefault(p, j)
        i = j + 1
    return PairCounts(counts=counts, first_pos=first)


def select_pair(table: PairCounts, scales: dict[int, int]) -> tuple[int, int]:
    """Pick the pair to substitute: highest count, ties broken by smallest
    pair scale, then smallest left-symbol scale, then earliest occurrence."""
    if not table.counts:
        raise InvalidInputError("cannot select from an empty pair table")
    m = max(table.counts.values())
    best = None
    best_key = None
    for p, c in table.counts.items():
        if c != m:
            continue
        key = (scales[p[0]] + scales[p[1]], scales[p[0]], table.first_pos[p])
        if best_key is None or key < best_key:
            best, best_key = p, key
    return best


def substitute_pair(seq: SymbolicSequence, pair, new_symbol: int | None = None) -> SymbolicSequence:
    """Replace every counted occurrence of ``pair`` with a fresh symbol.

    The new symbol's scale is the sum of the constituent scales. Returns a
    new sequence; the input is untouched.
    """
    a, b = pair
    syms = seq.symbols
    if new_symbol is None:
        new_symbol = max(seq.scales) + 1
    elif new_symbol in seq.scales:
        raise InvalidInputError(f"symbol {new_symbol} is already in the alphabet")
    out: list[int] = []
    i = 0
    n = len(syms)
    hits = 0
    while i < n:
        if i + 1 < n and syms[i] == a and syms[i + 1] == b:
            out.append(new_symbol)
            hits += 1
            i += 2
        else:
            out.append(syms[i])
            i += 1
    if not hits:
        raise NoOccurrenceError(f"pair {(a, b)} does not occur in the sequence")
    scales = dict(seq.scales)
    scales[new_symbol] = scales[a] + scales[b]
    return SymbolicSequence(out, scales)


def spectrum_stop(table: PairCounts) -> bool:
    """True once every pair occurs at most once (nothing left to learn)."""
    return table.max_count() <= 1


# ---------------------------------------------------------------------------
# Incremental engine
#
# The sequence lives in fixed slots threaded by prev/next links, so a
# substitution rewrites the left slot of each occurrence in place and
# unlinks the right one. Slot order therefore equals sequence order for the
# whole run, which keeps "earliest occurrence" comparisons valid. The pair
# index maps each pair to the set of its counted left slots, and a bucket
# per count value supports O(1) max-count tracking.


class _Engine:
    def __init__(self, symbols: list[int], scales: dict[int, int]):
        n = len(symbols)
        self.syms = list(symbols)
        self.nxt = list(range(1, n + 1))
        self.prv = list(range(-1, n - 1))
        if n:
            self.nxt[n - 1] = -1
        self.length = n
        self.scales = dict(scales)
        self.next_id = (max(self.scales) if self.scales else 0) + 1
        self.occs: dict[tuple[int, int], set[int]] = {}
        self.buckets: dict[int, set[tuple[int, int]]] = {}
        self.max_count = 0
        self.sym_count: Counter = Counter(self.syms)
        self._scan()

    # -- index construction and maintenance

    def _scan(self):
        syms = self.syms
        occs = self.occs
        n = self.length
        i = 0
        while i < n:
            a = syms[i]
            j = i
            while j + 1 < n and syms[j + 1] == a:
                j += 1
            if j > i:
                s = occs.get((a, a))
                if s is None:
                    s = occs[(a, a)] = set()
                s.update(range(i, j, 2))
            if j + 1 < n:
                p = (a, syms[j + 1])
                s = occs.get(p)
                if s is None:
                    s = occs[p] = set()
                s.add(j)
            i = j + 1
        buckets = self.buckets
        mc = 0
        for p, s in occs.items():
            c = len(s)
            b = buckets.get(c)
            if b is None:
                b = buckets[c] = set()
            b.add(p)
            if c > mc:
                mc = c
        self.max_count = mc

    def _add_occ(self, q, slot):
        occs = self.occs
        s = occs.get(q)
        if s is None:
            occs[q] = {slot}
            c = 1
        else:
            c = len(s)
            self.buckets[c].discard(q)
            s.add(slot)
            c += 1
        b = self.buckets.get(c)
        if b is None:
            b = self.buckets[c] = set()
        b.add(q)
        if c > self.max_count:
            self.max_count = c

    def _remove_occ(self, q, slot):
        occs = self.occs
        s = occs[q]
        c = len(s)
        self.buckets[c].discard(q)
        if c == 1:
            del occs[q]
        else:
            s.remove(slot)
            b = self.buckets.get(c - 1)
            if b is None:
                b = self.buckets[c - 1] = set()
            b.add(q)

    def _regreedy(self, start, b):
        """Re-derive greedy (b, b) occurrences for a run whose head was removed."""
        syms = self.syms
        nxt = self.nxt
        run = [start]
        t = nxt[start]
        while t >= 0 and syms[t] == b:
            run.append(t)
            t = nxt[t]
        pp = (b, b)
        for sl in run[:-1]:
            s = self.occs.get(pp)
            if s is None:
                break
            if sl in s:
                self._remove_occ(pp, sl)
        for k in range(0, len(run) - 1, 2):
            self._add_occ(pp, run[k])

    def current_max(self) -> int:
        m = self.max_count
        buckets = self.buckets
        while m > 0:
            b = buckets.get(m)
            if b:
                break
            if b is not None:
                del buckets[m]
            m -= 1
        self.max_count = m
        return m

    def all_same(self) -> bool:
        return len(self.sym_count) == 1

    def select(self) -> tuple[int, int]:
        """Max-count pair; ties by (pair scale, left scale, earliest slot)."""
        m = self.current_max()
        scales = self.scales
        best_key = None
        tied: list[tuple[int, int]] = []
        for q in self.buckets[m]:
            sa = scales[q[0]]
            key = (sa + scales[q[1]], sa)
            if best_key is None or key < best_key:
                best_key = key
                tied = [q]
            elif key == best_key:
                tied.append(q)
        if len(tied) == 1:
            return tied[0]
        occs = self.occs
        return min(tied, key=lambda q: min(occs[q]))

    # -- the substitution pass

    def substitute(self, pair) -> tuple[int, int, int]:
        """Replace all counted occurrences of ``pair`` with a fresh symbol.

        Returns (new_symbol, occurrences, pair_scale). Occurrences are
        processed in sequence order so that greedy run semantics carry over
        to the pairs formed by the replacement symbol itself.
        """
        occs = self.occs
        syms = self.syms
        nxt = self.nxt
        prv = self.prv
        a, b = pair
        slots = sorted(occs.pop(pair))
        cnt = len(slots)
        self.buckets[cnt].discard(pair)
        new = self.next_id
        self.next_id = new + 1
        ps = self.scales[a] + self.scales[b]
        self.scales[new] = ps
        for i in slots:
            j = nxt[i]
            l = prv[i]
            r = nxt[j]
            if l >= 0:
                x = syms[l]
                q = (x, a)
                s = occs.get(q)
                if s is not None and l in s:
                    self._remove_occ(q, l)
            if r >= 0:
                y = syms[r]
                q = (b, y)
                s = occs.get(q)
                if s is not None and j in s:
                    self._remove_occ(q, j)
                    if y == b:
                        # killed the head of a same-symbol run: the greedy
                        # anchoring of the rest of the run shifts by one
                        self._regreedy(r, b)
            syms[i] = new
            nxt[i] = r
            if r >= 0:
                prv[r] = i
            if l >= 0:
                x = syms[l]
                if x == new:
                    p2 = prv[l]
                    if p2 >= 0 and syms[p2] == new and p2 in occs.get((new, new), _EMPTY):
                        pass  # l is already the right half of a counted pair
                    else:
                        self._add_occ((new, new), l)
                else:
                    self._add_occ((x, new), l)
            if r >= 0:
                self._add_occ((new, syms[r]), i)
        self.length -= cnt
        sc = self.sym_count
        if a == b:
            rem = sc[a] - 2 * cnt
            if rem:
                sc[a] = rem
            else:
                del sc[a]
        else:
            ra = sc[a] - cnt
            if ra:
                sc[a] = ra
            else:
                del sc[a]
            rb = sc[b] - cnt
            if rb:
                sc[b] = rb
            else:
                del sc[b]
        sc[new] = cnt
        return new, cnt, ps

    def state(self) -> list[int]:
        """Materialize the current sequence (slot 0 is always the head)."""
        out = []
        syms = self.syms
        nxt = self.nxt
        t = 0 if self.length else -1
        while t >= 0:
            out.append(syms[t])
            t = nxt[t]
        return out


# ---------------------------------------------------------------------------
# Runs


def run_spectrum(series, bins: int = 8) -> tuple[CompressionSpectrum, SpectrumTrace]:
    """Compute the compression spectrum of a series (or symbolic sequence).

    The loop repeats count / stop-check / select / substitute, recording one
    step per substitution. Spectrum-eligible iterations are the leading part
    of the full compression run: the loop ends as soon as the sequence
    reaches length 1, all symbols are identical (the run's own termination),
    or every pair occurs at most once (nothing left to learn). The ratio at
    each scale is the product of the per-iteration compression ratios of the
    substitutions attributed to it.
    """
    seq = _as_sequence(series, bins)
    eng = _Engine(seq.symbols, seq.scales)
    original = eng.length
    steps: list[SubstitutionStep] = []
    while True:
        if eng.length <= 1:
            reason = STOP_LENGTH_ONE
            break
        if eng.all_same():
            reason = STOP_ALL_SYMBOLS_SAME
            break
        if eng.current_max() <= 1:
            reason = STOP_ALL_PAIRS_UNIQUE
            break
        pair = eng.select()
        lb = eng.length
        new, occ, ps = eng.substitute(pair)
        la = eng.length
        steps.append(
            SubstitutionStep(len(steps) + 1, pair, ps, new, occ, lb, la, lb / la)
        )
    points: dict[int, float] = {}
    for st in steps:
        points[st.pair_scale] = points.get(st.pair_scale, 1.0) * st.cr
    trace = SpectrumTrace(
        steps=steps,
        stop_reason=reason,
        original_length=original,
        final_length=eng.length,
    )
    return CompressionSpectrum(points, original), trace


def run_etc(series, bins: int = 8) -> EtcResult:
    """Count substitutions until the sequence has length 1 or one symbol.

    Once every pair is unique each remaining substitution removes exactly
    one symbol and can never recreate a repeat, so the tail of the run is
    settled arithmetically instead of iterated.
    """
    seq = _as_sequence(series, bins)
    eng = _Engine(seq.symbols, seq.scales)
    original = eng.length
    n = 0
    while eng.length > 1 and len(eng.sym_count) > 1:
        if eng.current_max() <= 1:
            n += eng.length - 1
            break
        eng.substitute(eng.select())
        n += 1
    normalized = n / (original - 1) if original > 1 else 0.0
    return EtcResult(iterations=n, normalized=normalized)


def run_etc_trace(series, bins: int = 8) -> EtcTrace:
    """Like :func:`run_etc` but records every step and intermediate state.

    Runs the unique-pair tail one substitution at a time, so prefer
    :func:`run_etc` for long inputs where only the count matters.
    """
    seq = _as_sequence(series, bins)
    eng = _Engine(seq.symbols, seq.scales)
    original = eng.length
    steps: list[SubstitutionStep] = []
    states: list[list[int]] = []
    while eng.length > 1 and len(eng.sym_count) > 1:
        pair = eng.select()
        lb = eng.length
        new, occ, ps = eng.substitute(pair)
        la = eng.length
        steps.append(
            SubstitutionStep(len(steps) + 1, pair, ps, new, occ, lb, la, lb / la)
        )
        states.append(eng.state())
    n = len(steps)
    result = EtcResult(iterations=n, normalized=n / (original - 1) if original > 1 else 0.0)
    return EtcTrace(result=result, steps=steps, states=states)
