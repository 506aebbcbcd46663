"""Container for per-scale accumulated compression ratios."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InvalidInputError

# CR(s) counts as non-zero compression iff log2 CR(s) exceeds this. Real
# substitutions are ratios of integers and clear it by orders of magnitude.
LOG2_CR_EPS = 1e-12


@dataclass
class CompressionSpectrum:
    """Mapping scale -> accumulated compression ratio CR(s).

    Scales with no substitutions are omitted and implicitly read as CR = 1;
    every stored entry must show actual compression (log2 CR(s) above
    ``LOG2_CR_EPS``) and lie within 2 <= scale <= origin_length.
    """

    points: dict[int, float] = field(default_factory=dict)
    origin_length: int = 1

    def __post_init__(self):
        if self.origin_length < 1:
            raise InvalidInputError("origin_length must be a positive integer")
        clean: dict[int, float] = {}
        for s in sorted(self.points):
            cr = float(self.points[s])
            scale = int(s)
            if scale != s or not 2 <= scale <= self.origin_length:
                raise InvalidInputError(
                    f"scale {s!r} outside 2..{self.origin_length}"
                )
            if cr <= 0 or math.log2(cr) <= LOG2_CR_EPS:
                raise InvalidInputError(
                    f"CR at scale {scale} is {cr!r}: no compression, must be omitted"
                )
            clean[scale] = cr
        self.points = clean

    def __len__(self) -> int:
        return len(self.points)

    def scales(self) -> list[int]:
        """Stored scales in ascending order."""
        return list(self.points)

    def log2_points(self) -> dict[int, float]:
        """Scale -> log2 CR(s) for the stored points."""
        return {s: math.log2(cr) for s, cr in self.points.items()}

    def total_log2(self) -> float:
        """Sum of log2 CR(s) over all scales (the trace's total compression)."""
        return sum(math.log2(cr) for cr in self.points.values())
