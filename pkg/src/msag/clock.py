"""Injectable time sources: real wall clock and a controllable simulated clock."""

from __future__ import annotations

import threading
import time


class Clock:
    """Time source interface; components read time only through a Clock."""

    def now(self) -> float:
        raise NotImplementedError

    def now_ms(self) -> int:
        return int(self.now() * 1000)


class RealClock(Clock):
    def now(self) -> float:
        return time.time()


class SimClock(Clock):
    """Simulated clock so day-scale timelines (expiry, rotation) run at desk scale.

    Monotonic by construction: advance() only moves forward. A harness topology
    shares one instance across every component.
    """

    def __init__(self, start: float = 1_700_000_000.0):
        self._now = float(start)
        self._lock = threading.Lock()

    def now(self) -> float:
        with self._lock:
            return self._now

    def advance(self, seconds: float) -> float:
        """Move the clock forward and return the new time."""
        if seconds < 0:
            raise ValueError("SimClock only moves forward")
        with self._lock:
            self._now += seconds
            return self._now
