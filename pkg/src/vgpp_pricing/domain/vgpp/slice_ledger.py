import threading


class SliceLedger:
    """Counts live state slices (one value per path at one time) held by a simulation.

    ``peak`` is the largest number of slices alive at once.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self.live = 0
        self.peak = 0
        self.allocations = 0

    def allocate(self, count: int = 1) -> None:
        with self._lock:
            self.live += count
            self.allocations += count
            self.peak = max(self.peak, self.live)

    def release(self, count: int = 1) -> None:
        with self._lock:
            if count > self.live:
                raise RuntimeError(f"releasing {count} slices with only {self.live} alive")
            self.live -= count

    def __repr__(self) -> str:
        return f"SliceLedger(live={self.live}, peak={self.peak}, allocations={self.allocations})"
