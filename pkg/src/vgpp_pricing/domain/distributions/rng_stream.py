import numpy as np


class RngStream:
    """Seedable random stream.

    Identical ``(seed, stream_id)`` pairs reproduce identical draw sequences bit-exactly; distinct
    stream ids are statistically independent (``numpy.random.SeedSequence`` spawn keys). A stream is
    owned by exactly one worker at a time.

    Attributes:
        seed (int): 64-bit root seed.
        stream_id (int): Worker partition index.
    """

    def __init__(self, seed: int, stream_id: int = 0, _lineage: tuple[int, ...] = ()):
        if seed < 0 or stream_id < 0:
            raise ValueError("seed and stream_id must be non-negative 64-bit integers")

        self.seed = int(seed)
        self.stream_id = int(stream_id)
        self._lineage = _lineage
        self._sequence = np.random.SeedSequence(entropy=self.seed, spawn_key=(self.stream_id, *_lineage))
        self.generator = np.random.Generator(np.random.PCG64(self._sequence))

    @property
    def seed_info(self) -> tuple[int, int]:
        return self.seed, self.stream_id

    def substream(self, index: int) -> "RngStream":
        """Derive an independent child stream, reproducible from this stream's identity and ``index``."""
        return RngStream(self.seed, self.stream_id, (*self._lineage, int(index)))

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, stream_id={self.stream_id}, lineage={self._lineage})"
