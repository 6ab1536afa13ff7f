import logging
import os

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from vgpp_pricing.domain.pricing import DEFAULT_CHUNK_SIZE, DEFAULT_SERIES_CUTOFF, FFTConfig


class VgppOptions(BaseSettings):
    """Numerical runtime options loaded from environment variables and .env files.

    Attributes:
        threads (int): Worker count for partitioned Monte Carlo and multi-start calibration.
            Never changes numerical output, only wall time.
        mc_chunk_size (int): Paths per deterministic random-stream partition.
        series_cutoff (float): Relative cut-off for truncating the closed-form pricing series.
        density_tolerance (float): Relative truncation threshold of the mixture densities.
        fft_damping (float): Default Carr-Madan damping exponent.
        fft_grid_size (int): Default FFT grid size (power of two).
        fft_eta (float): Default frequency spacing of the FFT grid.
        calibration_starts (int): Number of multi-start points for the calibrators.
    """

    model_config = SettingsConfigDict(
        env_file=(".env", f".env.{os.environ.get('ENV')}"), env_file_encoding="utf-8", extra="allow"
    )

    threads: int = Field(default=1, validation_alias="VGPP_THREADS")
    mc_chunk_size: int = Field(default=DEFAULT_CHUNK_SIZE, validation_alias="VGPP_MC_CHUNK_SIZE")
    series_cutoff: float = Field(default=DEFAULT_SERIES_CUTOFF, validation_alias="VGPP_SERIES_CUTOFF")
    density_tolerance: float = Field(default=1e-10, validation_alias="VGPP_DENSITY_TOLERANCE")
    fft_damping: float = Field(default=1.5, validation_alias="VGPP_FFT_DAMPING")
    fft_grid_size: int = Field(default=2**14, validation_alias="VGPP_FFT_GRID_SIZE")
    fft_eta: float = Field(default=0.25, validation_alias="VGPP_FFT_ETA")
    calibration_starts: int = Field(default=5, validation_alias="VGPP_CALIBRATION_STARTS")

    def fft_config(self) -> FFTConfig:
        return FFTConfig(damping=self.fft_damping, grid_size=self.fft_grid_size, eta=self.fft_eta)


_logger: logging.Logger = logging.getLogger("vgpp_options")

_vgpp_options: VgppOptions | None = None


def get_vgpp_options() -> VgppOptions:
    """Get the singleton instance of VgppOptions.

    Returns:
        VgppOptions: The numerical runtime options instance.
    """
    global _vgpp_options
    if _vgpp_options is None:
        options = VgppOptions()

        # Validate required configuration
        if options.threads < 1:
            raise ValueError("VGPP_THREADS must be at least 1")
        if options.mc_chunk_size < 1000:
            raise ValueError("VGPP_MC_CHUNK_SIZE must be at least 1000")
        if not 0 < options.series_cutoff <= 1e-2:
            raise ValueError("VGPP_SERIES_CUTOFF must lie in (0, 1e-2]")
        if not 0 < options.density_tolerance < 1e-3:
            raise ValueError("VGPP_DENSITY_TOLERANCE must lie in (0, 1e-3)")
        if options.fft_damping <= 0:
            raise ValueError("VGPP_FFT_DAMPING must be positive")
        if options.fft_grid_size < 2**10 or options.fft_grid_size & (options.fft_grid_size - 1):
            raise ValueError("VGPP_FFT_GRID_SIZE must be a power of two no smaller than 1024")
        if options.fft_eta <= 0:
            raise ValueError("VGPP_FFT_ETA must be positive")
        if options.calibration_starts < 5:
            raise ValueError("VGPP_CALIBRATION_STARTS must be at least 5")

        _vgpp_options = options
        _logger.info(
            "Vgpp options loaded: threads=%s, mc_chunk_size=%s, series_cutoff=%s",
            options.threads,
            options.mc_chunk_size,
            options.series_cutoff,
        )

    return _vgpp_options


def clear_vgpp_options_cache() -> None:
    """Clear the cached VgppOptions instance."""
    global _vgpp_options
    _vgpp_options = None
