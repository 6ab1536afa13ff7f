from abc import ABC, abstractmethod
from typing import Any, TypeVar

import pandas as pd

from vgpp_pricing.domain.calibration import QuoteSet, ReturnSeries
from vgpp_pricing.domain.config import RunConfig
from vgpp_pricing.domain.pricing import MarketModel

R = TypeVar("R")


class IArtifactStore(ABC):
    @abstractmethod
    async def load_run_config(self, file_path: str) -> RunConfig:
        """Loads a run configuration from a JSON file.

        Args:
            file_path (str): The path to the JSON configuration file.

        Returns:
            RunConfig: The loaded run configuration, not yet validated for its command.

        """
        pass

    @abstractmethod
    async def load_return_series(self, file_path: str, dt: float) -> ReturnSeries:
        """Loads a `date,price` CSV file as a return series.

        Args:
            file_path (str): The path to the CSV file.
            dt (float): Year fraction between consecutive observations.

        Returns:
            ReturnSeries: The observed log-prices.

        """
        pass

    @abstractmethod
    async def load_quote_set(self, file_path: str, market: MarketModel) -> QuoteSet:
        """Loads a `K,T,mid` CSV file of call quotes.

        Args:
            file_path (str): The path to the CSV file.
            market (MarketModel): Forward and rate the quotes refer to.

        Returns:
            QuoteSet: The quotes in file order.

        """
        pass

    @abstractmethod
    async def write_report(self, file_path: str, report: Any) -> None:
        """Writes a report dataclass as versioned JSON."""
        pass

    @abstractmethod
    async def read_report(self, file_path: str, report_class: type[R]) -> R:
        """Reads a versioned JSON report back into ``report_class``."""
        pass

    @abstractmethod
    async def write_frame(self, file_path: str, frame: pd.DataFrame) -> None:
        """Writes a data frame as CSV without the index column."""
        pass
