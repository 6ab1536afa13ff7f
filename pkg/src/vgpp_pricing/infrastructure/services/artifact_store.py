import io
import json
import logging
import os
from enum import Enum
from typing import Any, TypeVar

import aiofiles
import aiofiles.os
import numpy as np
import pandas as pd
from dacite import Config, DaciteError, from_dict

from vgpp_pricing.domain.calibration import Quote, QuoteSet, ReturnSeries
from vgpp_pricing.domain.config import RunConfig
from vgpp_pricing.domain.errors import ConfigurationError
from vgpp_pricing.domain.pricing import MarketModel
from vgpp_pricing.domain.reports import report_from_dict, report_to_json
from vgpp_pricing.infrastructure.services.iartifact_store import IArtifactStore

R = TypeVar("R")


class ArtifactStore(IArtifactStore):
    """File-backed inputs and outputs of a run.

    Every read failure surfaces as ``ConfigurationError`` naming the file and, for CSV input, the
    offending line and column.
    """

    def __init__(self):
        self.logger = logging.getLogger("artifact_store")

    async def _read_text(self, file_path: str) -> str:
        try:
            async with aiofiles.open(file_path, mode="r", encoding="utf-8") as file:
                return await file.read()
        except OSError as e:
            raise ConfigurationError(f"{file_path}: cannot read file ({e.strerror or e})") from e

    async def _write_text(self, file_path: str, content: str) -> None:
        directory = os.path.dirname(file_path)
        if directory:
            await aiofiles.os.makedirs(directory, exist_ok=True)
        try:
            async with aiofiles.open(file_path, mode="w", encoding="utf-8", newline="") as file:
                await file.write(content)
        except OSError as e:
            raise ConfigurationError(f"{file_path}: cannot write file ({e.strerror or e})") from e

    def _decode_json(self, file_path: str, content: str) -> dict:
        try:
            data = json.loads(content)
        except json.JSONDecodeError as e:
            raise ConfigurationError(f"{file_path}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from e
        if not isinstance(data, dict):
            raise ConfigurationError(f"{file_path}: expected a JSON object at the top level")
        return data

    async def load_run_config(self, file_path: str) -> RunConfig:
        self.logger.info(f"Loading run configuration from {file_path}", extra={"vgpp_file": file_path})
        data = self._decode_json(file_path, await self._read_text(file_path))

        try:
            return from_dict(
                data_class=RunConfig,
                data=data,
                config=Config(type_hooks={float: float}, cast=[Enum], strict=True),
            )
        except DaciteError as e:
            raise ConfigurationError(f"{file_path}: {e}") from e
        except ValueError as e:
            raise ConfigurationError(f"{file_path}: invalid value: {e}") from e

    def _read_frame(self, file_path: str, content: str, columns: list[str]) -> pd.DataFrame:
        try:
            frame = pd.read_csv(io.StringIO(content), dtype=str, skipinitialspace=True)
        except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
            raise ConfigurationError(f"{file_path}: unreadable CSV: {e}") from e

        missing = [c for c in columns if c not in frame.columns]
        if missing:
            raise ConfigurationError(
                f"{file_path}: missing column(s) {', '.join(missing)}; header is {','.join(map(str, frame.columns))}"
            )
        if frame.empty:
            raise ConfigurationError(f"{file_path}: no data rows")
        return frame[columns]

    @staticmethod
    def _fail_at(file_path: str, frame: pd.DataFrame, bad: pd.Series, column: str, problem: str) -> None:
        if bad.any():
            row = int(np.flatnonzero(bad.to_numpy())[0])
            value = frame[column].iloc[row]
            # header is line 1
            raise ConfigurationError(f"{file_path}: line {row + 2}, column '{column}': {problem} ({value!r})")

    def _numeric(self, file_path: str, frame: pd.DataFrame, column: str) -> pd.Series:
        values = pd.to_numeric(frame[column], errors="coerce")
        self._fail_at(file_path, frame, values.isna() | ~np.isfinite(values), column, "not a finite number")
        self._fail_at(file_path, frame, values <= 0, column, "must be positive")
        return values

    async def load_return_series(self, file_path: str, dt: float) -> ReturnSeries:
        frame = self._read_frame(file_path, await self._read_text(file_path), ["date", "price"])

        dates = pd.to_datetime(frame["date"], errors="coerce", format="ISO8601")
        self._fail_at(file_path, frame, dates.isna(), "date", "not an ISO date")
        prices = self._numeric(file_path, frame, "price")
        order = dates.diff().dt.days.fillna(1) <= 0
        self._fail_at(file_path, frame, order, "date", "dates must be strictly increasing")

        series = ReturnSeries.from_prices(dates.to_numpy().astype("datetime64[D]"), prices.to_numpy(), dt)
        self.logger.info(
            f"Loaded {series.log_prices.size} prices from {file_path}",
            extra={"vgpp_file": file_path, "vgpp_rows": series.log_prices.size},
        )
        return series

    async def load_quote_set(self, file_path: str, market: MarketModel) -> QuoteSet:
        frame = self._read_frame(file_path, await self._read_text(file_path), ["K", "T", "mid"])
        values = {column: self._numeric(file_path, frame, column) for column in ("K", "T", "mid")}

        quotes = [
            Quote(K=float(k), T=float(t), mid=float(m)) for k, t, m in zip(values["K"], values["T"], values["mid"])
        ]
        self.logger.info(
            f"Loaded {len(quotes)} quotes from {file_path}", extra={"vgpp_file": file_path, "vgpp_rows": len(quotes)}
        )
        return QuoteSet(quotes=quotes, market=market)

    async def write_report(self, file_path: str, report: Any) -> None:
        await self._write_text(file_path, report_to_json(report))
        self.logger.info(f"Wrote {type(report).__name__} to {file_path}", extra={"vgpp_file": file_path})

    async def read_report(self, file_path: str, report_class: type[R]) -> R:
        data = self._decode_json(file_path, await self._read_text(file_path))
        try:
            return report_from_dict(report_class, data)
        except DaciteError as e:
            raise ConfigurationError(f"{file_path}: {e}") from e

    async def write_frame(self, file_path: str, frame: pd.DataFrame) -> None:
        await self._write_text(file_path, frame.to_csv(index=False, lineterminator="\n"))
        self.logger.debug(f"Wrote {len(frame)} rows to {file_path}", extra={"vgpp_file": file_path})
