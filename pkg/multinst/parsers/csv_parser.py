"""CSV 파서 — 헤더는 비트 단위로 고정, 실수는 17 유효숫자 (double 무손실 왕복)"""
import csv
import logging
from typing import Iterable, Mapping

import numpy as np
from pydantic import BaseModel

from multinst.config import settings
from multinst.exceptions import InputFormatError
from multinst.parsers.base import BaseParser, open_output
from multinst.schemas.dataset import ScoredDataset, WeightedDataset

logger = logging.getLogger(__name__)

SCORES_COLUMNS = ["score", "omega_a", "omega_b"]
RATES_COLUMNS = ["n", "theta", "c", "tpr", "fpr", "miss", "auc_n"]
COMPARISON_COLUMNS = [
    "n", "theta",
    "tpr_mc", "tpr_se", "tpr_analytic",
    "fpr_mc", "fpr_se", "fpr_analytic",
    "auc_mc", "auc_se", "auc_analytic",
]
TRACE_COLUMNS = ["epoch", "loss_train", "loss_val", "auc_val"]
ROC_COLUMNS = ["theta", "tpr", "fpr"]


def format_number(value) -> str:
    """정수는 그대로, 실수는 17 유효숫자"""
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), f".{settings.float_digits}g")


def _read_rows(file_path: str) -> tuple[list[str], np.ndarray]:
    with open(file_path, encoding="utf-8", newline="") as f:
        reader = csv.reader(f)
        try:
            header = next(reader)
        except StopIteration:
            raise InputFormatError(f"빈 CSV 파일입니다: {file_path}")
        rows = [row for row in reader if row]
    try:
        data = np.array([[float(v) for v in row] for row in rows], dtype=np.float64)
    except ValueError as e:
        raise InputFormatError(f"{file_path}: 숫자로 읽을 수 없는 값이 있습니다 ({e})")
    if rows and (data.ndim != 2 or data.shape[1] != len(header)):
        raise InputFormatError(f"{file_path}: 열 개수가 헤더({len(header)})와 다릅니다")
    return header, data.reshape(-1, len(header))


def _write_rows(file_path: str | None, header: list[str], rows: Iterable[Iterable]) -> None:
    with open_output(file_path) as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_number(v) for v in row])


class DatasetCsvParser(BaseParser):
    """x1,...,xd,omega_a,omega_b"""

    def read(self, file_path: str) -> WeightedDataset:
        header, data = _read_rows(file_path)
        features = header[:-2]
        expected = [f"x{k}" for k in range(1, len(features) + 1)]
        if header[-2:] != ["omega_a", "omega_b"] or features != expected or not features:
            raise InputFormatError(f"{file_path}: 데이터셋 헤더는 x1,...,xd,omega_a,omega_b 여야 합니다")
        if data.shape[0] == 0:
            raise InputFormatError(f"{file_path}: 데이터 행이 없습니다")
        logger.info(f"데이터셋 읽기: {file_path} ({data.shape[0]}행, d={len(features)})")
        return WeightedDataset(features=data[:, :-2], omega_a=data[:, -2], omega_b=data[:, -1])

    def write(self, file_path: str | None, payload: WeightedDataset) -> None:
        header = [f"x{k}" for k in range(1, payload.dim + 1)] + ["omega_a", "omega_b"]
        table = np.column_stack([payload.features, payload.omega_a, payload.omega_b])
        _write_rows(file_path, header, table.tolist())


class ScoresCsvParser(BaseParser):
    """score,omega_a,omega_b"""

    def read(self, file_path: str) -> ScoredDataset:
        header, data = _read_rows(file_path)
        if header != SCORES_COLUMNS:
            raise InputFormatError(f"{file_path}: 점수 헤더는 {','.join(SCORES_COLUMNS)} 여야 합니다")
        if data.shape[0] == 0:
            raise InputFormatError(f"{file_path}: 데이터 행이 없습니다")
        return ScoredDataset(scores=data[:, 0], omega_a=data[:, 1], omega_b=data[:, 2])

    def write(self, file_path: str | None, payload: ScoredDataset) -> None:
        table = np.column_stack([payload.scores, payload.omega_a, payload.omega_b])
        _write_rows(file_path, SCORES_COLUMNS, table.tolist())


class TableCsvParser(BaseParser):
    """고정 열 테이블: 행은 dict 또는 pydantic 모델"""

    columns: list[str] = []
    # 정수로 쓰고 읽는 열
    integer_columns: set[str] = set()

    def read(self, file_path: str) -> dict[str, np.ndarray]:
        header, data = _read_rows(file_path)
        if header != self.columns:
            raise InputFormatError(f"{file_path}: 헤더는 {','.join(self.columns)} 여야 합니다")
        return {
            name: data[:, k].astype(np.int64) if name in self.integer_columns else data[:, k]
            for k, name in enumerate(self.columns)
        }

    def write(self, file_path: str | None, payload: Iterable[Mapping | BaseModel]) -> None:
        rows = []
        for item in payload:
            record = item.model_dump() if isinstance(item, BaseModel) else item
            rows.append([
                int(record[name]) if name in self.integer_columns else float(record[name])
                for name in self.columns
            ])
        _write_rows(file_path, self.columns, rows)


class RatesCsvParser(TableCsvParser):
    columns = RATES_COLUMNS
    integer_columns = {"n"}


class ComparisonCsvParser(TableCsvParser):
    columns = COMPARISON_COLUMNS
    integer_columns = {"n"}


class TraceCsvParser(TableCsvParser):
    columns = TRACE_COLUMNS
    integer_columns = {"epoch"}


class RocCsvParser(TableCsvParser):
    columns = ROC_COLUMNS
