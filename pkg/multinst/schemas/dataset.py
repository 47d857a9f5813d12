"""데이터셋 컨테이너 — numpy 배열 기반 (인스턴스 수가 수십만 단위)

단일 인스턴스 스키마(pydantic)는 schemas/core.py, 배열 묶음은 여기 dataclass.
"""
from dataclasses import dataclass, field

import numpy as np

from multinst.exceptions import DimensionMismatchError, InvalidInstanceError, InvalidScoreError
from multinst.schemas.core import ScoredInstance, SoftLabel, WeightedInstance


def _as_weights(omega_a, omega_b) -> tuple[np.ndarray, np.ndarray]:
    """가중치 배열 검증: 1차원, 동일 길이, 비음수, 인스턴스별 합 > 0"""
    wa = np.asarray(omega_a, dtype=np.float64)
    wb = np.asarray(omega_b, dtype=np.float64)
    if wa.ndim != 1 or wa.shape != wb.shape:
        raise DimensionMismatchError(f"가중치 배열 형태 불일치: {wa.shape} vs {wb.shape}")
    if not (np.all(wa >= 0) and np.all(wb >= 0)):
        raise InvalidInstanceError("가중치는 음수일 수 없습니다 (NaN 포함)")
    if np.any(wa + wb <= 0):
        raise InvalidInstanceError("omega_a + omega_b = 0 인 인스턴스가 있습니다")
    return wa, wb


@dataclass(frozen=True)
class WeightedDataset:
    """특성 (M, d) + 가중치 ω_A, ω_B (M,)"""
    features: np.ndarray
    omega_a: np.ndarray
    omega_b: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.features, dtype=np.float64)
        if x.ndim != 2:
            raise DimensionMismatchError(f"features 는 (M, d) 2차원이어야 합니다: {x.shape}")
        wa, wb = _as_weights(self.omega_a, self.omega_b)
        if x.shape[0] != wa.shape[0]:
            raise DimensionMismatchError(
                f"특성 행 수({x.shape[0]})와 가중치 수({wa.shape[0]})가 다릅니다"
            )
        object.__setattr__(self, "features", x)
        object.__setattr__(self, "omega_a", wa)
        object.__setattr__(self, "omega_b", wb)

    def __len__(self) -> int:
        return self.features.shape[0]

    @property
    def dim(self) -> int:
        return self.features.shape[1]

    @property
    def soft_labels(self) -> np.ndarray:
        """w1 = ω_A / (ω_A + ω_B)"""
        return self.omega_a / (self.omega_a + self.omega_b)

    @classmethod
    def from_instances(cls, instances: list[WeightedInstance]) -> "WeightedDataset":
        if not instances:
            raise DimensionMismatchError("빈 인스턴스 목록")
        dims = {len(inst.features) for inst in instances}
        if len(dims) != 1:
            raise DimensionMismatchError(f"특성 차원이 일정하지 않습니다: {sorted(dims)}")
        return cls(
            features=np.array([inst.features for inst in instances], dtype=np.float64),
            omega_a=np.array([inst.omega_a for inst in instances]),
            omega_b=np.array([inst.omega_b for inst in instances]),
        )

    def subset(self, index: np.ndarray) -> "WeightedDataset":
        return WeightedDataset(self.features[index], self.omega_a[index], self.omega_b[index])

    def to_batch(self) -> "SoftLabelBatch":
        return SoftLabelBatch(features=self.features, w1=self.soft_labels)


@dataclass(frozen=True)
class ScoredDataset:
    """점수 p_i + 가중치 ω_A, ω_B: 추정기/Monte Carlo 의 입력"""
    scores: np.ndarray
    omega_a: np.ndarray
    omega_b: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.scores, dtype=np.float64)
        if not np.all((s >= 0) & (s <= 1)):
            raise InvalidScoreError("점수는 [0,1] 범위여야 합니다 (NaN 불가)")
        wa, wb = _as_weights(self.omega_a, self.omega_b)
        if s.shape != wa.shape:
            raise DimensionMismatchError(f"점수 수({s.shape})와 가중치 수({wa.shape})가 다릅니다")
        object.__setattr__(self, "scores", s)
        object.__setattr__(self, "omega_a", wa)
        object.__setattr__(self, "omega_b", wb)

    def __len__(self) -> int:
        return self.scores.shape[0]

    @classmethod
    def from_instances(cls, instances: list[ScoredInstance]) -> "ScoredDataset":
        return cls(
            scores=np.array([inst.score for inst in instances], dtype=np.float64),
            omega_a=np.array([inst.omega_a for inst in instances], dtype=np.float64),
            omega_b=np.array([inst.omega_b for inst in instances], dtype=np.float64),
        )

    def with_scores(self, scores: np.ndarray) -> "ScoredDataset":
        return ScoredDataset(scores, self.omega_a, self.omega_b)


@dataclass(frozen=True)
class SoftLabelBatch:
    """학습 배치: 특성 (M, d) + 소프트 라벨 w1 (M,)"""
    features: np.ndarray
    w1: np.ndarray = field(repr=False)

    def __post_init__(self):
        x = np.asarray(self.features, dtype=np.float64)
        w1 = np.asarray(self.w1, dtype=np.float64)
        if x.ndim != 2 or w1.shape != (x.shape[0],):
            raise DimensionMismatchError(f"배치 형태 불일치: features {x.shape}, w1 {w1.shape}")
        object.__setattr__(self, "features", x)
        object.__setattr__(self, "w1", w1)

    def __len__(self) -> int:
        return self.features.shape[0]

    @classmethod
    def from_pairs(cls, pairs: list[tuple[list[float], SoftLabel]]) -> "SoftLabelBatch":
        return cls(
            features=np.array([f for f, _ in pairs], dtype=np.float64),
            w1=np.array([label.w1 for _, label in pairs], dtype=np.float64),
        )
