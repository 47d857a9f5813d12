import math

from pydantic import BaseModel, ConfigDict, Field, model_validator

from multinst.config import settings


class SynthConfig(BaseModel):
    """가우시안 클래스 조건부 분포 기반 합성 데이터 설정

    observed_dims 는 1부터 시작하는 좌표 번호. observed_dims ⊊ {1..d} 이면
    가중치는 전체 좌표로 계산되지만 특성에는 일부만 남는다 (incomplete 데이터).
    """
    model_config = ConfigDict(frozen=True)

    dim: int = Field(..., ge=1, description="특성 차원 d")
    mean_a: list[float] = Field(..., description="클래스 A 평균 벡터")
    mean_b: list[float] = Field(..., description="클래스 B 평균 벡터")
    scale: float = Field(1.0, gt=0, description="공통 등방 표준편차")
    observed_dims: list[int] = Field(..., min_length=1, description="관측 좌표 (1-based)")
    class_prior: float = Field(0.5, gt=0, lt=1, description="혼합 샘플링 시 A 비율 π")
    seed: int = Field(default_factory=lambda: settings.seed, ge=0, lt=2**64)

    @model_validator(mode="after")
    def check_geometry(self):
        if len(self.mean_a) != self.dim or len(self.mean_b) != self.dim:
            raise ValueError(f"mean_a / mean_b 길이는 dim({self.dim})과 같아야 합니다")
        if len(set(self.observed_dims)) != len(self.observed_dims):
            raise ValueError("observed_dims 에 중복이 있습니다")
        if any(k < 1 or k > self.dim for k in self.observed_dims):
            raise ValueError(f"observed_dims 는 1..{self.dim} 범위여야 합니다")
        if self.mean_a == self.mean_b:
            raise ValueError("mean_a 와 mean_b 가 같으면 두 클래스를 구분할 수 없습니다")
        return self

    @property
    def observed_index(self) -> list[int]:
        """0-based 관측 좌표 (정렬)"""
        return sorted(k - 1 for k in self.observed_dims)

    @property
    def is_complete(self) -> bool:
        return len(self.observed_dims) == self.dim


class McEstimate(BaseModel):
    """Monte Carlo 추정값 + 이항 표준오차"""
    model_config = ConfigDict(frozen=True)

    value: float
    std_error: float = Field(..., ge=0)
    n_groups: int = Field(..., ge=1)

    @classmethod
    def from_count(cls, successes: float, n_groups: int) -> "McEstimate":
        """성공 횟수 (동점 0.5 포함 가능) → 비율 + √(v(1-v)/n)"""
        value = successes / n_groups
        return cls(
            value=value,
            std_error=math.sqrt(max(value * (1.0 - value), 0.0) / n_groups),
            n_groups=n_groups,
        )


class SimulationRow(BaseModel):
    """simulate 비교 테이블의 한 행 (Monte Carlo vs 해석식)"""
    n: int
    n_groups: int = Field(..., ge=1, exclude=True)
    theta: float
    tpr_mc: float
    tpr_se: float
    tpr_analytic: float
    fpr_mc: float
    fpr_se: float
    fpr_analytic: float
    auc_mc: float
    auc_se: float
    auc_analytic: float

    def max_deviation(self) -> float:
        """|mc - analytic| / se 의 최댓값 (se 하한 1/n_groups: 추정값이 0 또는 1 일 때)"""
        floor = 1.0 / self.n_groups
        return max(
            abs(mc - an) / max(se, floor)
            for mc, se, an in (
                (self.tpr_mc, self.tpr_se, self.tpr_analytic),
                (self.fpr_mc, self.fpr_se, self.fpr_analytic),
                (self.auc_mc, self.auc_se, self.auc_analytic),
            )
        )
