import math
from enum import Enum
from typing import TypeAlias

from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy.special import expit

# θ 와 sigmoid(-C) 의 허용 상대오차 (θ → C → θ 왕복 반올림)
THRESHOLD_REL_TOL = 1e-12


# log(p / (1 - p)): 클램프된 점수의 자연로그 odds
LogOdds: TypeAlias = float


class ClassLabel(str, Enum):
    """이진 분류 라벨"""
    A = "A"
    B = "B"


class WeightedInstance(BaseModel):
    """특성 벡터 + 클래스 소속 확률에 비례하는 가중치 (ω_A, ω_B)"""
    model_config = ConfigDict(frozen=True)

    features: list[float] = Field(..., description="특성 벡터 (차원 d)")
    omega_a: float = Field(..., ge=0, description="클래스 A 가중치")
    omega_b: float = Field(..., ge=0, description="클래스 B 가중치")

    @model_validator(mode="after")
    def check_total_weight(self):
        if not self.omega_a + self.omega_b > 0:
            raise ValueError("omega_a + omega_b 는 0보다 커야 합니다")
        return self


class ScoredInstance(BaseModel):
    """단일 인스턴스 사후확률 점수 p = P(A|X) + 가중치"""
    model_config = ConfigDict(frozen=True)

    score: float = Field(..., ge=0, le=1)
    omega_a: float = Field(..., ge=0)
    omega_b: float = Field(..., ge=0)

    @model_validator(mode="after")
    def check_total_weight(self):
        if not self.omega_a + self.omega_b > 0:
            raise ValueError("omega_a + omega_b 는 0보다 커야 합니다")
        return self

    @classmethod
    def labelled(cls, score: float, label: ClassLabel) -> "ScoredInstance":
        """정답 라벨 → 경성(hard) 가중치 (1,0) 또는 (0,1)"""
        if label == ClassLabel.A:
            return cls(score=score, omega_a=1.0, omega_b=0.0)
        return cls(score=score, omega_a=0.0, omega_b=1.0)


class SoftLabel(BaseModel):
    """학습 타깃 w = (w1, w2) = (ω_A, ω_B) / (ω_A + ω_B)"""
    model_config = ConfigDict(frozen=True)

    w1: float = Field(..., ge=0, le=1)
    w2: float = Field(..., ge=0, le=1)

    @model_validator(mode="after")
    def check_normalized(self):
        if abs(self.w1 + self.w2 - 1.0) > 1e-12:
            raise ValueError(f"w1 + w2 = 1 이어야 합니다 (현재 {self.w1 + self.w2!r})")
        return self

    @classmethod
    def from_weights(cls, omega_a: float, omega_b: float) -> "SoftLabel":
        total = omega_a + omega_b
        if not total > 0:
            raise ValueError("omega_a + omega_b 는 0보다 커야 합니다")
        w1 = omega_a / total
        return cls(w1=w1, w2=1.0 - w1)


def check_theta_c(theta: float, c: float) -> None:
    """θ = 1 / (1 + e^C) 인지 검사. θ 가 0 또는 1 로 포화되는 |C| 에서도 같은 식을 쓴다"""
    if not math.isfinite(c):
        raise ValueError(f"C 는 유한한 실수여야 합니다: {c!r}")
    expected = float(expit(-c))
    if not math.isclose(theta, expected, rel_tol=THRESHOLD_REL_TOL, abs_tol=1e-300):
        raise ValueError(f"θ={theta!r} 와 C={c!r} 가 맞지 않습니다 (기대 θ={expected!r})")


class Threshold(BaseModel):
    """결정 임계값의 이중 표현: θ ∈ (0,1) 과 C(θ) = log((1-θ)/θ)

    분류는 항상 c 로 한다 (C + Σq > 0). |c| > ~36 이면 θ 는 double 정밀도에서
    0 또는 1 로 포화되지만 c 는 정확하다.
    """
    model_config = ConfigDict(frozen=True)

    theta: float = Field(..., ge=0, le=1)
    c: float

    @model_validator(mode="after")
    def check_consistent(self):
        check_theta_c(self.theta, self.c)
        return self

    def __str__(self) -> str:
        return f"θ={self.theta:.6g} (C={self.c:.6g})"
