from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class ClassMoments(BaseModel):
    """로그 odds Q 의 클래스 조건부 평균/표준편차 (μ_A, σ_A, μ_B, σ_B)"""
    model_config = ConfigDict(frozen=True)

    mu_a: float
    sigma_a: float = Field(..., gt=0)
    mu_b: float
    sigma_b: float = Field(..., gt=0)
    # 유효 표본 수 (Σw)² / Σw²: 해석식으로 만든 모멘트에는 없음
    n_effective_a: Optional[float] = None
    n_effective_b: Optional[float] = None

    def affine(self, alpha: float, beta: float) -> "ClassMoments":
        """Q → αQ + β 변환 후의 모멘트 (α > 0)"""
        return self.model_copy(update={
            "mu_a": alpha * self.mu_a + beta,
            "sigma_a": alpha * self.sigma_a,
            "mu_b": alpha * self.mu_b + beta,
            "sigma_b": alpha * self.sigma_b,
        })


class MomentsReport(ClassMoments):
    """estimate 명령 출력: 모멘트 + 단일 인스턴스 AUC / LOSS"""
    auc_1: float = Field(..., ge=0, le=1)
    loss: Optional[float] = None
    ideal_loss: Optional[float] = None

    def moments(self) -> ClassMoments:
        return ClassMoments(**self.model_dump(include=set(ClassMoments.model_fields)))


class RocPoint(BaseModel):
    """ROC 곡선 위의 한 점 (θ, TPR, FPR)"""
    model_config = ConfigDict(frozen=True)

    theta: float
    tpr: float = Field(..., ge=0, le=1)
    fpr: float = Field(..., ge=0, le=1)
