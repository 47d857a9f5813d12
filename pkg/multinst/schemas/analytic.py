from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from multinst.schemas.core import Threshold, check_theta_c


class RatePrediction(BaseModel):
    """그룹 크기 N, 임계값 θ 에서의 가우시안 근사 TPR / FPR / MISS"""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    theta: Threshold
    tpr: float = Field(..., ge=0, le=1)
    fpr: float = Field(..., ge=0, le=1)
    miss: float = Field(..., ge=0, le=2)

    @model_validator(mode="after")
    def check_miss(self):
        if abs(self.miss - (1.0 - self.tpr + self.fpr)) > 1e-12:
            raise ValueError("miss = 1 - tpr + fpr 이어야 합니다")
        return self


class OptimalThreshold(BaseModel):
    """최적 임계값: 닫힌 해 (σ_A = σ_B 가정) + 필요시 수치 최적해"""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    c_opt: float
    theta_opt: float = Field(..., ge=0, le=1)
    # |σ_A - σ_B| / max(σ_A, σ_B): 닫힌 해의 가정이 얼마나 어긋나는지
    sigma_discrepancy: float = Field(..., ge=0)
    c_opt_numeric: Optional[float] = None

    @model_validator(mode="after")
    def check_consistent(self):
        check_theta_c(self.theta_opt, self.c_opt)
        return self

    @property
    def threshold(self) -> Threshold:
        return Threshold(theta=self.theta_opt, c=self.c_opt)


class AucPoint(BaseModel):
    """AUC(N)"""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    auc: float = Field(..., ge=0, le=1)
