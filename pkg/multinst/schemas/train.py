import math

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from multinst.config import settings

MODEL_VERSION = 1


class TrainConfig(BaseModel):
    """mini-batch 경사하강 설정"""
    model_config = ConfigDict(frozen=True)

    learning_rate: float = Field(default_factory=lambda: settings.learning_rate, gt=0)
    epochs: int = Field(default_factory=lambda: settings.epochs, ge=0)
    batch_size: int = Field(default_factory=lambda: settings.batch_size, ge=1)
    val_fraction: float = Field(default_factory=lambda: settings.val_fraction, gt=0, lt=1)
    seed: int = Field(default_factory=lambda: settings.seed, ge=0, lt=2**64)


class ScorerModel(BaseModel):
    """로지스틱-선형 점수기 p̃ = sigmoid(w·x + b): 저장 형식 {version, dim, weights, bias, config}"""
    model_config = ConfigDict(frozen=True)

    version: int = MODEL_VERSION
    dim: int = Field(..., ge=1)
    weights: list[float]
    bias: float = 0.0
    config: TrainConfig = Field(default_factory=TrainConfig)

    @field_validator("weights")
    @classmethod
    def check_finite(cls, v):
        if not all(math.isfinite(w) for w in v):
            raise ValueError("weights 에 NaN/Inf 가 있습니다")
        return v

    @field_validator("bias")
    @classmethod
    def check_finite_bias(cls, v):
        if not math.isfinite(v):
            raise ValueError("bias 가 NaN/Inf 입니다")
        return v

    @field_validator("version")
    @classmethod
    def check_version(cls, v):
        if v != MODEL_VERSION:
            raise ValueError(f"지원하지 않는 모델 버전: {v}")
        return v

    @model_validator(mode="after")
    def check_dim(self):
        if len(self.weights) != self.dim:
            raise ValueError(f"weights 길이({len(self.weights)})가 dim({self.dim})과 다릅니다")
        return self

    @classmethod
    def zeros(cls, dim: int, config: TrainConfig | None = None) -> "ScorerModel":
        return cls(dim=dim, weights=[0.0] * dim, bias=0.0, config=config or TrainConfig())


class EpochRecord(BaseModel):
    """에폭별 학습 기록 + 파라미터 스냅샷"""
    epoch: int
    loss_train: float
    loss_val: float
    auc_val: float
    weights: list[float] = Field(default_factory=list, exclude=True)
    bias: float = Field(0.0, exclude=True)


class TrainTrace(BaseModel):
    """학습 trace (에폭 순서)"""
    records: list[EpochRecord] = Field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)

    def snapshot(self, epoch: int, base: ScorerModel) -> ScorerModel:
        """epoch 종료 시점의 파라미터로 만든 모델"""
        rec = next(r for r in self.records if r.epoch == epoch)
        return base.model_copy(update={"weights": list(rec.weights), "bias": rec.bias})
