"""로지스틱-선형 점수기 학습 — 소프트 라벨 교차 엔트로피, mini-batch 경사하강

LOSS = -(1/M) Σ_i [w1_i log p̃_i + (1 - w1_i) log(1 - p̃_i)],  p̃ = sigmoid(w·x + b)
(최소화하는 부호 규약: 항상 0 이상)
"""
import logging

import numpy as np
from scipy.special import expit, log_expit

from multinst.exceptions import DimensionMismatchError, DivergenceError, DomainError
from multinst.schemas.dataset import ScoredDataset, SoftLabelBatch, WeightedDataset
from multinst.schemas.train import EpochRecord, ScorerModel, TrainConfig, TrainTrace
from multinst.services.rng_service import Stream, make_rng
from multinst.services.stats_service import weighted_auc

logger = logging.getLogger(__name__)


def _params(model: ScorerModel) -> np.ndarray:
    return np.append(np.asarray(model.weights, dtype=np.float64), model.bias)


def _with_params(model: ScorerModel, params: np.ndarray) -> ScorerModel:
    return model.model_copy(update={"weights": params[:-1].tolist(), "bias": float(params[-1])})


def _logits(params: np.ndarray, features: np.ndarray) -> np.ndarray:
    if features.shape[-1] != params.size - 1:
        raise DimensionMismatchError(f"특성 차원 {features.shape[-1]} ≠ 모델 차원 {params.size - 1}")
    return features @ params[:-1] + params[-1]


def _loss(params: np.ndarray, batch: SoftLabelBatch) -> float:
    z = _logits(params, batch.features)
    return float(-np.mean(batch.w1 * log_expit(z) + (1.0 - batch.w1) * log_expit(-z)))


def _gradient(params: np.ndarray, batch: SoftLabelBatch) -> np.ndarray:
    residual = expit(_logits(params, batch.features)) - batch.w1
    m = len(batch)
    return np.append(batch.features.T @ residual, residual.sum()) / m


def loss(model: ScorerModel, batch: SoftLabelBatch) -> float:
    if len(batch) == 0:
        raise DomainError("빈 배치")
    return _loss(_params(model), batch)


def gradient(model: ScorerModel, batch: SoftLabelBatch) -> np.ndarray:
    """∂LOSS/∂(w, b) = (1/M) Σ (p̃_i - w1_i) [x_i, 1]"""
    if len(batch) == 0:
        raise DomainError("빈 배치")
    return _gradient(_params(model), batch)


def score(model: ScorerModel, features):
    """p̃ = sigmoid(w·x + b): 1차원 입력이면 float, (M, d) 면 배열"""
    x = np.asarray(features, dtype=np.float64)
    out = expit(_logits(_params(model), x))
    return float(out) if out.ndim == 0 else out


def score_dataset(model: ScorerModel, dataset: WeightedDataset) -> ScoredDataset:
    return ScoredDataset(scores=score(model, dataset.features), omega_a=dataset.omega_a, omega_b=dataset.omega_b)


def _split(size: int, config: TrainConfig) -> tuple[np.ndarray, np.ndarray]:
    """시드 고정 셔플 후 (학습, 검증) 인덱스"""
    perm = make_rng(config.seed, Stream.SPLIT).permutation(size)
    n_val = max(1, int(round(size * config.val_fraction)))
    return perm[n_val:], perm[:n_val]


def fit(dataset: WeightedDataset, config: TrainConfig | None = None) -> tuple[ScorerModel, TrainTrace]:
    """mini-batch GD (고정 학습률, 시드 셔플). 에폭마다 학습/검증 LOSS, 검증 AUC 기록"""
    config = config or TrainConfig()
    model = ScorerModel.zeros(dataset.dim, config)
    trace = TrainTrace()
    if config.epochs == 0:
        return model, trace
    if len(dataset) < 2 * config.batch_size:
        raise DomainError(f"데이터 수({len(dataset)})가 배치 크기의 2배({2 * config.batch_size})보다 작습니다")

    train_idx, val_idx = _split(len(dataset), config)
    train = dataset.subset(train_idx).to_batch()
    val = dataset.subset(val_idx)
    val_batch = val.to_batch()
    logger.info(f"학습 시작: 학습 {len(train)} / 검증 {len(val)}, lr={config.learning_rate}, batch={config.batch_size}")

    rng = make_rng(config.seed, Stream.SHUFFLE)
    params = _params(model)
    for epoch in range(1, config.epochs + 1):
        order = rng.permutation(len(train))
        for start in range(0, len(train), config.batch_size):
            rows = order[start:start + config.batch_size]
            batch = SoftLabelBatch(train.features[rows], train.w1[rows])
            params = params - config.learning_rate * _gradient(params, batch)
            if not np.all(np.isfinite(params)):
                raise DivergenceError(f"에폭 {epoch}: 파라미터가 발산했습니다 (NaN/Inf)", trace=trace)

        loss_train = _loss(params, train)
        loss_val = _loss(params, val_batch)
        if not (np.isfinite(loss_train) and np.isfinite(loss_val)):
            raise DivergenceError(f"에폭 {epoch}: LOSS 가 NaN/Inf 입니다", trace=trace)
        val_scores = ScoredDataset(expit(_logits(params, val.features)), val.omega_a, val.omega_b)
        record = EpochRecord(
            epoch=epoch,
            loss_train=loss_train,
            loss_val=loss_val,
            auc_val=weighted_auc(val_scores),
            weights=params[:-1].tolist(),
            bias=float(params[-1]),
        )
        trace.records.append(record)
        logger.info(
            f"에폭 {epoch}/{config.epochs}: loss_train={loss_train:.6f} "
            f"loss_val={loss_val:.6f} auc_val={record.auc_val:.4f}"
        )

    return _with_params(model, params), trace
