"""합성 가중 데이터 생성기 + Monte Carlo 오라클

클래스 조건부 분포는 등방 가우시안 N(mean, scale² I). 특성 X 는 혼합
π·N(mean_a) + (1-π)·N(mean_b) 에서 뽑고, 가중치는 중요도 가중치
ω_A = p_A(X)/m(X), ω_B = p_B(X)/m(X) (m 은 혼합 밀도) 로 둔다. 따라서
ω_A 가중 경험분포가 P(X|A) 를 근사하고 ω_A/(ω_A+ω_B) 는 동일 사전확률
사후확률이다. 가중치는 항상 전체 d 좌표로 계산되고 특성은 observed_dims 만 남긴다.

Monte Carlo 는 가중 경험분포에서 복원추출로 N 개 그룹을 만들어 TPR/FPR/AUC 를 잰다.
"""
import logging
import math

import numpy as np
from scipy.special import ndtri

from multinst.config import settings
from multinst.exceptions import DegenerateDatasetError, DimensionMismatchError, DomainError
from multinst.schemas.core import ClassLabel, Threshold
from multinst.schemas.dataset import ScoredDataset, WeightedDataset
from multinst.schemas.stats import ClassMoments
from multinst.schemas.synth import McEstimate, SimulationRow, SynthConfig
from multinst.services.analytic_service import analytic_auc, analytic_rates, check_n, optimal_c
from multinst.services.common import log_odds, sigmoid
from multinst.services.rng_service import (
    Stream, chunk_sizes, make_chunk_streams, make_rng, run_chunks,
)
from multinst.services.stats_service import class_moments, effective_size

logger = logging.getLogger(__name__)

# 청크 하나가 만드는 인덱스 수 상한 (그룹 수 × N)
MAX_DRAWS_PER_CHUNK = 2**22


# ── 1. 기본 설정 보정 ──

def separation_for_auc(auc: float) -> float:
    """단일 인스턴스 이상적 점수기의 AUC 가 auc 가 되는 클래스 간 거리 δ = |Δμ|/scale

    로그 odds 가 N(±δ²/2, δ) 이므로 AUC = Φ(δ/√2).
    """
    if not 0.5 <= auc < 1.0:
        raise DomainError(f"AUC 는 [0.5, 1) 범위여야 합니다: {auc}")
    return math.sqrt(2.0) * float(ndtri(auc))


def default_config(
    seed: int | None = None,
    auc_observed: float = 0.535,
    auc_complete: float = 0.615,
) -> SynthConfig:
    """d = 4, 관측 좌표 {1, 2}. 관측 좌표만의 이상적 AUC = auc_observed,
    전체 좌표의 이상적 AUC = auc_complete 가 되도록 평균 차이를 나눠 배치한다."""
    delta_obs = separation_for_auc(auc_observed)
    delta_full = separation_for_auc(auc_complete)
    if delta_full <= delta_obs:
        raise DomainError("auc_complete 는 auc_observed 보다 커야 합니다")
    delta_hidden = math.sqrt(delta_full ** 2 - delta_obs ** 2)

    diff = [delta_obs / math.sqrt(2.0)] * 2 + [delta_hidden / math.sqrt(2.0)] * 2
    return SynthConfig(
        dim=4,
        mean_a=[d / 2.0 for d in diff],
        mean_b=[-d / 2.0 for d in diff],
        scale=1.0,
        observed_dims=[1, 2],
        class_prior=0.5,
        seed=settings.seed if seed is None else seed,
    )


def analytic_moments(config: SynthConfig, complete: bool = False) -> ClassMoments:
    """이상적 점수기 로그 odds 의 정확한 모멘트: μ_A = δ²/2, μ_B = -δ²/2, σ = δ"""
    index = list(range(config.dim)) if complete else config.observed_index
    diff = np.asarray(config.mean_a)[index] - np.asarray(config.mean_b)[index]
    delta = float(np.linalg.norm(diff)) / config.scale
    if delta == 0:
        raise DegenerateDatasetError("선택한 좌표에서 두 클래스 평균이 같습니다")
    return ClassMoments(mu_a=delta ** 2 / 2, sigma_a=delta, mu_b=-delta ** 2 / 2, sigma_b=delta)


# ── 2. 사후확률 ──

def _log_ratio(config: SynthConfig, x: np.ndarray, index: list[int]) -> np.ndarray:
    """log p_A(x) - log p_B(x) on the given coordinates"""
    ma = np.asarray(config.mean_a)[index]
    mb = np.asarray(config.mean_b)[index]
    return (x @ (ma - mb) - 0.5 * (ma @ ma - mb @ mb)) / config.scale ** 2


def _check_dim(x: np.ndarray, expected: int) -> np.ndarray:
    if x.shape[-1] != expected:
        raise DimensionMismatchError(f"특성 차원 {x.shape[-1]} ≠ {expected}")
    return x


def true_posterior(config: SynthConfig, features_full):
    """전체 좌표 기준 정확한 P(A|X) (complete 데이터의 이상적 점수기)"""
    x = _check_dim(np.asarray(features_full, dtype=np.float64), config.dim)
    return sigmoid(_log_ratio(config, x, list(range(config.dim))))


def observed_posterior(config: SynthConfig, features_observed):
    """관측 좌표만으로 본 P(A|X_obs): 숨은 좌표를 주변화한 이상적 점수기"""
    index = config.observed_index
    x = _check_dim(np.asarray(features_observed, dtype=np.float64), len(index))
    return sigmoid(_log_ratio(config, x, index))


# ── 3. 데이터 생성 ──

def sample_features(config: SynthConfig, m: int) -> np.ndarray:
    """혼합분포에서 전체 좌표 특성 (m, d) 추출"""
    if m < 1:
        raise DomainError(f"m 은 1 이상이어야 합니다: {m}")
    rng = make_rng(config.seed, Stream.GENERATE)
    is_a = rng.random(m) < config.class_prior
    noise = rng.standard_normal((m, config.dim))
    centers = np.where(is_a[:, None], np.asarray(config.mean_a), np.asarray(config.mean_b))
    return centers + config.scale * noise


def weights_for(config: SynthConfig, features_full: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """중요도 가중치 (p_A/m, p_B/m): 로그 공간에서 계산"""
    x = _check_dim(np.asarray(features_full, dtype=np.float64), config.dim)
    r = _log_ratio(config, x, list(range(config.dim)))
    log_pi, log_1m_pi = math.log(config.class_prior), math.log1p(-config.class_prior)
    omega_a = np.exp(-np.logaddexp(log_pi, log_1m_pi - r))
    omega_b = np.exp(-np.logaddexp(log_pi + r, log_1m_pi))
    return omega_a, omega_b


def generate(config: SynthConfig, m: int) -> WeightedDataset:
    x = sample_features(config, m)
    omega_a, omega_b = weights_for(config, x)
    logger.info(
        f"합성 데이터 생성: m={m}, d={config.dim}, 관측 좌표 {sorted(config.observed_dims)}, "
        f"seed={config.seed}"
    )
    return WeightedDataset(features=x[:, config.observed_index], omega_a=omega_a, omega_b=omega_b)


def dataset_summary(config: SynthConfig, dataset: WeightedDataset) -> dict:
    """gen 명령 요약 출력"""
    return {
        "m": len(dataset),
        "d": config.dim,
        "observed_dims": sorted(config.observed_dims),
        "sum_omega_a": float(np.sum(dataset.omega_a)),
        "sum_omega_b": float(np.sum(dataset.omega_b)),
        "n_effective_a": effective_size(dataset.omega_a),
        "n_effective_b": effective_size(dataset.omega_b),
    }


def ideal_scores(config: SynthConfig, dataset: WeightedDataset) -> ScoredDataset:
    """관측 좌표 이상적 점수기로 채점한 점수 데이터셋"""
    return ScoredDataset(
        scores=observed_posterior(config, dataset.features),
        omega_a=dataset.omega_a,
        omega_b=dataset.omega_b,
    )


def perturb_scores(scored: ScoredDataset, alpha: float, beta: float) -> ScoredDataset:
    """로그 odds 아핀 섭동 q → αq + β (α > 0): 에폭 간 변동 모사"""
    if not alpha > 0:
        raise DomainError(f"α 는 양수여야 합니다: {alpha}")
    return scored.with_scores(sigmoid(alpha * log_odds(scored.scores) + beta))


# ── 4. Monte Carlo 오라클 ──

class _ClassSampler:
    """클래스 가중치 ∝ 확률로 인덱스 복원추출 (누적분포 + searchsorted)"""

    def __init__(self, weights: np.ndarray, label: ClassLabel):
        cdf = np.cumsum(weights, dtype=np.float64)
        if cdf.size == 0 or not cdf[-1] > 0:
            raise DegenerateDatasetError(f"클래스 {label.value} 의 가중치 합이 0 입니다")
        self.cdf = cdf / cdf[-1]

    def draw(self, rng: np.random.Generator, shape) -> np.ndarray:
        idx = np.searchsorted(self.cdf, rng.random(shape), side="right")
        return np.minimum(idx, self.cdf.size - 1)


def _sampler(dataset: ScoredDataset, label: ClassLabel) -> _ClassSampler:
    weights = dataset.omega_a if label == ClassLabel.A else dataset.omega_b
    return _ClassSampler(weights, label)


def sample_group(
    dataset: ScoredDataset, true_class: ClassLabel, n: int, rng: np.random.Generator,
) -> np.ndarray:
    """X_i ~ P(X|true_class) 를 n 번 복원추출한 점수"""
    n = check_n(n)
    return dataset.scores[_sampler(dataset, true_class).draw(rng, n)]


def _check_groups(n_groups: int) -> int:
    if n_groups < settings.mc_min_groups:
        raise DomainError(f"그룹 수는 {settings.mc_min_groups} 이상이어야 합니다: {n_groups}")
    return int(n_groups)


def _group_chunks(n_groups: int, n: int) -> list[int]:
    per_chunk = max(1, min(settings.mc_chunk_groups, MAX_DRAWS_PER_CHUNK // n))
    return chunk_sizes(n_groups, per_chunk)


def mc_rates(
    dataset: ScoredDataset,
    n: int,
    threshold: Threshold,
    n_groups: int,
    seed: int | None = None,
    threads: int | None = None,
) -> tuple[McEstimate, McEstimate]:
    """A 그룹 중 A 로 분류된 비율(TPR), B 그룹 중 A 로 분류된 비율(FPR)"""
    n = check_n(n)
    n_groups = _check_groups(n_groups)
    seed = settings.seed if seed is None else seed
    q = log_odds(dataset.scores)
    sizes = _group_chunks(n_groups, n)

    estimates = []
    for key, label in enumerate((ClassLabel.A, ClassLabel.B)):
        sampler = _sampler(dataset, label)

        def count(rng: np.random.Generator, groups: int) -> int:
            sums = q[sampler.draw(rng, (groups, n))].sum(axis=1)
            return int(np.count_nonzero(sums + threshold.c > 0))

        streams = make_chunk_streams(seed, Stream.MC_RATES, len(sizes), n, key)
        positives = sum(run_chunks(count, streams, sizes, threads))
        estimates.append(McEstimate.from_count(positives, n_groups))

    tpr, fpr = estimates
    logger.debug(f"MC N={n} {threshold}: TPR={tpr.value:.5f}±{tpr.std_error:.5f}, FPR={fpr.value:.5f}±{fpr.std_error:.5f}")
    return tpr, fpr


def mc_auc(
    dataset: ScoredDataset,
    n: int,
    n_groups: int,
    seed: int | None = None,
    threads: int | None = None,
) -> McEstimate:
    """독립 (A 그룹, B 그룹) 쌍 중 A 그룹 로그 odds 합이 더 큰 비율 (동점 0.5)"""
    n = check_n(n)
    n_groups = _check_groups(n_groups)
    seed = settings.seed if seed is None else seed
    q = log_odds(dataset.scores)
    sampler_a = _sampler(dataset, ClassLabel.A)
    sampler_b = _sampler(dataset, ClassLabel.B)
    sizes = _group_chunks(n_groups, n)

    def wins(rng: np.random.Generator, groups: int) -> float:
        sums_a = q[sampler_a.draw(rng, (groups, n))].sum(axis=1)
        sums_b = q[sampler_b.draw(rng, (groups, n))].sum(axis=1)
        return np.count_nonzero(sums_a > sums_b) + 0.5 * np.count_nonzero(sums_a == sums_b)

    streams = make_chunk_streams(seed, Stream.MC_AUC, len(sizes), n)
    return McEstimate.from_count(float(sum(run_chunks(wins, streams, sizes, threads))), n_groups)


def simulate(
    dataset: ScoredDataset,
    n_list: list[int],
    n_groups: int,
    threshold: Threshold | None = None,
    use_optimal: bool = False,
    seed: int | None = None,
    threads: int | None = None,
) -> list[SimulationRow]:
    """N 별로 Monte Carlo 측정값과 해석식 예측을 나란히 계산"""
    if threshold is None and not use_optimal:
        raise DomainError("threshold 또는 use_optimal 중 하나가 필요합니다")
    moments = class_moments(dataset)

    rows = []
    for n in n_list:
        thr = optimal_c(moments, n, numeric=False).threshold if use_optimal else threshold
        predicted = analytic_rates(moments, n, thr)
        tpr, fpr = mc_rates(dataset, n, thr, n_groups, seed=seed, threads=threads)
        auc = mc_auc(dataset, n, n_groups, seed=seed, threads=threads)
        row = SimulationRow(
            n=n, n_groups=n_groups, theta=thr.theta,
            tpr_mc=tpr.value, tpr_se=tpr.std_error, tpr_analytic=predicted.tpr,
            fpr_mc=fpr.value, fpr_se=fpr.std_error, fpr_analytic=predicted.fpr,
            auc_mc=auc.value, auc_se=auc.std_error, auc_analytic=analytic_auc(moments, n),
        )
        logger.info(
            f"N={n}: TPR {row.tpr_mc:.4f} (해석 {row.tpr_analytic:.4f}), "
            f"FPR {row.fpr_mc:.4f} (해석 {row.fpr_analytic:.4f}), "
            f"AUC {row.auc_mc:.4f} (해석 {row.auc_analytic:.4f})"
        )
        rows.append(row)
    return rows
