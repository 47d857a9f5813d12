"""가중 경험적 추정기 — 로그 odds 모멘트, TPR/FPR/ROC, 가중 AUC, 교차 엔트로피

클래스 조건부 적분 ∫dX P(X|A) f(X) 를 Σ ω_A,i f(X_i) / Σ ω_A,i 로 근사한다.
"""
import logging
import math
from typing import Iterable

import numpy as np
from scipy.special import xlogy

from multinst.config import settings
from multinst.exceptions import (
    DegenerateDatasetError, DomainError, InsufficientDataError, InvalidInstanceError,
)
from multinst.schemas.core import ClassLabel, Threshold
from multinst.schemas.dataset import ScoredDataset
from multinst.schemas.stats import ClassMoments, RocPoint
from multinst.services.common import log_odds

logger = logging.getLogger(__name__)


def _class_weights(scored: ScoredDataset, label: ClassLabel) -> np.ndarray:
    return scored.omega_a if label == ClassLabel.A else scored.omega_b


def _check_class_mass(scored: ScoredDataset) -> tuple[float, float]:
    """양 클래스 가중치 합이 0보다 큰지 확인"""
    total_a = float(np.sum(scored.omega_a))
    total_b = float(np.sum(scored.omega_b))
    if not total_a > 0 or not total_b > 0:
        raise DegenerateDatasetError(
            f"클래스 가중치 합이 0 입니다 (Σω_A={total_a}, Σω_B={total_b})"
        )
    return total_a, total_b


def effective_size(weights: np.ndarray) -> float:
    """유효 표본 수 (Σw)² / Σw²"""
    w = np.asarray(weights, dtype=np.float64)
    sq = float(np.sum(w * w))
    return float(np.sum(w)) ** 2 / sq if sq > 0 else 0.0


def weighted_expectation(instances: Iterable[tuple[float, float]]) -> float:
    """Σ w_i v_i / Σ w_i"""
    pairs = np.asarray(list(instances), dtype=np.float64).reshape(-1, 2)
    weights, values = pairs[:, 0], pairs[:, 1]
    if np.any(weights < 0):
        raise InvalidInstanceError("가중치는 음수일 수 없습니다")
    total = float(np.sum(weights))
    if not total > 0:
        raise DegenerateDatasetError("가중치가 모두 0 입니다")
    return float(np.dot(weights, values)) / total


# ── 1. 로그 odds 모멘트 ──

def _moments_for(q: np.ndarray, w: np.ndarray, label: ClassLabel) -> tuple[float, float, float]:
    if np.count_nonzero(w) < 2:
        raise InsufficientDataError(f"클래스 {label.value}: 가중치가 0이 아닌 인스턴스가 2개 미만입니다")
    total = float(np.sum(w))
    mu = float(np.dot(w, q)) / total
    var = float(np.dot(w, (q - mu) ** 2)) / total
    if not var > 0:
        raise DegenerateDatasetError(f"클래스 {label.value}: 로그 odds 분산이 0 입니다")
    return mu, math.sqrt(var), effective_size(w)


def class_moments(scored: ScoredDataset, eps: float | None = None) -> ClassMoments:
    """(μ_A, σ_A, μ_B, σ_B): 가중 평균과 가중 2차 모멘트 (Bessel 보정 없음)"""
    _check_class_mass(scored)
    q = log_odds(scored.scores, eps)
    mu_a, sigma_a, neff_a = _moments_for(q, scored.omega_a, ClassLabel.A)
    mu_b, sigma_b, neff_b = _moments_for(q, scored.omega_b, ClassLabel.B)
    logger.info(
        f"모멘트: μ_A={mu_a:.6g} σ_A={sigma_a:.6g} μ_B={mu_b:.6g} σ_B={sigma_b:.6g} "
        f"(n_eff {neff_a:.0f}/{neff_b:.0f})"
    )
    return ClassMoments(
        mu_a=mu_a, sigma_a=sigma_a, mu_b=mu_b, sigma_b=sigma_b,
        n_effective_a=neff_a, n_effective_b=neff_b,
    )


# ── 2. 단일 인스턴스 TPR / FPR / ROC ──

def empirical_rates(scored: ScoredDataset, threshold: Threshold) -> tuple[float, float]:
    """TPR = Σ_{p>θ} ω_A / Σ ω_A,  FPR = Σ_{p>θ} ω_B / Σ ω_B"""
    total_a, total_b = _check_class_mass(scored)
    above = scored.scores > threshold.theta
    tpr = float(np.sum(scored.omega_a[above])) / total_a
    fpr = float(np.sum(scored.omega_b[above])) / total_b
    return tpr, fpr


def theta_grid(size: int | None = None) -> np.ndarray:
    """기본 θ 그리드: (min, max) 구간 균등 size 점"""
    size = settings.roc_grid_size if size is None else size
    return np.linspace(settings.theta_grid_min, settings.theta_grid_max, size)


def check_theta_grid(thetas) -> np.ndarray:
    grid = np.asarray(thetas, dtype=np.float64).ravel()
    if grid.size == 0:
        raise DomainError("θ 그리드가 비어 있습니다")
    if not (np.all(grid > 0) and np.all(grid < 1)):
        raise DomainError("θ 그리드 값은 (0,1) 범위여야 합니다")
    return np.sort(grid)


def roc_curve(scored: ScoredDataset, thetas=None) -> list[RocPoint]:
    """θ 그리드 각 점의 (TPR, FPR): θ 오름차순"""
    total_a, total_b = _check_class_mass(scored)
    grid = check_theta_grid(theta_grid() if thetas is None else thetas)

    order = np.argsort(scored.scores, kind="stable")
    sorted_scores = scored.scores[order]
    cum_a = np.concatenate(([0.0], np.cumsum(scored.omega_a[order])))
    cum_b = np.concatenate(([0.0], np.cumsum(scored.omega_b[order])))

    # p > θ 인 질량 = 전체 - (p ≤ θ 누적)
    below = np.searchsorted(sorted_scores, grid, side="right")
    tpr = np.clip((cum_a[-1] - cum_a[below]) / cum_a[-1], 0.0, 1.0)
    fpr = np.clip((cum_b[-1] - cum_b[below]) / cum_b[-1], 0.0, 1.0)
    return [
        RocPoint(theta=float(t), tpr=float(a), fpr=float(b))
        for t, a, b in zip(grid, tpr, fpr)
    ]


# ── 3. 가중 AUC (Mann–Whitney, 동점 0.5) ──

def weighted_auc(scored: ScoredDataset) -> float:
    """Σ_{i,j} ω_A,i ω_B,j [1(p_i > p_j) + ½·1(p_i = p_j)] / (Σω_A Σω_B): O(M log M)"""
    total_a, total_b = _check_class_mass(scored)
    unique, inverse = np.unique(scored.scores, return_inverse=True)
    wa = np.bincount(inverse, weights=scored.omega_a, minlength=unique.size)
    wb = np.bincount(inverse, weights=scored.omega_b, minlength=unique.size)
    b_below = np.cumsum(wb) - wb
    auc = float(np.dot(wa, b_below + 0.5 * wb)) / (total_a * total_b)
    return min(max(auc, 0.0), 1.0)


# ── 4. 교차 엔트로피 ──

def weighted_loss(scored: ScoredDataset, eps: float | None = None) -> float:
    """-(1/M) Σ [w1 log p̃ + (1 - w1) log(1 - p̃)],  w1 = ω_A/(ω_A+ω_B)"""
    eps = settings.clamp_eps if eps is None else eps
    w1 = scored.omega_a / (scored.omega_a + scored.omega_b)
    p = np.clip(scored.scores, eps, 1.0 - eps)
    return float(-np.mean(w1 * np.log(p) + (1.0 - w1) * np.log1p(-p)))


def ideal_loss(scored: ScoredDataset) -> float:
    """w1 자체를 점수로 쓸 때의 LOSS = 라벨의 평균 이진 엔트로피 (달성 가능한 최소값)"""
    w1 = scored.omega_a / (scored.omega_a + scored.omega_b)
    return float(-np.mean(xlogy(w1, w1) + xlogy(1.0 - w1, 1.0 - w1)))
