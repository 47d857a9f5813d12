"""공통 변환 — 가중치 → 사후확률 → 로그 odds, 임계값 θ ↔ C(θ)

모두 불변 값에 대한 순수 함수. 스칼라와 numpy 배열을 모두 받는다.
"""
import logging
import math

import numpy as np
from scipy.special import expit, logit

from multinst.config import settings
from multinst.exceptions import DomainError, InvalidInstanceError, InvalidScoreError
from multinst.schemas.core import ClassLabel, LogOdds, Threshold

logger = logging.getLogger(__name__)


def _unwrap(arr: np.ndarray):
    """0차원 결과는 float 로"""
    return float(arr) if arr.ndim == 0 else arr


# ── 가중치 / 점수 ──

def posterior_from_weights(omega_a, omega_b):
    """P(A|X) = ω_A / (ω_A + ω_B)"""
    wa = np.asarray(omega_a, dtype=np.float64)
    wb = np.asarray(omega_b, dtype=np.float64)
    if np.any(wa < 0) or np.any(wb < 0) or np.isnan(wa).any() or np.isnan(wb).any():
        raise InvalidInstanceError("가중치는 음수이거나 NaN 일 수 없습니다")
    total = wa + wb
    if np.any(total <= 0):
        raise InvalidInstanceError("omega_a + omega_b = 0: 사후확률을 정의할 수 없습니다")
    return _unwrap(wa / total)


def log_odds(p, eps: float | None = None) -> LogOdds | np.ndarray:
    """q = log(p' / (1 - p')),  p' = clamp(p, ε, 1 - ε)"""
    eps = settings.clamp_eps if eps is None else eps
    arr = np.asarray(p, dtype=np.float64)
    if np.isnan(arr).any():
        raise InvalidScoreError("점수에 NaN 이 있습니다")
    return _unwrap(logit(np.clip(arr, eps, 1.0 - eps)))


def sigmoid(q):
    """1 / (1 + e^{-q}): log_odds 의 역함수"""
    return _unwrap(expit(np.asarray(q, dtype=np.float64)))


# ── 임계값 ──

def threshold_from_theta(theta: float) -> Threshold:
    """θ ∈ (0,1) → (θ, C = log((1-θ)/θ))"""
    theta = float(theta)
    if not 0.0 < theta < 1.0:
        raise DomainError(f"θ 는 (0,1) 범위여야 합니다: {theta!r}")
    return Threshold(theta=theta, c=-float(logit(theta)))


def threshold_from_c(c: float) -> Threshold:
    """C → θ = 1 / (1 + e^C)"""
    c = float(c)
    if not math.isfinite(c):
        raise DomainError(f"C 는 유한한 실수여야 합니다: {c!r}")
    return Threshold(theta=float(expit(-c)), c=c)


def classify(evidence, threshold: Threshold):
    """C(θ) + evidence > 0 이면 A (엄격 부등호: 경계값은 B)"""
    decided = np.asarray(evidence, dtype=np.float64) + threshold.c > 0
    if decided.ndim == 0:
        return ClassLabel.A if decided else ClassLabel.B
    return decided
