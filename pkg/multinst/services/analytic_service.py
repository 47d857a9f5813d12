"""해석식 예측 — 중심극한정리 가우시안 근사

Σ_{i≤N} Q_i ~ Normal(N μ, √N σ) 로 보면
    TPR(θ, N) ≈ ½ (1 + erf((N μ_A + C(θ)) / (√(2N) σ_A)))
    FPR(θ, N) ≈ ½ (1 + erf((N μ_B + C(θ)) / (√(2N) σ_B)))
    AUC(N)    = ½ (1 + erf(√N (μ_A - μ_B) / (√2 √(σ_A² + σ_B²))))
μ_A > 0, μ_B < 0 이면 N → ∞ 에서 임의의 θ ∈ (0,1) 에 대해 완전 분류기로 수렴한다.
"""
import logging
import math

import numpy as np
from scipy import optimize, special

from multinst.exceptions import DomainError
from multinst.schemas.analytic import AucPoint, OptimalThreshold, RatePrediction
from multinst.schemas.core import Threshold
from multinst.schemas.stats import ClassMoments
from multinst.services.common import threshold_from_c, threshold_from_theta
from multinst.services.stats_service import check_theta_grid, theta_grid

logger = logging.getLogger(__name__)

# σ 불일치가 이 이상이면 닫힌 해 사용 시 경고
SIGMA_WARN_RATIO = 0.05
# 수치 최적화 시 C 구간을 나누는 격자 수
NUMERIC_GRID_POINTS = 4001


def erf(x):
    """가우스 오차함수 (scipy.special.erf, 절대오차 ~1e-16)"""
    out = special.erf(np.asarray(x, dtype=np.float64))
    return float(out) if out.ndim == 0 else out


def check_n(n) -> int:
    """그룹 크기 N: 1 이상의 정수만 허용 (분수 N 거부)"""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise DomainError(f"N 은 정수여야 합니다: {n!r}")
    if n < 1:
        raise DomainError(f"N 은 1 이상이어야 합니다: {n}")
    return int(n)


def _rate(mu: float, sigma: float, n: int, c):
    return 0.5 * (1.0 + erf((n * mu + c) / (math.sqrt(2.0 * n) * sigma)))


# ── 1. TPR / FPR / MISS ──

def analytic_rates(moments: ClassMoments, n: int, threshold: Threshold) -> RatePrediction:
    n = check_n(n)
    tpr = _rate(moments.mu_a, moments.sigma_a, n, threshold.c)
    fpr = _rate(moments.mu_b, moments.sigma_b, n, threshold.c)
    return RatePrediction(n=n, theta=threshold, tpr=tpr, fpr=fpr, miss=1.0 - tpr + fpr)


def miss_curve(moments: ClassMoments, n: int, thetas=None) -> list[RatePrediction]:
    """θ 그리드 각 점의 예측: MISS(θ) = 1 - TPR + FPR"""
    n = check_n(n)
    grid = check_theta_grid(theta_grid() if thetas is None else thetas)
    return [analytic_rates(moments, n, threshold_from_theta(t)) for t in grid]


def _miss_of_c(moments: ClassMoments, n: int, c):
    return 1.0 - _rate(moments.mu_a, moments.sigma_a, n, c) + _rate(moments.mu_b, moments.sigma_b, n, c)


def miss_balance(moments: ClassMoments, n: int, c: float) -> tuple[float, float]:
    """dMISS/dC = 0 조건의 두 가우시안 항 (A 항, B 항): 최적점에서 같아진다

    지수의 σ 는 각 항의 σ_A / σ_B 로 읽는다.
    """
    n = check_n(n)
    term_a = math.exp(-((c + moments.mu_a * n) ** 2) / (2.0 * n * moments.sigma_a ** 2)) / moments.sigma_a
    term_b = math.exp(-((c + moments.mu_b * n) ** 2) / (2.0 * n * moments.sigma_b ** 2)) / moments.sigma_b
    return term_a, term_b


# ── 2. 최적 임계값 ──

def sigma_discrepancy(moments: ClassMoments) -> float:
    return abs(moments.sigma_a - moments.sigma_b) / max(moments.sigma_a, moments.sigma_b)


def optimal_c_numeric(moments: ClassMoments, n: int) -> float:
    """MISS(C) 의 전역 최소점: σ_A ≠ σ_B 에서도 정확

    구간 [-N|μ_A| - 10√N σ, N|μ_B| + 10√N σ] 를 격자로 훑어 최소 칸을 찾고,
    그 칸 안에서 bounded Brent(황금분할 + 포물선) 로 다듬는다.
    """
    n = check_n(n)
    sigma = max(moments.sigma_a, moments.sigma_b)
    spread = 10.0 * math.sqrt(n) * sigma
    lo = -n * abs(moments.mu_a) - spread
    hi = n * abs(moments.mu_b) + spread

    grid = np.linspace(lo, hi, NUMERIC_GRID_POINTS)
    k = int(np.argmin(_miss_of_c(moments, n, grid)))
    left, right = grid[max(k - 1, 0)], grid[min(k + 1, grid.size - 1)]

    res = optimize.minimize_scalar(
        lambda c: float(_miss_of_c(moments, n, c)),
        bounds=(left, right),
        method="bounded",
        options={"xatol": 1e-12 * max(1.0, abs(grid[k]))},
    )
    c_num = float(res.x)
    logger.debug(f"수치 최적 C: {c_num:.12g} (격자 {grid[k]:.6g}, 평가 {res.nfev}회)")
    return c_num


def optimal_c(moments: ClassMoments, n: int, numeric: bool | None = None) -> OptimalThreshold:
    """C_opt = -½ N (μ_A + μ_B),  θ_opt = 1 / (1 + e^{C_opt})

    닫힌 해는 σ_A = σ_B 가정에서 정확하다. σ 가 다르면 sigma_discrepancy 로 표시하고
    (numeric 이 None 일 때) 수치 최적해도 함께 계산한다.
    """
    n = check_n(n)
    c_opt = -0.5 * n * (moments.mu_a + moments.mu_b)
    threshold = threshold_from_c(c_opt)
    discrepancy = sigma_discrepancy(moments)
    if discrepancy > SIGMA_WARN_RATIO:
        logger.warning(
            f"σ_A={moments.sigma_a:.4g}, σ_B={moments.sigma_b:.4g}: 차이 {discrepancy:.1%}, "
            f"닫힌 해는 근사입니다"
        )
    if numeric is None:
        numeric = discrepancy > 0
    return OptimalThreshold(
        n=n,
        c_opt=threshold.c,
        theta_opt=threshold.theta,
        sigma_discrepancy=discrepancy,
        c_opt_numeric=optimal_c_numeric(moments, n) if numeric else None,
    )


# ── 3. AUC(N) ──

def _auc_slope(moments: ClassMoments) -> float:
    return (moments.mu_a - moments.mu_b) / (math.sqrt(2.0) * math.hypot(moments.sigma_a, moments.sigma_b))


def analytic_auc(moments: ClassMoments, n: int) -> float:
    n = check_n(n)
    return 0.5 * (1.0 + erf(math.sqrt(n) * _auc_slope(moments)))


def auc_curve(moments: ClassMoments, n_list) -> list[AucPoint]:
    return [AucPoint(n=check_n(n), auc=analytic_auc(moments, n)) for n in n_list]


def required_n(moments: ClassMoments, target_auc: float) -> int:
    """AUC(N) ≥ target 을 만족하는 최소 N"""
    if not 0.5 < target_auc < 1.0:
        raise DomainError(f"목표 AUC 는 (0.5, 1) 범위여야 합니다: {target_auc}")
    slope = _auc_slope(moments)
    if not slope > 0:
        raise DomainError("μ_A ≤ μ_B: N 을 늘려도 AUC 가 커지지 않습니다")
    n = max(1, math.ceil((float(special.erfinv(2.0 * target_auc - 1.0)) / slope) ** 2))
    # 부동소수 경계 보정
    while n > 1 and analytic_auc(moments, n - 1) >= target_auc:
        n -= 1
    while analytic_auc(moments, n) < target_auc:
        n += 1
    return n


def quality_ratios(moments: ClassMoments) -> tuple[float, float]:
    """(μ_A/σ_A, μ_B/σ_B): 다중 인스턴스 분류기의 품질 척도"""
    return moments.mu_a / moments.sigma_a, moments.mu_b / moments.sigma_b
