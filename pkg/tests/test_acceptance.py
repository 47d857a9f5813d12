"""기본 합성 설정에서의 대규모 Monte Carlo 검증 (느림 — pytest -m slow)"""
import numpy as np
import pytest

from multinst.services import analytic_service, stats_service, synth_service
from multinst.services.common import threshold_from_theta

pytestmark = pytest.mark.slow

N_LIST = [1, 2, 5, 10, 25, 50, 100, 200]

# (α, β): 로그 odds 아핀 섭동 (에폭 간 변동 모사)
PERTURBATIONS = [(1.0, 0.0), (0.8, 0.1), (1.25, -0.1), (0.9, -0.2), (1.1, 0.2)]


@pytest.fixture(scope="module")
def calibrated_scores():
    """관측 좌표 이상적 점수기: 단일 인스턴스 AUC ≈ 0.535"""
    config = synth_service.default_config(seed=2019)
    dataset = synth_service.generate(config, 200_000)
    return synth_service.ideal_scores(config, dataset)


def test_single_instance_auc_calibrated(calibrated_scores):
    assert stats_service.weighted_auc(calibrated_scores) == pytest.approx(0.535, abs=0.005)


def test_oracle_agrees_with_formulas(calibrated_scores):
    """N ∈ {1..200}, θ = 0.5, 10^5 그룹: TPR / FPR / AUC(N) 모두 4 SE 이내"""
    rows = synth_service.simulate(
        calibrated_scores, N_LIST, 100_000, threshold=threshold_from_theta(0.5), seed=31,
    )
    for row in rows:
        assert row.max_deviation() <= 4.0, row
    # AUC 는 N 과 함께 증가
    assert rows[-1].auc_mc > rows[0].auc_mc + 0.2


def test_calibration_stabilizes_perturbed_networks(calibrated_scores):
    """θ = 0.5 고정이면 섭동 간 TPR 가 크게 흔들리고, N 별 θ_opt 를 쓰면 일치"""
    n, groups = 200, 20_000
    fixed, calibrated, errors = [], [], []
    analytic_fixed, analytic_calibrated = [], []
    for alpha, beta in PERTURBATIONS:
        scored = synth_service.perturb_scores(calibrated_scores, alpha, beta)
        moments = stats_service.class_moments(scored)
        optimal = analytic_service.optimal_c(moments, n, numeric=False).threshold

        tpr, _ = synth_service.mc_rates(scored, n, threshold_from_theta(0.5), groups, seed=8)
        fixed.append(tpr.value)
        tpr, _ = synth_service.mc_rates(scored, n, optimal, groups, seed=8)
        calibrated.append(tpr.value)
        errors.append(tpr.std_error)

        analytic_fixed.append(analytic_service.analytic_rates(moments, n, threshold_from_theta(0.5)).tpr)
        analytic_calibrated.append(analytic_service.analytic_rates(moments, n, optimal).tpr)

    assert np.ptp(fixed) > 0.05
    assert np.ptp(calibrated) <= 2 * max(errors)
    assert np.ptp(analytic_fixed) > 0.05
    assert np.ptp(analytic_calibrated) <= 1e-12
