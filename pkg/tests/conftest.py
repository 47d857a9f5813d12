import os

# 테스트는 항상 같은 기본 시드 / 단일 스레드로 실행
os.environ.setdefault("MULTINST_SEED", "20190801")
os.environ.setdefault("MULTINST_THREADS", "1")

import numpy as np
import pytest

from multinst.main import main
from multinst.parsers import ParserFactory
from multinst.schemas.dataset import ScoredDataset, WeightedDataset
from multinst.schemas.stats import ClassMoments
from multinst.services import synth_service
from multinst.services.common import sigmoid


# ============ 모멘트 ============

@pytest.fixture
def symmetric_moments() -> ClassMoments:
    """μ_A = -μ_B, σ_A = σ_B"""
    return ClassMoments(mu_a=0.1, sigma_a=1.0, mu_b=-0.1, sigma_b=1.0)


@pytest.fixture
def skewed_moments() -> ClassMoments:
    """σ_A ≠ σ_B"""
    return ClassMoments(mu_a=0.3, sigma_a=1.4, mu_b=-0.1, sigma_b=0.9)


# ============ 점수 데이터셋 ============

@pytest.fixture
def two_row_scores() -> ScoredDataset:
    """(ω_A, q) = [(1, +1), (3, -1)], B 는 균등 (1, 1)"""
    return ScoredDataset(
        scores=sigmoid(np.array([1.0, -1.0])),
        omega_a=np.array([1.0, 3.0]),
        omega_b=np.array([1.0, 1.0]),
    )


@pytest.fixture
def separated_scores() -> ScoredDataset:
    """완전 분리: A 는 0.7~0.9, B 는 0.1~0.3"""
    return ScoredDataset(
        scores=np.array([0.9, 0.8, 0.7, 0.3, 0.2, 0.1]),
        omega_a=np.array([1.0, 1.0, 1.0, 0.0, 0.0, 0.0]),
        omega_b=np.array([0.0, 0.0, 0.0, 1.0, 1.0, 1.0]),
    )


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


# ============ 합성 데이터 ============

@pytest.fixture(scope="session")
def default_config():
    return synth_service.default_config(seed=7)


@pytest.fixture(scope="session")
def small_dataset(default_config) -> WeightedDataset:
    return synth_service.generate(default_config, 5000)


@pytest.fixture(scope="session")
def ideal_scored(default_config) -> ScoredDataset:
    """관측 좌표 이상적 점수기로 채점한 합성 데이터 (M = 100000)"""
    dataset = synth_service.generate(default_config, 100_000)
    return synth_service.ideal_scores(default_config, dataset)


# ============ CLI ============

@pytest.fixture
def run_cli():
    """in-process CLI 실행: 종료 코드 반환"""
    def _run(*argv: str) -> int:
        return main([str(a) for a in argv])
    return _run


@pytest.fixture
def write_scores(tmp_path):
    """ScoredDataset 을 점수 CSV 로 저장하고 경로 반환"""
    def _write(scored: ScoredDataset, name: str = "scores.csv"):
        path = tmp_path / name
        ParserFactory.get_parser("scores").write(str(path), scored)
        return path
    return _write


@pytest.fixture
def write_moments(tmp_path):
    def _write(moments: ClassMoments, name: str = "moments.json"):
        path = tmp_path / name
        ParserFactory.get_parser("moments").write(str(path), moments)
        return path
    return _write
