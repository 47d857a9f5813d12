"""다중 인스턴스 분류기 — N 개 단일 인스턴스 점수를 하나의 사후확률/결정으로 결합

P(A|{X_i}) = Π p_i / (Π p_i + Π (1 - p_i)) 를 로그 odds 합의 sigmoid 로 계산한다.
곱을 직접 만들면 N ≳ 300 에서 언더플로가 나므로 항상 로그 공간에서 처리.
"""
import numpy as np

from multinst.exceptions import DomainError
from multinst.schemas.core import ClassLabel, Threshold
from multinst.services.common import classify, log_odds, sigmoid


def _as_group(scores) -> np.ndarray:
    arr = np.asarray(scores, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise DomainError("그룹은 비어 있지 않은 1차원 점수 목록이어야 합니다")
    return arr


def group_log_odds(scores) -> float:
    """Σ_i log(p_i / (1 - p_i))"""
    return float(np.sum(log_odds(_as_group(scores))))


def multi_posterior(scores) -> float:
    """그룹 사후확률 sigmoid(Σ q_i)"""
    return sigmoid(group_log_odds(scores))


def classify_group(scores, threshold: Threshold) -> ClassLabel:
    """C(θ) + Σ q_i > 0 이면 A"""
    return classify(group_log_odds(scores), threshold)
