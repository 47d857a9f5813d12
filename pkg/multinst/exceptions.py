"""도메인 예외 — CLI 종료 코드와 1:1 대응

서비스 계층은 이 예외만 던지고, cli/commands 에서 exit_code 로 변환한다.
(0 성공, 1 기타, 2 사용법, 3 데이터 퇴화, 4 검증 실패)
"""


class MultinstError(Exception):
    """모든 도메인 예외의 기반"""

    exit_code: int = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class InvalidInstanceError(MultinstError, ValueError):
    """가중치 (ω_A, ω_B) 가 유효하지 않음 (둘 다 0, 음수 등)"""


class InvalidScoreError(MultinstError, ValueError):
    """점수가 NaN 이거나 [0,1] 범위 밖"""


class DomainError(MultinstError, ValueError):
    """함수 정의역 밖의 인자 (θ ∉ (0,1), 빈 그룹, N < 1 ...)"""


class DimensionMismatchError(MultinstError, ValueError):
    """특성 차원 불일치"""


class DegenerateDatasetError(MultinstError):
    """가중치 합 0, 분산 0 등 추정 불가능한 데이터셋"""

    exit_code = 3


class InsufficientDataError(DegenerateDatasetError):
    """클래스별 유효 인스턴스 부족"""


class DivergenceError(MultinstError):
    """학습 중 손실/파라미터가 NaN·Inf 로 발산: 중단 시점까지의 trace 포함"""

    def __init__(self, detail: str, trace=None):
        super().__init__(detail)
        self.trace = trace


class UsageError(MultinstError):
    """CLI 인자 오류"""

    exit_code = 2


class ValidationFailure(MultinstError):
    """Monte Carlo 측정값이 해석식과 허용 오차 이상 어긋남"""

    exit_code = 4


class InputFormatError(UsageError):
    """입력 파일 형식 오류 (CSV 헤더, 숫자 파싱 ...)"""
