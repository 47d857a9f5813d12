import argparse

from multinst import __version__
from multinst.cli.commands import calibrate, curves, estimate, gen, roc, score, simulate, train
from multinst.cli.options import positive_int


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multinst",
        description="다중 인스턴스 이진 분류: 집계, 해석적 비율 예측, 임계값 보정, Monte Carlo 검증",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="DEBUG 로그 출력")
    parser.add_argument("--threads", type=positive_int, default=None, help="Monte Carlo 작업 스레드 수 (결과와 무관)")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    # 데이터
    gen.register(subparsers)
    train.register(subparsers)
    score.register(subparsers)

    # 추정 / 해석
    estimate.register(subparsers)
    roc.register(subparsers)
    curves.register(subparsers)
    calibrate.register(subparsers)

    # 검증
    simulate.register(subparsers)
    return parser
