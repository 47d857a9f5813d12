"""calibrate — 그룹 크기 N 의 최적 임계값"""
import logging

from multinst.cli.options import positive_int
from multinst.parsers import ParserFactory
from multinst.services import analytic_service

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("calibrate", help="최적 임계값 C_opt / θ_opt (JSON)")
    parser.add_argument("moments", help="모멘트 JSON (estimate 출력)")
    parser.add_argument("--n", type=positive_int, required=True, help="그룹 크기 N")
    parser.add_argument("--out", help="임계값 JSON 경로 (생략하면 stdout)")
    parser.set_defaults(handler=run)


def run(args) -> int:
    moments = ParserFactory.get_parser("moments").read(args.moments)
    result = analytic_service.optimal_c(moments, args.n, numeric=True)
    ParserFactory.get_parser("threshold").write(args.out, result)
    logger.info(f"N={result.n}: C_opt={result.c_opt:.6g}, θ_opt={result.theta_opt:.6g}, 수치해 {result.c_opt_numeric:.6g}")
    return 0
