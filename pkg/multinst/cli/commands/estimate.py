"""estimate — 점수 CSV 에서 로그 odds 모멘트와 단일 인스턴스 AUC 추정"""
import logging

from multinst.parsers import ParserFactory
from multinst.schemas.stats import MomentsReport
from multinst.services import stats_service

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("estimate", help="클래스별 로그 odds 모멘트 추정 (JSON)")
    parser.add_argument("scores", help="점수 CSV (score,omega_a,omega_b)")
    parser.add_argument("--out", help="모멘트 JSON 경로 (생략하면 stdout)")
    parser.set_defaults(handler=run)


def run(args) -> int:
    scored = ParserFactory.get_parser("scores").read(args.scores)
    moments = stats_service.class_moments(scored)
    report = MomentsReport(
        **moments.model_dump(),
        auc_1=stats_service.weighted_auc(scored),
        loss=stats_service.weighted_loss(scored),
        ideal_loss=stats_service.ideal_loss(scored),
    )
    ParserFactory.get_parser("moments-report").write(args.out, report)
    logger.info(f"AUC(1)={report.auc_1:.5f}, LOSS={report.loss:.6f} (최소 {report.ideal_loss:.6f})")
    return 0
