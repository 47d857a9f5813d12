"""roc — 가중 ROC 테이블"""
import logging

from multinst.cli.options import theta_grid
from multinst.parsers import ParserFactory
from multinst.services import stats_service
from multinst.services.common import threshold_from_theta

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("roc", help="단일 인스턴스 가중 ROC (theta,tpr,fpr)")
    parser.add_argument("scores", help="점수 CSV (score,omega_a,omega_b)")
    parser.add_argument("--theta-grid", dest="theta_grid", type=theta_grid, help="예: 0.001:0.999:999")
    parser.add_argument("--out", help="ROC CSV 경로 (생략하면 stdout)")
    parser.set_defaults(handler=run)


def run(args) -> int:
    scored = ParserFactory.get_parser("scores").read(args.scores)
    points = stats_service.roc_curve(scored, args.theta_grid)
    ParserFactory.get_parser("roc").write(args.out, points)

    tpr, fpr = stats_service.empirical_rates(scored, threshold_from_theta(0.5))
    logger.info(f"θ=0.5: TPR={tpr:.5f}, FPR={fpr:.5f}, AUC={stats_service.weighted_auc(scored):.5f}")
    return 0
