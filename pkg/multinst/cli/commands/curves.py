"""curves — 해석식 TPR / FPR / MISS / AUC(N) 테이블"""
import logging

from multinst.cli.options import n_list, theta_grid
from multinst.parsers import ParserFactory
from multinst.services import analytic_service, stats_service

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("curves", help="N × θ 그리드의 해석적 비율 CSV")
    parser.add_argument("moments", help="모멘트 JSON (estimate 출력)")
    parser.add_argument("--n-list", dest="n_list", type=n_list, required=True, help="예: 1,2,5 또는 1:200")
    parser.add_argument("--theta-grid", dest="theta_grid", type=theta_grid, help="예: 0.1,0.5,0.9 또는 0.001:0.999:999")
    parser.add_argument("--out", help="rates CSV 경로 (생략하면 stdout)")
    parser.set_defaults(handler=run)


def run(args) -> int:
    moments = ParserFactory.get_parser("moments").read(args.moments)
    grid = stats_service.theta_grid() if args.theta_grid is None else args.theta_grid

    rows = []
    for point in analytic_service.auc_curve(moments, args.n_list):
        for pred in analytic_service.miss_curve(moments, point.n, grid):
            rows.append({
                "n": point.n,
                "theta": pred.theta.theta,
                "c": pred.theta.c,
                "tpr": pred.tpr,
                "fpr": pred.fpr,
                "miss": pred.miss,
                "auc_n": point.auc,
            })
    ParserFactory.get_parser("rates").write(args.out, rows)
    logger.info(f"곡선 {len(args.n_list)}개 N × {len(grid)}개 θ")
    return 0
