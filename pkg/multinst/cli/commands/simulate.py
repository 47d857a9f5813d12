"""simulate — Monte Carlo 측정값 vs 해석식 비교 (자기검증)

어느 행이든 |mc - analytic| 가 허용 배수 × se 를 넘으면 CSV 는 그대로 쓰고 종료 코드 4.
"""
import logging

from multinst.cli.options import n_list, open_unit, positive_int, seed_value
from multinst.config import settings
from multinst.exceptions import UsageError, ValidationFailure
from multinst.parsers import ParserFactory
from multinst.services import synth_service
from multinst.services.common import threshold_from_theta

logger = logging.getLogger(__name__)

DEFAULT_GROUPS = 10_000


def register(subparsers) -> None:
    parser = subparsers.add_parser("simulate", help="Monte Carlo 오라클로 해석식 검증 (비교 CSV)")
    parser.add_argument("scores", help="점수 CSV (score,omega_a,omega_b)")
    parser.add_argument("--n-list", dest="n_list", type=n_list, required=True, help="예: 1,2,5 또는 1:200")
    parser.add_argument("--groups", type=positive_int, default=DEFAULT_GROUPS, help="N 당 Monte Carlo 그룹 수")
    mode = parser.add_mutually_exclusive_group(required=True)
    mode.add_argument("--theta", type=open_unit, help="고정 임계값 θ")
    mode.add_argument("--use-optimal", dest="use_optimal", action="store_true", help="N 별 θ_opt 사용")
    parser.add_argument("--seed", type=seed_value, help="Monte Carlo 시드 (기본 MULTINST_SEED)")
    parser.add_argument(
        "--max-sigmas", dest="max_sigmas", type=float, default=None,
        help=f"허용 편차 (se 배수, 기본 {settings.validation_sigmas})",
    )
    parser.add_argument("--out", help="비교 CSV 경로 (생략하면 stdout)")
    parser.set_defaults(handler=run)


def run(args) -> int:
    if args.groups < settings.mc_min_groups:
        raise UsageError(f"--groups 는 {settings.mc_min_groups} 이상이어야 합니다: {args.groups}")
    max_sigmas = settings.validation_sigmas if args.max_sigmas is None else args.max_sigmas

    scored = ParserFactory.get_parser("scores").read(args.scores)
    rows = synth_service.simulate(
        scored,
        args.n_list,
        args.groups,
        threshold=None if args.use_optimal else threshold_from_theta(args.theta),
        use_optimal=args.use_optimal,
        seed=args.seed,
        threads=args.threads,
    )
    ParserFactory.get_parser("comparison").write(args.out, rows)

    worst = max(rows, key=lambda row: row.max_deviation())
    deviation = worst.max_deviation()
    logger.info(f"최대 편차 {deviation:.2f}σ (N={worst.n}), 허용 {max_sigmas}σ")
    if deviation > max_sigmas:
        raise ValidationFailure(
            f"N={worst.n}: Monte Carlo 와 해석식 차이 {deviation:.2f}σ > {max_sigmas}σ"
        )
    return 0
