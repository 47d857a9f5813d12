"""train — 로지스틱-선형 점수기 학습 (모델 JSON + trace CSV)"""
import logging

from multinst.cli.options import positive_int, seed_value
from multinst.exceptions import DivergenceError
from multinst.parsers import ParserFactory
from multinst.schemas.train import TrainConfig
from multinst.services import train_service

logger = logging.getLogger(__name__)

# CLI 플래그 → TrainConfig 필드
_OVERRIDES = ("learning_rate", "epochs", "batch_size", "val_fraction", "seed")


def register(subparsers) -> None:
    parser = subparsers.add_parser("train", help="소프트 라벨 교차 엔트로피로 점수기 학습")
    parser.add_argument("dataset", help="데이터셋 CSV (x1,...,xd,omega_a,omega_b)")
    parser.add_argument("--config", help="TrainConfig JSON")
    parser.add_argument("--out", required=True, help="모델 JSON 경로")
    parser.add_argument("--trace", help="에폭별 trace CSV 경로")
    parser.add_argument("--learning-rate", dest="learning_rate", type=float)
    parser.add_argument("--epochs", type=int)
    parser.add_argument("--batch-size", dest="batch_size", type=positive_int)
    parser.add_argument("--val-fraction", dest="val_fraction", type=float)
    parser.add_argument("--seed", type=seed_value)
    parser.set_defaults(handler=run)


def _config(args) -> TrainConfig:
    base = ParserFactory.get_parser("train-config").read(args.config) if args.config else TrainConfig()
    overrides = {name: getattr(args, name) for name in _OVERRIDES if getattr(args, name) is not None}
    return TrainConfig.model_validate({**base.model_dump(), **overrides})


def run(args) -> int:
    config = _config(args)
    dataset = ParserFactory.get_parser("dataset").read(args.dataset)
    try:
        model, trace = train_service.fit(dataset, config)
    except DivergenceError as e:
        if args.trace and e.trace is not None:
            ParserFactory.get_parser("trace").write(args.trace, e.trace.records)
            logger.warning(f"발산 전까지의 trace 저장: {args.trace} ({len(e.trace)} 에폭)")
        raise

    ParserFactory.get_parser("model").write(args.out, model)
    logger.info(f"모델 저장: {args.out}")
    if args.trace:
        ParserFactory.get_parser("trace").write(args.trace, trace.records)
        logger.info(f"trace 저장: {args.trace}")
    return 0
