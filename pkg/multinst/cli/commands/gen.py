"""gen — 합성 가중 데이터셋 생성"""
import json
import logging

from multinst.cli.options import positive_int, seed_value
from multinst.parsers import ParserFactory
from multinst.schemas.synth import SynthConfig
from multinst.services import synth_service

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("gen", help="합성 가중 데이터셋 CSV 생성")
    parser.add_argument("config", nargs="?", help="SynthConfig JSON (생략하면 기본 설정)")
    parser.add_argument("--out", required=True, help="데이터셋 CSV 경로")
    parser.add_argument("--m", type=positive_int, required=True, help="인스턴스 수")
    parser.add_argument("--seed", type=seed_value, help="설정 파일의 seed 대신 사용")
    parser.add_argument("--ideal-scores", dest="ideal_scores", help="관측 좌표 이상적 점수기의 점수 CSV 경로")
    parser.set_defaults(handler=run)


def run(args) -> int:
    if args.config:
        config = ParserFactory.get_parser("synth-config").read(args.config)
    else:
        config = synth_service.default_config()
    if args.seed is not None:
        config = SynthConfig.model_validate({**config.model_dump(), "seed": args.seed})

    dataset = synth_service.generate(config, args.m)
    ParserFactory.get_parser("dataset").write(args.out, dataset)
    logger.info(f"데이터셋 저장: {args.out}")

    if args.ideal_scores:
        scored = synth_service.ideal_scores(config, dataset)
        ParserFactory.get_parser("scores").write(args.ideal_scores, scored)
        logger.info(f"이상적 점수 저장: {args.ideal_scores}")

    print(json.dumps(synth_service.dataset_summary(config, dataset), indent=2))
    return 0
