"""score — 저장된 모델로 데이터셋 채점"""
import logging

from multinst.parsers import ParserFactory
from multinst.services import train_service

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("score", help="모델로 데이터셋을 채점 (점수 CSV)")
    parser.add_argument("model", help="모델 JSON")
    parser.add_argument("dataset", help="데이터셋 CSV")
    parser.add_argument("--out", help="점수 CSV 경로 (생략하면 stdout)")
    parser.set_defaults(handler=run)


def run(args) -> int:
    model = ParserFactory.get_parser("model").read(args.model)
    dataset = ParserFactory.get_parser("dataset").read(args.dataset)
    scored = train_service.score_dataset(model, dataset)
    ParserFactory.get_parser("scores").write(args.out, scored)
    logger.info(f"채점 완료: {len(scored)}개")
    return 0
