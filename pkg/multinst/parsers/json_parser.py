import logging
from typing import ClassVar, Generic, TypeVar

from pydantic import BaseModel

from multinst.parsers.base import BaseParser, open_output
from multinst.schemas.analytic import OptimalThreshold
from multinst.schemas.stats import ClassMoments, MomentsReport
from multinst.schemas.synth import SynthConfig
from multinst.schemas.train import ScorerModel, TrainConfig

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)


class JsonModelParser(BaseParser, Generic[M]):
    """pydantic 모델 ↔ JSON 파일. 검증 오류는 ValidationError 그대로 전파"""

    model: ClassVar[type[BaseModel]]

    def read(self, file_path: str) -> M:
        with open(file_path, encoding="utf-8") as f:
            obj = self.model.model_validate_json(f.read())
        logger.debug(f"{self.model.__name__} 읽기: {file_path}")
        return obj

    def write(self, file_path: str | None, payload: M) -> None:
        with open_output(file_path) as f:
            f.write(payload.model_dump_json(indent=2))
            f.write("\n")


class MomentsJsonParser(JsonModelParser[ClassMoments]):
    """estimate 출력(MomentsReport)도 그대로 읽힌다: 추가 필드는 무시"""
    model = ClassMoments


class MomentsReportJsonParser(JsonModelParser[MomentsReport]):
    model = MomentsReport


class ThresholdJsonParser(JsonModelParser[OptimalThreshold]):
    model = OptimalThreshold


class ModelJsonParser(JsonModelParser[ScorerModel]):
    model = ScorerModel


class SynthConfigJsonParser(JsonModelParser[SynthConfig]):
    model = SynthConfig


class TrainConfigJsonParser(JsonModelParser[TrainConfig]):
    model = TrainConfig
