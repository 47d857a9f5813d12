from multinst.parsers.base import BaseParser
from multinst.parsers.csv_parser import (
    ComparisonCsvParser,
    DatasetCsvParser,
    RatesCsvParser,
    RocCsvParser,
    ScoresCsvParser,
    TraceCsvParser,
)
from multinst.parsers.json_parser import (
    ModelJsonParser,
    MomentsJsonParser,
    MomentsReportJsonParser,
    SynthConfigJsonParser,
    ThresholdJsonParser,
    TrainConfigJsonParser,
)


class ParserFactory:
    """입출력 종류에 따른 파서 생성"""

    _parsers = {
        "dataset": DatasetCsvParser,
        "scores": ScoresCsvParser,
        "rates": RatesCsvParser,
        "comparison": ComparisonCsvParser,
        "trace": TraceCsvParser,
        "roc": RocCsvParser,
        "moments": MomentsJsonParser,
        "moments-report": MomentsReportJsonParser,
        "threshold": ThresholdJsonParser,
        "model": ModelJsonParser,
        "synth-config": SynthConfigJsonParser,
        "train-config": TrainConfigJsonParser,
    }

    @classmethod
    def get_parser(cls, kind: str) -> BaseParser:
        parser_class = cls._parsers.get(kind.lower())
        if not parser_class:
            raise ValueError(f"지원하지 않는 입출력 종류: {kind}")
        return parser_class()

    @classmethod
    def get_supported_kinds(cls) -> list[str]:
        return list(cls._parsers.keys())
