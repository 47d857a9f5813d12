import sys
from abc import ABC, abstractmethod
from contextlib import contextmanager
from typing import Any, IO, Iterator

STDIO = "-"


@contextmanager
def open_output(file_path: str | None) -> Iterator[IO[str]]:
    """경로가 없거나 '-' 이면 stdout"""
    if file_path in (None, STDIO):
        yield sys.stdout
        return
    with open(file_path, "w", encoding="utf-8", newline="") as f:
        yield f


class BaseParser(ABC):
    """파일 형식별 읽기/쓰기 추상 클래스"""

    @abstractmethod
    def read(self, file_path: str) -> Any:
        """파일에서 객체를 읽습니다."""
        pass

    @abstractmethod
    def write(self, file_path: str | None, payload: Any) -> None:
        """객체를 파일(또는 stdout)에 씁니다."""
        pass
