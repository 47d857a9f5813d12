"""결정적 난수 스트림 — SeedSequence 트리

(seed, 용도, 세부 키) 로 루트를 만들고 청크마다 자식 스트림을 spawn 한다.
청크 크기가 스레드 수와 무관하므로 --threads 값이 달라도 결과는 비트 단위로 같다.

    seed
      ├── GENERATE                 (합성 데이터)
      ├── SPLIT / SHUFFLE          (학습 분할, 에폭별 셔플)
      ├── MC_RATES × N × class     ─ chunk 0, 1, ...
      └── MC_AUC × N               ─ chunk 0, 1, ...
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from enum import IntEnum
from typing import Callable, Sequence, TypeVar

import numpy as np

from multinst.config import settings
from multinst.exceptions import DomainError

logger = logging.getLogger(__name__)

T = TypeVar("T")


class Stream(IntEnum):
    """용도별 스트림 태그 (값 변경 금지: 재현성)"""
    GENERATE = 1
    SPLIT = 2
    SHUFFLE = 3
    MC_RATES = 4
    MC_AUC = 5


def _root(seed: int, stream: Stream, *key: int) -> np.random.SeedSequence:
    if seed < 0 or seed >= 2**64:
        raise DomainError(f"seed 는 64비트 부호 없는 정수여야 합니다: {seed}")
    return np.random.SeedSequence([int(seed), int(stream), *(int(k) for k in key)])


def make_rng(seed: int, stream: Stream, *key: int) -> np.random.Generator:
    """단일 스트림 Generator"""
    return np.random.default_rng(_root(seed, stream, *key))


def make_chunk_streams(seed: int, stream: Stream, n_chunks: int, *key: int) -> list[np.random.Generator]:
    """청크별 독립 substream"""
    return [np.random.default_rng(child) for child in _root(seed, stream, *key).spawn(n_chunks)]


def chunk_sizes(total: int, chunk: int | None = None) -> list[int]:
    """total 을 chunk 크기로 나눈 목록 (마지막은 나머지)"""
    chunk = settings.mc_chunk_groups if chunk is None else chunk
    full, rest = divmod(total, chunk)
    return [chunk] * full + ([rest] if rest else [])


def run_chunks(
    fn: Callable[[np.random.Generator, int], T],
    streams: Sequence[np.random.Generator],
    sizes: Sequence[int],
    threads: int | None = None,
) -> list[T]:
    """청크 작업을 (선택적으로) 스레드 풀에서 실행: 결과는 청크 순서 그대로"""
    threads = settings.threads if threads is None else threads
    if threads <= 1 or len(sizes) <= 1:
        return [fn(rng, size) for rng, size in zip(streams, sizes)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, streams, sizes))
