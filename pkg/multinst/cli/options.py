"""argparse 인자 타입 — 잘못된 값은 ArgumentTypeError (종료 코드 2)"""
import argparse

import numpy as np


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"정수가 아닙니다: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"1 이상이어야 합니다: {value}")
    return value


def seed_value(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"정수가 아닙니다: {text!r}")
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed 는 0 이상 2^64 미만이어야 합니다: {value}")
    return value


def open_unit(text: str) -> float:
    """(0, 1) 구간 실수"""
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"실수가 아닙니다: {text!r}")
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(f"(0,1) 범위여야 합니다: {value}")
    return value


def n_list(text: str) -> list[int]:
    """'1,2,5,10' 또는 범위 'a:b' / 'a:b:step' (양끝 포함) 의 조합 → 정렬된 N 목록"""
    values: set[int] = set()
    for part in filter(None, (p.strip() for p in text.split(","))):
        bounds = part.split(":")
        if len(bounds) == 1:
            values.add(positive_int(bounds[0]))
        elif len(bounds) in (2, 3):
            start, stop = positive_int(bounds[0]), positive_int(bounds[1])
            step = positive_int(bounds[2]) if len(bounds) == 3 else 1
            if stop < start:
                raise argparse.ArgumentTypeError(f"범위의 끝이 시작보다 작습니다: {part}")
            values.update(range(start, stop + 1, step))
        else:
            raise argparse.ArgumentTypeError(f"N 목록 형식 오류: {part!r}")
    if not values:
        raise argparse.ArgumentTypeError("N 목록이 비어 있습니다")
    return sorted(values)


def theta_grid(text: str) -> np.ndarray:
    """'0.1,0.5,0.9' 또는 'lo:hi:num' (linspace, 양끝 포함)"""
    if ":" in text:
        bounds = text.split(":")
        if len(bounds) != 3:
            raise argparse.ArgumentTypeError(f"θ 그리드는 lo:hi:num 형식이어야 합니다: {text!r}")
        lo, hi, num = open_unit(bounds[0]), open_unit(bounds[1]), positive_int(bounds[2])
        if hi < lo:
            raise argparse.ArgumentTypeError(f"θ 그리드 범위 오류: {text!r}")
        return np.linspace(lo, hi, num)
    values = [open_unit(v) for v in filter(None, (p.strip() for p in text.split(",")))]
    if not values:
        raise argparse.ArgumentTypeError("θ 그리드가 비어 있습니다")
    return np.sort(np.array(values, dtype=np.float64))
