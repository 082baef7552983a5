# 파일: src/utils/precision.py
"""
mpmath 정밀도 구간

mpmath 의 mp 컨텍스트는 프로세스 전역이라 스레드마다 workdps 를 걸면
한 스레드의 구간 종료가 다른 스레드의 정밀도를 되돌립니다.
고정밀 계산은 모두 mp_precision 구간 안에서 직렬로 실행합니다.

사용 예:
    from src.utils.precision import mp_precision

    with mp_precision(60):
        value = mpmath.gamma(mpmath.mpf(1) / 3)
"""

from __future__ import annotations

import threading
from contextlib import contextmanager
from typing import Iterator

import mpmath

_MP_LOCK = threading.RLock()


@contextmanager
def mp_precision(dps: int) -> Iterator[None]:
    """잠금을 잡은 채 mp.dps 를 dps 로 바꾸고, 나갈 때 복원"""
    with _MP_LOCK:
        with mpmath.workdps(dps):
            yield
