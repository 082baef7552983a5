# 파일: src/utils/parallel.py
"""
병렬 실행 유틸리티

서로 독립적인 k 값의 검증을 동시에 실행합니다.
결과 딕셔너리의 순서는 완료 순서이므로 호출 측에서 정렬해야 합니다.

사용 예:
    from src.utils.parallel import run_tasks_parallel, is_error

    results = run_tasks_parallel({
        2: (run_identity_suite, (2,)),
        3: (run_identity_suite, (3,)),
    })
    for k in sorted(results):
        if is_error(results[k]):
            ...
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from concurrent.futures import TimeoutError as FuturesTimeoutError
from typing import Any, Callable, Dict, Hashable, Tuple

logger = logging.getLogger(__name__)


def run_tasks_parallel(
    tasks: Dict[Hashable, Tuple[Callable, tuple]],
    max_workers: int | None = None,
    timeout: float | None = 300,
) -> Dict[Hashable, Any]:
    """
    여러 계산 함수를 병렬로 실행합니다.

    Args:
        tasks: {이름: (함수, (인자1, 인자2, ...))} 딕셔너리
        max_workers: 최대 동시 스레드 수 (기본: 태스크 수)
        timeout: 전체 제한 시간(초). None이면 무제한.

    Returns:
        {이름: 결과} 딕셔너리.
        개별 태스크가 예외를 던지면 해당 결과는 Exception 객체.
        제한 시간 안에 끝나지 않은 태스크는 TimeoutError 객체.
    """
    if not tasks:
        return {}
    if max_workers is None:
        max_workers = len(tasks)

    results: Dict[Hashable, Any] = {}
    start = time.perf_counter()

    executor = ThreadPoolExecutor(max_workers=max_workers)
    try:
        # 제출
        future_to_name = {
            executor.submit(func, *args): name
            for name, (func, args) in tasks.items()
        }

        # 수거
        try:
            for future in as_completed(future_to_name, timeout=timeout):
                name = future_to_name[future]
                try:
                    results[name] = future.result()
                except Exception as exc:
                    logger.warning(f"[Parallel] [{name}] 실행 오류: {exc}")
                    results[name] = exc
        except FuturesTimeoutError:
            for future, name in future_to_name.items():
                if name in results:
                    continue
                if future.done():
                    exc = future.exception()
                    results[name] = exc if exc is not None else future.result()
                    continue
                future.cancel()
                logger.warning(f"[Parallel] [{name}] {timeout}초 안에 끝나지 않음")
                results[name] = TimeoutError(f"task {name!r} unfinished after {timeout}s")
    finally:
        # 시간 초과 시 남은 태스크를 기다리지 않음
        executor.shutdown(wait=False, cancel_futures=True)

    elapsed = time.perf_counter() - start
    logger.info(f"[Parallel] 병렬 실행 완료: {elapsed:.1f}초 (태스크 {len(tasks)}개)")
    return results


def is_error(result: Any) -> bool:
    """run_tasks_parallel 결과가 오류인지 확인"""
    return isinstance(result, Exception)
