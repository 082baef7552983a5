# 파일: src/utils/__init__.py
"""
hgstokes 유틸리티 모음

- parallel: 병렬 실행 유틸리티
- precision: 스레드 안전한 mpmath 정밀도 구간
"""

from .parallel import is_error, run_tasks_parallel
from .precision import mp_precision

__all__ = ["is_error", "mp_precision", "run_tasks_parallel"]
