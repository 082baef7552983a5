import sys
import threading
import time
from pathlib import Path

import mpmath

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from src.utils.parallel import is_error, run_tasks_parallel
from src.utils.precision import mp_precision


def _square(x):
    time.sleep(0.01)
    return x * x


def _fail(message):
    raise RuntimeError(message)


def test_run_tasks_parallel_collects_results_by_name():
    results = run_tasks_parallel({k: (_square, (k,)) for k in range(2, 6)}, max_workers=2)

    assert {k: results[k] for k in sorted(results)} == {2: 4, 3: 9, 4: 16, 5: 25}


def test_run_tasks_parallel_keeps_exceptions_per_task():
    results = run_tasks_parallel({"ok": (_square, (3,)), "bad": (_fail, ("boom",))})

    assert results["ok"] == 9
    assert is_error(results["bad"])
    assert "boom" in str(results["bad"])
    assert not is_error(results["ok"])


def test_run_tasks_parallel_empty():
    assert run_tasks_parallel({}) == {}


def test_run_tasks_parallel_reports_unfinished_tasks_on_timeout():
    release = threading.Event()

    def _blocked():
        release.wait(5)
        return "late"

    try:
        start = time.perf_counter()
        results = run_tasks_parallel(
            {"fast": (_square, (2,)), "slow": (_blocked, ())}, max_workers=2, timeout=0.5
        )
        elapsed = time.perf_counter() - start
    finally:
        release.set()

    assert results["fast"] == 4
    assert is_error(results["slow"])
    assert isinstance(results["slow"], TimeoutError)
    assert elapsed < 4


def test_mp_precision_is_not_reset_by_other_threads():
    seen = {}

    def _hold(dps):
        with mp_precision(dps):
            time.sleep(0.02)
            seen.setdefault(dps, []).append(mpmath.mp.dps)
            time.sleep(0.02)
            seen[dps].append(mpmath.mp.dps)

    workers = [threading.Thread(target=_hold, args=(dps,)) for dps in (30, 60, 90, 120)]
    for worker in workers:
        worker.start()
    for worker in workers:
        worker.join()

    assert seen == {dps: [dps, dps] for dps in (30, 60, 90, 120)}
