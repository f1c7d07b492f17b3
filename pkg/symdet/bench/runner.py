"""
Trial execution: timing, seeds, optional thread parallelism, and a
hard per-trial deadline enforced by running the trial in a child process.

Work outside the timed section (generation, hashing) may overlap between
threads; timed sections always hold ``TIMING_LOCK`` so no two measurements
share the interpreter at once.
"""

from __future__ import annotations

import hashlib
import multiprocessing
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Iterable, List, Tuple, TypeVar

from symdet.core.errors import ResultMismatch, SymdetError, TimeCeilingExceeded
from symdet.models.schema import SEED_LIMIT
from symdet.poly import Polynomial

T = TypeVar("T")
R = TypeVar("R")

TIMING_LOCK = threading.Lock()

# Children start clean: no inherited lock state, no forked threads.
_SPAWN = multiprocessing.get_context("spawn")


def derive_seed(seed: int, index: int) -> int:
    """Per-trial seed: master seed XOR trial index."""
    return (seed ^ index) % SEED_LIMIT


def timed(fn: Callable[..., R], *args: Any) -> Tuple[R, int]:
    """Run fn(*args) under the timing lock; returns (result, elapsed ns)."""
    with TIMING_LOCK:
        start = time.perf_counter_ns()
        result = fn(*args)
        elapsed = time.perf_counter_ns() - start
    return result, elapsed


def result_hash(p: Polynomial) -> str:
    return hashlib.sha256(str(p).encode("utf-8")).hexdigest()


def run_trials(fn: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> List[R]:
    """Map fn over items, in order; jobs > 1 uses a thread pool."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _deadline_worker(conn, fn: Callable[..., Any], args: Tuple[Any, ...]) -> None:
    try:
        result = fn(*args)
    except Exception as e:
        # By name: exceptions with custom __init__ signatures do not unpickle.
        conn.send(("err", type(e).__name__, str(e)))
    else:
        conn.send(("ok", result))
    finally:
        conn.close()


def run_with_deadline(fn: Callable[..., R], args: Tuple[Any, ...], timeout_secs: float) -> R:
    """
    Run fn(*args) in a fresh process, killed after ``timeout_secs``.

    fn must be a module-level function and args must pickle. TIMING_LOCK is
    held for the whole run, so concurrent callers still measure one at a
    time. Raises TimeCeilingExceeded on a kill; a ResultMismatch in the child
    is raised again as such, any other failure as SymdetError.
    """
    recv, send = _SPAWN.Pipe(duplex=False)
    proc = _SPAWN.Process(target=_deadline_worker, args=(send, fn, args), daemon=True)
    with TIMING_LOCK:
        start = time.perf_counter_ns()
        proc.start()
        send.close()
        ready = recv.poll(timeout_secs)
        if not ready:
            elapsed = time.perf_counter_ns() - start
            proc.terminate()
            proc.join()
            recv.close()
            raise TimeCeilingExceeded(elapsed, int(timeout_secs * 1e9))
        try:
            message = recv.recv()
        except EOFError:
            message = ("err", "WorkerExit", f"exit code {proc.exitcode}")
        proc.join()
    recv.close()

    if message[0] == "ok":
        return message[1]
    _, name, text = message
    if name == ResultMismatch.__name__:
        raise ResultMismatch(text)
    raise SymdetError(f"{name} in trial worker: {text}")
