"""Search caps and worker pools shared by the enumeration engines."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional, TypeVar

T = TypeVar("T")
R = TypeVar("R")

CAP_ENV = "BRAIDLEVEL_CAP"


class CapExceeded(RuntimeError):
    """A search space is larger than the configured cap."""


def resolve_cap(cap: Optional[int], default: int) -> int:
    if cap is not None:
        return int(cap)
    env = os.environ.get(CAP_ENV)
    if env:
        return int(float(env))
    return default


def check_cap(required: int, cap: int, what: str, hint: str = "") -> None:
    if required > cap:
        msg = f"{what}: search space {required} exceeds cap {cap}"
        if hint:
            msg += f"; {hint}"
        raise CapExceeded(msg)


def run_jobs(fn: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> list[R]:
    """Map ``fn`` over ``items``, in order, optionally across processes."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))
