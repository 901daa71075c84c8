"""Memoization of structure-level computations.

Every cache is cleared whenever a ``settings`` attribute changes.
"""
__all__ = ["cache", "reset", "stats"]
import logging
from functools import lru_cache
from typing import Callable, Dict, List, Tuple, TypeVar, cast

logger = logging.getLogger(__name__)

Func = TypeVar("Func", bound=Callable)

_registered: List = []


def cache(func: Func) -> Func:
    cached = lru_cache(maxsize=4096)(func)
    _registered.append(cached)
    return cast(Func, cached)


def reset():
    for cached in _registered:
        cached.cache_clear()
    logger.debug("cleared %d caches", len(_registered))


def stats() -> Dict[str, Tuple[int, int]]:
    """Hits and misses per cached function, keyed by qualified name."""
    result = {}
    for cached in _registered:
        info = cached.cache_info()
        result[f"{cached.__module__}.{cached.__qualname__}"] = (info.hits, info.misses)
    return result
