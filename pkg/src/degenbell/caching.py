"""Process-wide memo caches for pure number-family computations.

Every cached function is registered here so tests can reset the whole
package to a cold state with one call.  All cached values are immutable,
so concurrent readers are safe; a duplicated fill is idempotent.
"""

from __future__ import annotations

import functools
from typing import Callable, TypeVar

F = TypeVar("F", bound=Callable)

_REGISTRY: list = []


def cached(fn: F) -> F:
    wrapped = functools.cache(fn)
    _REGISTRY.append(wrapped)
    return wrapped  # type: ignore[return-value]


def clear_caches() -> None:
    """Drop every memoized value in the package."""
    for fn in _REGISTRY:
        fn.cache_clear()
