from __future__ import annotations

import logging
from functools import wraps

from models import storage
from models.computed_polynomial import PolynomialKind

logger = logging.getLogger(__name__)


def cached_polynomial(kind: PolynomialKind):
    """
    Look the polynomial up in the result store before computing it.
    The wrapped function takes (omega, variables, **kwargs); pass cache=True
    to go through the store, otherwise it is a plain call.
    """

    def decorator(fn):
        @wraps(fn)
        def wrapper(omega, variables: int = 0, *, cache: bool = False, **kwargs):
            if not cache:
                return fn(omega, variables, **kwargs)
            if not storage.ready:
                storage.reload()
            stored = storage.get(kind, omega, variables)
            if stored is not None:
                return stored
            result = fn(omega, variables, **kwargs)
            storage.put(kind, omega, variables, result)
            logger.info("stored %s polynomial of %s", kind.value, omega)
            return result

        return wrapper

    return decorator
