import json
import logging
import sys

from marshmallow import ValidationError

from models.errors import TowerError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    """Input that cannot be interpreted for the requested command."""


def error_response(error: str, message: str, status: int, details: dict | None = None) -> str:
    payload = {"error": error, "message": message, "status": status}
    if details:
        payload["details"] = details
    return json.dumps(payload, default=str)


def handle_error(err: Exception, debug: bool = False) -> int:
    """Write the one-line error envelope to stderr and return the exit code."""
    if isinstance(err, ValidationError):
        line = error_response("VALIDATION_ERROR", "Invalid input", EXIT_USAGE, details={"messages": err.messages})
        status = EXIT_USAGE
    elif isinstance(err, UsageError):
        line = error_response("USAGE_ERROR", str(err), EXIT_USAGE)
        status = EXIT_USAGE
    elif isinstance(err, TowerError):
        if debug:
            logger.debug("domain error %s: %s", err.code, err.message)
        line = error_response(err.code, err.message, EXIT_DOMAIN, details=err.details)
        status = EXIT_DOMAIN
    else:
        logger.exception("Unhandled exception", exc_info=err)
        details = {"type": err.__class__.__name__, "message": str(err)} if debug else None
        line = error_response("INTERNAL_ERROR", "An unexpected error occurred", EXIT_INTERNAL, details=details)
        status = EXIT_INTERNAL
    print(line, file=sys.stderr)
    return status
