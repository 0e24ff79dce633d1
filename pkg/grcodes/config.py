"""
Package-wide settings.

Values here are defaults; the CLI overrides them with flags, and the
environment variables below override them for library callers.
"""
import logging
import os

logger = logging.getLogger(__name__)

# largest k for the R_k coefficient rings, values fit a 16-bit mask
MAX_RING_K = 4

# codes with a larger binary rank are not enumerated
MAX_ENUMERATION_RANK = 26

# candidate sets with more free bits are rejected
MAX_FREE_BITS = 24

# default seed for randomized property suites
DEFAULT_SEED = 0

# witnesses kept in a search report
DEFAULT_WITNESSES = 8

# rows of the low lookup table when enumerating a span
ENUMERATION_CHUNK_BITS = 16

WORKERS_ENV = 'GRC_WORKERS'
SLOW_TESTS_ENV = 'GRC_SLOW_TESTS'


def default_workers() -> int:
    """ Worker processes for exhaustive scans, from GRC_WORKERS."""
    value = os.environ.get(WORKERS_ENV)
    if not value:
        return 1
    try:
        workers = int(value)
    except ValueError:
        workers = 0
    if workers < 1:
        logger.warning("Ignoring %s=%r, using a single worker",
                       WORKERS_ENV, value)
        return 1
    return workers


def slow_tests_enabled() -> bool:
    """ Long reproductions run only when GRC_SLOW_TESTS is set."""
    return os.environ.get(SLOW_TESTS_ENV, '').lower() in ('1', 'true', 'yes')
