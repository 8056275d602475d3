"""Search budgets, overridable through the SUNIT_SEARCH_BUDGET environment variable."""

import os

DEFAULT_SEARCH_BUDGET = 20000


def search_budget(default: int = DEFAULT_SEARCH_BUDGET) -> int:
    """Number of candidates an unbounded scan may examine before giving up."""
    raw = os.environ.get("SUNIT_SEARCH_BUDGET")
    if raw is None or raw.strip() == "":
        return default
    value = int(raw)
    if value < 1:
        raise ValueError(f"SUNIT_SEARCH_BUDGET must be positive, got {raw!r}")
    return value
