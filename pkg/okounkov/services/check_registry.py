"""
Registry of named checks run by the ``check`` subcommand.

Each check compares two exact quantities and reports both sides, never a
rounded value.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

from okounkov.core.rational import format_rational
from okounkov.errors import OkounkovError
from okounkov.logging_config import get_logger

logger = get_logger(__name__)

# Registry of available checks
CHECK_REGISTRY: Dict[str, Callable[..., List["CheckResult"]]] = {}


def register_check(name: str):
    """Decorator to register a function as a named check."""
    def decorator(func):
        CHECK_REGISTRY[name] = func
        return func
    return decorator


def render(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (Fraction, int)):
        return format_rational(Fraction(value))
    return str(value)


@dataclass(frozen=True)
class CheckResult:
    name: str
    lhs: str
    rhs: str
    relation: str
    passed: bool
    detail: Optional[str] = None

    @classmethod
    def compare(cls, name: str, lhs: Any, rhs: Any, relation: str = "=", detail: Optional[str] = None) -> "CheckResult":
        if relation == "=":
            passed = lhs == rhs
        elif relation == "<=":
            passed = lhs <= rhs
        elif relation == ">=":
            passed = lhs >= rhs
        else:
            raise ValueError(f"unknown relation {relation!r}")
        return cls(name, render(lhs), render(rhs), relation, bool(passed), detail)

    @classmethod
    def holds(cls, name: str, passed: bool, detail: Optional[str] = None) -> "CheckResult":
        return cls(name, render(passed), "true", "=", bool(passed), detail)


def run_checks(names: Optional[List[str]] = None, **kwargs) -> List[CheckResult]:
    """Run the named checks (all when None) in registry order."""
    selected = list(CHECK_REGISTRY) if not names else names
    results: List[CheckResult] = []
    for name in selected:
        func = CHECK_REGISTRY.get(name)
        if func is None:
            raise KeyError(f"unknown check {name!r}; known: {sorted(CHECK_REGISTRY)}")
        logger.info("check_started", check=name)
        try:
            batch = func(**kwargs)
        except OkounkovError as exc:
            logger.error("check_failed", check=name, error=exc.message)
            batch = [CheckResult(name, "error", exc.message, "=", False, type(exc).__name__)]
        failed = [r.name for r in batch if not r.passed]
        logger.info("check_completed", check=name, results=len(batch), failed=len(failed))
        results.extend(batch)
    return results
