"""
Exhaustive verification over every partition up to a weight bound.
"""

import logging
from multiprocessing import Pool
import time
from typing import Iterable, Optional

from .checks import CHECKS, WeightContext, resolve_checks
from .counting import census, clear_counts, count_by_bw, format_census_tsv
from .models import Counterexample, VerificationReport

logger = logging.getLogger(__name__)

__all__ = ["census", "count_by_bw", "format_census_tsv", "verify_range"]


def _run_weight(job: tuple[int, tuple[str, ...]]) -> tuple[int, dict[str, list[Counterexample]]]:
    """Worker: run the named checks at one weight. Module-level so Pool can pickle it."""
    n, names = job
    ctx = WeightContext(n)
    logger.debug("%s", ctx.get_summary())
    return n, {name: CHECKS[name]().run(ctx) for name in names}


def verify_range(
    max_weight: int,
    checks: Optional[Iterable[str]] = None,
    jobs: int = 1,
    cap: int = 20,
) -> VerificationReport:
    """
    Run the selected checks at every weight 0..max_weight.

    Args:
        max_weight (int): Largest weight checked
        checks (Iterable[str], optional): Check names; None runs all of them
        jobs (int): Worker processes; 1 runs in this process
        cap (int): Counterexamples kept per check; the rest are only counted

    Returns:
        VerificationReport: Identical for identical arguments apart from elapsed
    """
    if max_weight < 0:
        raise ValueError(f"max_weight must be nonnegative, got {max_weight}")
    if jobs < 1:
        raise ValueError(f"jobs must be at least 1, got {jobs}")
    if cap < 1:
        raise ValueError(f"cap must be at least 1, got {cap}")
    names = resolve_checks(checks)
    work = [(n, names) for n in range(max_weight + 1)]
    found: dict[str, list[Counterexample]] = {name: [] for name in names}

    start = time.perf_counter()
    if jobs > 1:
        logger.info("checking weights 0..%d on %d processes", max_weight, jobs)
        with Pool(processes=jobs) as pool:
            # imap keeps weight order whatever the scheduling
            for n, results in pool.imap(_run_weight, work):
                _merge(found, n, results)
    else:
        for job in work:
            n, results = _run_weight(job)
            _merge(found, n, results)
    clear_counts()

    kept: list[Counterexample] = []
    dropped = 0
    for name in names:
        failures = found[name]
        if failures:
            logger.warning("check %s failed with %d counterexamples", name, len(failures))
        kept.extend(failures[:cap])
        dropped += max(0, len(failures) - cap)
    elapsed = time.perf_counter() - start

    return VerificationReport(
        max_weight=max_weight,
        checks_run=names,
        passed=not kept and dropped == 0,
        counterexamples=tuple(kept),
        counterexample_cap=cap,
        dropped=dropped,
        elapsed=elapsed,
    )


def _merge(found: dict[str, list[Counterexample]], n: int, results: dict[str, list[Counterexample]]) -> None:
    for name, failures in results.items():
        found[name].extend(failures)
    logger.info("weight %d checked", n)
