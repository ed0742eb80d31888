"""Running verification and audit jobs against a workspace."""

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence

from orbispec import error, logger
from orbispec.algebra.power import Mode
from orbispec.handler.spectrum import Format
from orbispec.verify.macdonald import (
    Shift,
    normalization_audit,
    verify_theorem1,
    verify_theorem1_euler,
    verify_theorem1_pair,
    verify_theorem2,
)
from orbispec.verify.report import ComparisonReport, JobResult, Verdict
from orbispec.workspace.manager import WorkspaceManager
from orbispec.workspace.models import JobModel

log = logger.get_logger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3


@dataclass(frozen=True)
class VerifyOptions:
    k: int
    truncation: int
    n_max: int
    shift: Shift
    mode: Mode
    bound: Optional[int] = None


def run_theorem1(
    manager: WorkspaceManager, fixture: str, options: VerifyOptions
) -> JobResult:
    data = manager.hodge(fixture)
    order = options.truncation

    return JobResult(
        f"theorem-1 {fixture}",
        [
            verify_theorem1(data, order, fixture),
            verify_theorem1_pair(data, order, fixture),
            verify_theorem1_euler(data, order, fixture),
        ],
    )


def run_theorem2(
    manager: WorkspaceManager, fixture: str, options: VerifyOptions
) -> JobResult:
    name = f"theorem-2 {fixture} k={options.k}"

    try:
        reports = verify_theorem2(
            manager.theorem2_fixture(fixture),
            options.k,
            options.truncation,
            options.shift,
            options.mode,
            options.n_max,
            options.bound,
        )
    except (
        error.UnsupportedError,
        error.WreathSizeError,
        error.DepthError,
    ) as exc:
        log.warning("run_theorem2: %s unsupported: %s", fixture, exc)
        reports = [
            ComparisonReport.unsupported(
                "theorem-2",
                fixture,
                min(options.truncation, options.n_max),
                str(exc),
            )
        ]

    return JobResult(name, reports)


def run_audit(
    manager: WorkspaceManager, fixture: str, options: VerifyOptions
) -> JobResult:
    result = JobResult(f"audit {fixture} k={options.k}")

    try:
        result.audits.append(
            normalization_audit(manager.theorem2_fixture(fixture), options.k)
        )
    except (error.UnsupportedError, error.DepthError) as exc:
        log.warning("run_audit: %s unsupported: %s", fixture, exc)
        result.reports.append(
            ComparisonReport.unsupported("audit", fixture, 1, str(exc))
        )

    return result


def job_options(job: JobModel, defaults: VerifyOptions) -> VerifyOptions:
    """Per-job settings override the command line defaults."""
    return replace(
        defaults,
        k=defaults.k if job.k is None else job.k,
        truncation=(
            defaults.truncation if job.truncation is None else job.truncation
        ),
        n_max=defaults.n_max if job.n_max is None else job.n_max,
        shift=defaults.shift if job.shift is None else Shift(job.shift),
        mode=defaults.mode if job.mode is None else Mode(job.mode),
    )


def run_job(
    manager: WorkspaceManager, job: JobModel, defaults: VerifyOptions
) -> JobResult:
    options = job_options(job, defaults)

    if options.k < 0:
        raise error.WorkspaceError(f"order k={options.k} is negative", job.name)

    if job.theorem == "1":
        result = run_theorem1(manager, job.fixture, options)
    elif job.theorem == "2":
        result = run_theorem2(manager, job.fixture, options)
    else:
        result = run_audit(manager, job.fixture, options)

    result.name = job.name
    log.info("run_job: %s %s", job.name, result.verdict.value)

    return result


def run_jobs(
    manager: WorkspaceManager,
    jobs: Sequence[JobModel],
    defaults: VerifyOptions,
    workers: int = 1,
) -> List[JobResult]:
    """Run jobs, concurrently if asked; results keep the declared order."""
    if workers <= 1 or len(jobs) <= 1:
        return [run_job(manager, job, defaults) for job in jobs]

    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(
            executor.map(lambda job: run_job(manager, job, defaults), jobs)
        )


def exit_code(results: Sequence[JobResult]) -> int:
    verdicts = {result.verdict for result in results}

    if Verdict.MISMATCH in verdicts:
        return EXIT_MISMATCH
    if Verdict.UNSUPPORTED in verdicts:
        return EXIT_UNSUPPORTED
    return EXIT_OK


CSV_HEADER = ("job", "equation", "fixture", "degree", "lhs", "rhs", "status")


def _csv_rows(result: JobResult) -> List[List[str]]:
    rows: List[List[str]] = []

    for report in result.reports:
        if report.reason is not None:
            rows.append(
                [result.name, report.equation, report.fixture]
                + ["", "", "", Verdict.UNSUPPORTED.value]
            )
            continue

        for row in report.rows:
            rows.append(
                [
                    result.name,
                    report.equation,
                    report.fixture,
                    str(row.degree),
                    str(row.lhs),
                    str(row.rhs),
                    "equal" if row.equal else "MISMATCH",
                ]
            )

    for audit in result.audits:
        for convention, value, passes in (
            ("literal", audit.literal, audit.literal_passes),
            ("reduced", audit.reduced, audit.reduced_passes),
        ):
            rows.append(
                [
                    result.name,
                    f"audit-{convention}",
                    audit.fixture,
                    "1",
                    str(audit.lhs),
                    str(value),
                    "equal" if passes else "MISMATCH",
                ]
            )

    return rows


def render_results(
    results: Sequence[JobResult], output_format: Format = Format.TEXT
) -> str:
    """The job reports as text blocks, or as one CSV table with a header."""
    if Format(output_format) is Format.TEXT:
        return "\n".join(result.to_text() for result in results)

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)

    for result in results:
        writer.writerows(_csv_rows(result))

    return buffer.getvalue().rstrip("\n")
