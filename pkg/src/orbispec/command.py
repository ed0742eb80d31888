"""Collection of orbispec's command line entry points that allow you to print
orbifold spectra, verify the Macdonald type equations on workspace fixtures,
expand power structure expressions and audit the shift convention."""

from typing import TYPE_CHECKING, List, Optional, Tuple

import click

from orbispec import error, logger
from orbispec.configuration import Configuration, ConfigurationProvider

if TYPE_CHECKING:
    from orbispec.handler.verify import VerifyOptions
    from orbispec.workspace.manager import WorkspaceManager

log = logger.get_logger(__name__)

_INPUT_ERRORS = (
    error.WorkspaceError,
    error.ElementSyntaxError,
    error.SignatureError,
    error.SeriesError,
    error.EffectivityError,
)


@click.group()
@click.option(
    "--verbose",
    "-v",
    count=True,
    help="Verbosity, passing more heightens the verbosity.",
)
@click.option("--configuration-path", default=None, help="Configuration file.")
def main(verbose: int, configuration_path: Optional[str]) -> None:
    """Lambda-ring power structures and orbifold Hodge spectra."""
    logger.set_verbosity(verbose)

    configuration: Configuration = ConfigurationProvider.get_config()
    # First check if we have a configuration path
    if configuration_path:
        try:
            configuration.load_config_file(configuration_path)
        except (OSError, ValueError) as exc:
            log.error("main: cannot load configuration: %s", exc)
            raise SystemExit(2)

    configuration.load_environment()


def _truncation(value: Optional[int]) -> int:
    configuration = ConfigurationProvider.get_config()
    truncation = configuration.truncation if value is None else value

    if truncation < 1:
        log.error("truncation order %d is not positive", truncation)
        raise SystemExit(2)

    if truncation > configuration.truncation_cap:
        log.error(
            "truncation order %d exceeds the cap %d",
            truncation,
            configuration.truncation_cap,
        )
        raise SystemExit(2)

    return truncation


def _load(path: str) -> "WorkspaceManager":
    from orbispec.workspace.manager import WorkspaceManager

    try:
        return WorkspaceManager.load(path)
    except _INPUT_ERRORS as exc:
        log.error("workspace: %s", exc)
        raise SystemExit(2)


@main.command()
@click.argument("workspace", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--target", required=True, help="Explicit triple, node or hodge block."
)
@click.option(
    "--order", "-k", type=int, default=None, show_default="1", help="Order k."
)
@click.option(
    "--kind",
    type=click.Choice(["hsp", "pair", "triple", "ehd", "poincare"]),
    default="hsp",
    show_default=True,
    help="Which spectrum to print.",
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["csv", "text"]),
    default="csv",
    show_default=True,
    help="Rows of exponent,multiplicity or the canonical element.",
)
def spectrum(
    workspace: str,
    target: str,
    order: Optional[int],
    kind: str,
    output_format: str,
) -> None:
    """Print the order-k spectrum of a workspace target."""
    from orbispec.handler.spectrum import render_spectrum

    configuration = ConfigurationProvider.get_config()
    order = configuration.order if order is None else order

    if order < 0:
        log.error("spectrum: order %d is negative", order)
        raise SystemExit(2)

    manager = _load(workspace)

    try:
        text = render_spectrum(manager, target, order, kind, output_format)
    except error.DepthError as exc:
        log.error("spectrum: %s", exc)
        raise SystemExit(3)
    except _INPUT_ERRORS as exc:
        log.error("spectrum: %s", exc)
        raise SystemExit(2)

    click.echo(text)


def _verify_options(
    k: Optional[int],
    truncation: Optional[int],
    n_max: Optional[int],
    shift: Optional[str],
    mode: Optional[str],
) -> "VerifyOptions":
    from orbispec.algebra.power import Mode
    from orbispec.handler.verify import VerifyOptions
    from orbispec.verify.macdonald import Shift

    configuration = ConfigurationProvider.get_config()
    k = configuration.order if k is None else k

    if k < 0:
        log.error("verify: order k=%d is negative", k)
        raise SystemExit(2)

    return VerifyOptions(
        k=k,
        truncation=_truncation(truncation),
        n_max=configuration.n_max if n_max is None else n_max,
        shift=Shift(configuration.shift if shift is None else shift),
        mode=Mode(configuration.mode if mode is None else mode),
        bound=configuration.wreath_bound,
    )


@main.command()
@click.argument("workspace", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--theorem",
    type=click.Choice(["1", "2"]),
    default=None,
    help="Check one equation instead of running the workspace jobs.",
)
@click.option(
    "--fixture", "fixtures", multiple=True, help="Restrict to these fixtures."
)
@click.option("--k", "k", type=int, default=None, show_default="1")
@click.option("--N", "truncation", type=int, default=None, show_default="6")
@click.option("--n-max", "n_max", type=int, default=None, show_default="3")
@click.option(
    "--shift",
    type=click.Choice(["literal", "reduced", "audit"]),
    default=None,
    show_default="audit",
)
@click.option(
    "--mode",
    type=click.Choice(["substitution", "geometric"]),
    default=None,
    show_default="substitution",
)
@click.option("--workers", type=int, default=None, show_default="1")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "csv"]),
    default="text",
    show_default=True,
    help="Report blocks or one row per degree.",
)
def verify(
    workspace: str,
    theorem: Optional[str],
    fixtures: Tuple[str, ...],
    k: Optional[int],
    truncation: Optional[int],
    n_max: Optional[int],
    shift: Optional[str],
    mode: Optional[str],
    workers: Optional[int],
    output_format: str,
) -> None:
    """Compare both sides of the Macdonald type equations degree by degree."""
    from orbispec.handler.verify import exit_code, render_results, run_jobs
    from orbispec.workspace.models import JobModel

    options = _verify_options(k, truncation, n_max, shift, mode)
    manager = _load(workspace)
    configuration = ConfigurationProvider.get_config()

    jobs: List[JobModel]
    if theorem is None:
        jobs = [
            job
            for job in manager.workspace.jobs
            if not fixtures or job.fixture in fixtures
        ]
    else:
        if fixtures:
            names = list(fixtures)
        elif theorem == "1":
            names = [model.name for model in manager.workspace.hodge]
        else:
            names = manager.theorem2_fixtures()

        jobs = [
            JobModel(
                f"theorem-{theorem} {name}",
                theorem,
                name,
                options.k,
                options.truncation,
                options.n_max,
                options.shift.value,
                options.mode.value,
            )
            for name in names
        ]

    if not jobs:
        log.warning("verify: nothing to verify")
        return

    try:
        results = run_jobs(
            manager,
            jobs,
            options,
            configuration.workers if workers is None else workers,
        )
    except _INPUT_ERRORS as exc:
        log.error("verify: %s", exc)
        raise SystemExit(2)

    click.echo(render_results(results, output_format))

    code = exit_code(results)
    if code:
        raise SystemExit(code)


@main.command()
@click.argument("expression")
@click.option("--N", "truncation", type=int, default=None, show_default="6")
@click.option(
    "--mode",
    type=click.Choice(["substitution", "geometric", "formula"]),
    default=None,
    show_default="substitution",
)
@click.option(
    "--signature",
    default="cyclic",
    show_default=True,
    help="Comma separated coordinate kinds: cyclic, rational, integer.",
)
def expand(
    expression: str,
    truncation: Optional[int],
    mode: Optional[str],
    signature: str,
) -> None:
    """Expand a power structure expression such as "(1-T)^-{1/2}"."""
    from orbispec.handler.expand import expand_expression

    configuration = ConfigurationProvider.get_config()
    order = _truncation(truncation)

    try:
        text = expand_expression(
            expression, order, mode or configuration.mode, signature
        )
    except _INPUT_ERRORS as exc:
        log.error("expand: %s", exc)
        raise SystemExit(2)

    click.echo(text)


@main.command()
@click.argument("workspace", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--fixture", "fixtures", multiple=True, help="Restrict to these fixtures."
)
@click.option("--k", "k", type=int, default=None, show_default="1")
def audit(workspace: str, fixtures: Tuple[str, ...], k: Optional[int]) -> None:
    """Decide the shift convention of the wreath equation from degree one."""
    from orbispec.handler.verify import EXIT_MISMATCH, run_audit

    options = _verify_options(k, None, None, None, None)
    manager = _load(workspace)

    if fixtures:
        names = list(fixtures)
    else:
        names = [model.name for model in manager.workspace.explicit] + [
            model.name
            for model in manager.workspace.nodes
            if model.depth >= options.k
        ]

    failed = False

    for name in names:
        try:
            result = run_audit(manager, name, options)
        except _INPUT_ERRORS as exc:
            log.error("audit: %s", exc)
            raise SystemExit(2)

        for report in result.audits:
            click.echo(report.to_text())
            failed = failed or report.winner == "none"
        for report in result.reports:
            click.echo(report.to_text())

    if failed:
        raise SystemExit(EXIT_MISMATCH)
