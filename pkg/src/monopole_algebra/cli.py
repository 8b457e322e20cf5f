"""Command line interface.

Every subcommand is a thin client over the service handlers, so CLI output
is numerically identical to the HTTP surface.  Results print as a single
JSON record with deterministic key order (CSV on request for tables).

Half-integers are written as "p" or "p/2" ("3/2", "-1/2", "2"); decimals
are rejected to keep the arithmetic exact.  Use "--" before negative
positional arguments, e.g. wigner3j 1/2 1 1/2 -- -1/2 0 1/2.

Exit codes: 0 success, 1 a verification ran and its pass flag is false,
2 usage or parse error.
"""

from __future__ import annotations

import click

from .errors import DomainError
from .exact_algebra import HalfInt
from .service import handlers
from .service.handlers import OutputRecord


class HalfIntParamType(click.ParamType):
    name = "half-integer"

    def convert(self, value, param, ctx):
        if isinstance(value, HalfInt):
            return value
        try:
            return HalfInt.parse(str(value))
        except DomainError as exc:
            self.fail(str(exc), param, ctx)


HALF_INT = HalfIntParamType()


def _emit(record: OutputRecord) -> None:
    click.echo(record.to_json())
    if not record.passed:
        raise SystemExit(1)


def _run(factory) -> OutputRecord:
    try:
        return factory()
    except DomainError as exc:
        raise click.UsageError(str(exc)) from None


@click.group()
@click.version_option(package_name="monopole-algebra")
def main() -> None:
    """Exact angular algebra for a charge around a magnetic monopole."""


@main.command()
@click.argument("j", type=HALF_INT)
@click.argument("m", type=HALF_INT)
@click.argument("mu", type=HALF_INT)
@click.argument("theta", type=float)
@click.argument("phi", type=float)
def harmonic(j: HalfInt, m: HalfInt, mu: HalfInt, theta: float, phi: float) -> None:
    """Evaluate the monopole harmonic Y_{j m mu} at (theta, phi).

    Prints the complex value, the normalization constant, and the parity
    partner data (mu-negated index, reflected point, constant phase).
    """
    _emit(_run(lambda: handlers.handle_harmonic(j, m, mu, theta, phi)))


@main.command()
@click.argument("j1", type=HALF_INT)
@click.argument("j2", type=HALF_INT)
@click.argument("j3", type=HALF_INT)
@click.argument("m1", type=HALF_INT)
@click.argument("m2", type=HALF_INT)
@click.argument("m3", type=HALF_INT)
def wigner3j(j1, j2, j3, m1, m2, m3) -> None:
    """Exact Wigner 3-j symbol for six half-integer arguments.

    Prints the sign, the exact radicand as a fraction, the float value,
    and a rendering like -√(1/6).
    """
    _emit(_run(lambda: handlers.handle_wigner3j(j1, j2, j3, m1, m2, m3)))


@main.command(name="gauge-check")
@click.option("--samples", type=click.IntRange(min=1), default=100,
              show_default=True, help="Number of random sample points.")
@click.option("--seed", type=int, default=42, show_default=True,
              help="Seed for the splitmix64 point sampler.")
@click.option("--variant", type=click.Choice(["direct", "parity"]),
              default="direct", show_default=True,
              help="Which gauge rotation to verify.")
@click.option("--tolerance", type=float, default=1e-10, show_default=True,
              help="Pass threshold for residuals and coefficient spread.")
def gauge_check(samples: int, seed: int, variant: str, tolerance: float) -> None:
    """Verify the abelianization of the hedgehog potential at random points."""
    _emit(_run(lambda: handlers.handle_gauge_check(samples, seed, variant,
                                                   tolerance)))


@main.command(name="selection-table")
@click.option("--jmax", "j_max", type=HALF_INT, required=True,
              help="Largest total angular momentum tabulated.")
@click.option("--mu", type=HALF_INT, default="1/2", show_default=True,
              help="Charge-monopole product of the states.")
@click.option("--operator", type=click.Choice(["pseudoscalar", "scalar"]),
              default="pseudoscalar", show_default=True,
              help="Charge structure of the dipole operator.")
@click.option("--format", "output_format", type=click.Choice(["json", "csv"]),
              default="json", show_default=True)
@click.option("--ntheta", type=click.IntRange(min=2), default=64, show_default=True)
@click.option("--nphi", type=click.IntRange(min=2), default=64, show_default=True)
def selection_table_command(j_max: HalfInt, mu: HalfInt, operator: str,
                            output_format: str, ntheta: int, nphi: int) -> None:
    """Tabulate dipole transitions with verdicts from two independent routes."""
    record = _run(lambda: handlers.handle_selection_table(j_max, mu, operator,
                                                          ntheta, nphi))
    if output_format == "csv":
        click.echo(handlers.table_record_to_csv(record), nl=False)
    else:
        click.echo(record.to_json())
    if not record.passed:
        raise SystemExit(1)


@main.command()
@click.option("--mu", type=HALF_INT, default="1/2", show_default=True)
@click.option("--jmax", "j_max", type=HALF_INT, default="3/2", show_default=True)
@click.option("--ntheta", type=click.IntRange(min=2), default=64, show_default=True)
@click.option("--nphi", type=click.IntRange(min=2), default=64, show_default=True)
@click.option("--tolerance", type=float, default=1e-9, show_default=True,
              help="Off-diagonal pass threshold; diagonal spread uses a tenth.")
def orthonormality(mu: HalfInt, j_max: HalfInt, ntheta: int, nphi: int,
                   tolerance: float) -> None:
    """Gram matrix of the harmonics with given mu: max off-diagonal and spread."""
    _emit(_run(lambda: handlers.handle_orthonormality(mu, j_max, ntheta, nphi,
                                                      tolerance)))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
