"""
Command-line entry point.

    local-reciprocity tate --group cyclic:4 --module trivial:Z --range -2..2
    local-reciprocity herbrand --group cyclic:6 --module trivial:Z
    local-reciprocity reciprocity 2 2 3
    local-reciprocity suite identities

Exit codes: 0 when every check passed, 1 for failed checks or unexpected
errors, 2 for usage and spec errors, 3 when a size cap is hit, 4 when a
cyclic group was required.
"""

import json
import logging
import time

import click

from local_reciprocity.cohomology.coh_group import group_of
from local_reciprocity.cohomology.herbrand import herbrand
from local_reciprocity.datatype.report import Report
from local_reciprocity.localfield.reciprocity import reciprocity_check
from local_reciprocity.localfield.tower import build_tower
from local_reciprocity.module_spec import parse_group, parse_module, parse_range
from local_reciprocity.suites import SUITES, run_suite
from local_reciprocity.utils.config import Config
from local_reciprocity.utils.errors import (
    DegreeOutOfRange,
    FieldCapExceeded,
    InvalidGroup,
    InvalidModule,
    NotCyclic,
    SizeCapExceeded,
)
from local_reciprocity.utils.log import Log

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_NOT_CYCLIC = 4

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class Runner:
    """Runs one command at a time and turns its Report or error into output and an exit code."""

    output_format = "text"
    seed = None
    timing = False
    workers = 1
    _instance = None

    def __init__(self):
        raise RuntimeError("Call instance() instead")

    @classmethod
    def instance(cls):
        if cls._instance is None:
            cls._instance = cls.__new__(cls)
        return cls._instance

    def configure(self, output_format: str, seed, timing: bool, workers: int):
        self.output_format = output_format
        self.seed = seed
        self.timing = timing
        self.workers = workers

    def emit(self, report: Report):
        if self.output_format == "json":
            click.echo(json.dumps(report.serialize(), sort_keys=True, indent=4))
        else:
            click.echo(report.to_text())

    def execute(self, command: str, build) -> int:
        """Call build() for a Report, print it and return the exit code."""
        start = time.perf_counter()
        try:
            Log.log_information("Runner", f"{command} started")
            report = build()
            if self.timing:
                report.timing = time.perf_counter() - start
            self.emit(report)
            return EXIT_OK if report.passed else EXIT_FAILED
        except (InvalidGroup, InvalidModule, DegreeOutOfRange) as ex:
            click.echo(f"Error: {ex}", err=True)
            return EXIT_USAGE
        except (SizeCapExceeded, FieldCapExceeded) as ex:
            Log.log_information("Runner", f"{command} hit a size cap: {ex}", is_an_error=True)
            click.echo(f"Error: {ex}", err=True)
            return EXIT_CAP
        except NotCyclic as ex:
            click.echo(f"Error: {ex}", err=True)
            return EXIT_NOT_CYCLIC
        except ValueError as ex:
            click.echo(f"Error: {ex}", err=True)
            return EXIT_USAGE
        except Exception as ex:
            Log.log_information("Runner", f"Critical error in {command}: {ex!r}", is_an_error=True)
            logging.exception("Unexpected failure")
            click.echo(f"Error: {ex}", err=True)
            return EXIT_FAILED
        finally:
            Log.log_information("Runner", f"{command} finished in {time.perf_counter() - start:.3f}s")


def _range_option(ctx, param, value):
    try:
        return parse_range(value)
    except ValueError as ex:
        raise click.BadParameter(str(ex)) from ex


@click.group()
@click.option("--format", "output_format", type=click.Choice(["text", "json"]), default="text",
              show_default=True, help="Output format.")
@click.option("--seed", type=int, default=None, help="Seed for randomized checks.")
@click.option("--timing", is_flag=True, help="Report the wall-clock time of the command.")
@click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), default="WARNING",
              show_default=True)
@click.option("--log-file", type=click.Path(dir_okay=False), default=None,
              help="Write the log here instead of stderr.")
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True,
              help="Threads used by suites.")
def cli(output_format, seed, timing, log_level, log_file, workers):
    """Exact group cohomology and unramified local reciprocity."""
    Log.init(log_level, log_file)
    try:
        config = Config.reload()
    except ValueError as ex:
        raise click.UsageError(str(ex)) from ex
    Runner.instance().configure(output_format, config.default_seed if seed is None else seed,
                                timing, workers)


@click.command()
@click.option("--group", "group_spec", required=True, help="cyclic:n, klein, s3 or trivial.")
@click.option("--module", "module_spec", required=True,
              help="trivial:Z, trivial:Z/k, groupring, ig, jg, ffunits:p^f or ltrunc:p,f,N.")
@click.option("--range", "degrees", default="-2..2", show_default=True, callback=_range_option,
              help="Degrees r or lo..hi.")
@click.option("--kind", type=click.Choice(["tate", "cohomology", "homology"]), default="tate",
              show_default=True)
@click.pass_context
def tate(ctx, group_spec, module_spec, degrees, kind):
    """Invariant factors of H^r(G, M) over a range of degrees."""

    def build():
        group = parse_group(group_spec)
        module = parse_module(module_spec, group)
        report = Report(kind, {"group": group_spec, "module": module_spec,
                               "range": [degrees.start, degrees.stop - 1]})
        report.results["groups"] = {str(r): group_of(kind, module, r).serialize() for r in degrees}
        return report

    ctx.exit(Runner.instance().execute(kind, build))


@click.command()
@click.option("--group", "group_spec", required=True)
@click.option("--module", "module_spec", required=True)
@click.pass_context
def herbrand_command(ctx, group_spec, module_spec):
    """h(M) = |H_T^0| / |H_T^1| over a cyclic group."""

    def build():
        module = parse_module(module_spec, parse_group(group_spec))
        report = Report("herbrand", {"group": group_spec, "module": module_spec})
        h = herbrand(module)
        report.results["h"] = str(h)
        report.results["h0"] = group_of("tate", module, 0).serialize()["factors"]
        report.results["h1"] = group_of("tate", module, 1).serialize()["factors"]
        return report

    ctx.exit(Runner.instance().execute("herbrand", build))


@click.command()
@click.argument("p", type=int)
@click.argument("f", type=int)
@click.argument("n", type=int)
@click.pass_context
def reciprocity(ctx, p, f, n):
    """Run the unramified reciprocity pipeline on the tower of degree F over Q_P mod P^N."""
    runner = Runner.instance()
    ctx.exit(runner.execute("reciprocity", lambda: reciprocity_check(build_tower(p, f, n), runner.seed)))


@click.command()
@click.argument("name", type=click.Choice(sorted(SUITES)))
@click.pass_context
def suite(ctx, name):
    """Run a batch of checks."""
    runner = Runner.instance()
    ctx.exit(runner.execute(f"suite {name}", lambda: run_suite(name, runner.seed, runner.workers)))


cli.add_command(tate)
cli.add_command(tate, name="cohomology")
cli.add_command(herbrand_command, name="herbrand")
cli.add_command(reciprocity)
cli.add_command(suite)


def main():
    cli(prog_name="local-reciprocity")


if __name__ == "__main__":
    main()
