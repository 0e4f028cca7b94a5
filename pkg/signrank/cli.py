"""CLI interface for the signrank toolkit.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error,
3 inconclusive (an Inconclusive verdict or a window that needs refinement).
"""

from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional

import typer
from rich.console import Console
from rich.table import Table

from signrank import rationalizer
from signrank import serialization as codec
from signrank.core.errors import SerializationError, SignRankError
from signrank.core.logging import configure_logging
from signrank.core.models import CommandOutcome, SearchBudget
from signrank.exactfield import FieldContext
from signrank.exactlinalg import MinrankWitness, NotImproved, minrank_upper_search, triangle_lower_bound, verify_witness
from signrank.incidence import by_name, catalog_names
from signrank.pipeline import PerlesPipeline, default_pipeline
from signrank.realizer import Verdict, coordinatize, recheck_certificate, validate_realization
from signrank.render import render_svg

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

app = typer.Typer(help="Exact sign-pattern minimum-rank toolkit", no_args_is_help=True)
perles_app = typer.Typer(help="Build and verify the nine-point counterexample bundle", no_args_is_help=True)
app.add_typer(perles_app, name="perles")

console = Console()
error_console = Console(stderr=True)


@app.callback()
def _configure(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log every solver step"),
):
    configure_logging("DEBUG" if verbose else None, error_console)


@contextmanager
def _input_errors() -> Iterator[None]:
    """Malformed input, library errors and IO failures all exit with code 2."""
    try:
        yield
    except (SignRankError, OSError, ValueError, KeyError) as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else e
        error_console.print(f"[red]Error: {message}[/red]")
        raise typer.Exit(EXIT_USAGE)


def _finish(outcome: CommandOutcome, as_json: bool) -> None:
    if as_json:
        typer.echo(outcome.model_dump_json(indent=2))
    else:
        style = {EXIT_OK: "green", EXIT_FAILED: "red", EXIT_INCONCLUSIVE: "yellow"}.get(outcome.exit_code, "red")
        console.print(f"[{style}]{outcome.summary}[/{style}]")
        for path in outcome.artifacts_written:
            console.print(f"[dim]wrote {path}[/dim]")
    raise typer.Exit(outcome.exit_code)


# -- perles ------------------------------------------------------------------------

@perles_app.command("build")
def perles_build(
    out: Path = typer.Option(..., "--out", "-o", help="Bundle directory to write"),
    d: Optional[int] = typer.Option(None, "--d", help="Realize over ℚ(√d) (default from settings)"),
    as_json: bool = typer.Option(False, "--json", help="Print the outcome as JSON"),
):
    """Construct, verify and write the counterexample bundle with its figure."""
    with _input_errors():
        pipeline = PerlesPipeline(d=d) if d else default_pipeline
        outcome = pipeline.build(out)
    if not as_json and outcome.exit_code == EXIT_OK:
        table = Table(title="Counterexample bundle")
        table.add_column("Quantity", style="cyan")
        table.add_column("Value", style="green")
        for key, value in sorted(outcome.details.items()):
            table.add_row(key, str(value))
        console.print(table)
    _finish(outcome, as_json)


@perles_app.command("verify")
def perles_verify(
    bundle: Path = typer.Option(..., "--bundle", "-b", help="Bundle directory written by 'perles build'"),
    as_json: bool = typer.Option(False, "--json", help="Print the outcome as JSON"),
):
    """Reload a bundle from disk and recompute every check."""
    with _input_errors():
        outcome = default_pipeline.verify(bundle)
    _finish(outcome, as_json)


# -- realizer ------------------------------------------------------------------------

@app.command()
def realize(
    incidence: Path = typer.Argument(..., help="Incidence-structure JSON"),
    field: str = typer.Option("q", "--field", "-f", help="Target field: q or qsqrt:<d>"),
    out: Path = typer.Option(..., "--out", "-o", help="Certificate JSON to write"),
    as_json: bool = typer.Option(False, "--json", help="Print the outcome as JSON"),
):
    """Decide realizability over ℚ or ℚ(√d) and write a rechecked certificate."""
    with _input_errors():
        structure = codec.decode_structure(codec.read_json(incidence))
        target = FieldContext.parse(field)
        if target.kind == "PolyOver":
            raise SerializationError(f"realize needs q or qsqrt:<d>, got {field}")
        certificate = coordinatize(structure, target)
        rechecked = recheck_certificate(certificate, structure)
        written = codec.write_json(out, codec.encode_certificate(certificate))

    if not rechecked:
        exit_code, summary = EXIT_FAILED, f"{certificate.verdict.value} certificate failed its recheck"
    elif certificate.verdict is Verdict.INCONCLUSIVE:
        exit_code, summary = EXIT_INCONCLUSIVE, f"Inconclusive over {target}: {certificate.reason}"
    else:
        exit_code, summary = EXIT_OK, f"{certificate.verdict.value} over {target}"
    outcome = CommandOutcome(
        exit_code=exit_code,
        artifacts_written=[str(written)],
        summary=summary,
        details={
            "verdict": certificate.verdict.value,
            "field": target.name,
            "frame": "".join(certificate.frame),
            "frames_tried": len(certificate.frames_tried),
            "constraints": [str(p) for p in certificate.constraints],
        },
    )
    _finish(outcome, as_json)


# -- rationalizer ---------------------------------------------------------------------

@app.command()
def rationalize(
    matrix: Path = typer.Argument(..., help="Polynomial (or ratio) matrix JSON over F[α]"),
    lo: str = typer.Option(..., "--lo", help="Window lower end, e.g. 3/2"),
    hi: str = typer.Option(..., "--hi", help="Window upper end, e.g. 8/5"),
    out: Path = typer.Option(..., "--out", "-o", help="Result JSON to write"),
    as_json: bool = typer.Option(False, "--json", help="Print the outcome as JSON"),
):
    """Substitute a rational β from the window, keeping signs and rank."""
    with _input_errors():
        ratios = codec.decode_ratio_matrix(codec.read_json(matrix))
        window = rationalizer.Window.of(lo, hi)
        cleared = rationalizer.clear_denominators(ratios, window)
        result = rationalizer.rationalize(cleared.matrix, window)
        if isinstance(result, rationalizer.NeedsRefinement):
            document = codec.encode_refinement(result)
        else:
            document = {
                "status": "Rationalized",
                "matrix": codec.encode_matrix(result.matrix),
                "multiplier": codec.encode_polynomial(cleared.multiplier),
                "certificate": codec.encode_rationalization(result.certificate),
            }
        written = codec.write_json(out, document)

    if isinstance(result, rationalizer.NeedsRefinement):
        outcome = CommandOutcome(
            exit_code=EXIT_INCONCLUSIVE,
            artifacts_written=[str(written)],
            summary=f"window {window} needs refinement ({result.reason})",
            details={"entries": [list(entry) for entry in result.entries], "reason": result.reason},
        )
    else:
        certificate = result.certificate
        outcome = CommandOutcome(
            exit_code=EXIT_OK,
            artifacts_written=[str(written)],
            summary=f"β = {codec.encode_rational(certificate.beta)}, rank {certificate.rank_before} → {certificate.rank_after}",
            details=document["certificate"],
        )
    _finish(outcome, as_json)


# -- minimum rank ---------------------------------------------------------------------

@app.command()
def minrank(
    pattern: Path = typer.Argument(..., help="Sign-pattern JSON (list of '+-0' rows)"),
    out: Path = typer.Option(..., "--out", "-o", help="Witness JSON to write"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Search seed (default SIGNRANK_SEED)"),
    restarts: Optional[int] = typer.Option(None, "--restarts", help="Random restarts per rank"),
    iterations: Optional[int] = typer.Option(None, "--iterations", help="Alternating passes per restart"),
    entry_bound: Optional[int] = typer.Option(None, "--entry-bound", help="Denominator bound when rounding"),
    max_rank: Optional[int] = typer.Option(None, "--max-rank", help="Highest rank to search"),
    as_json: bool = typer.Option(False, "--json", help="Print the outcome as JSON"),
):
    """Bracket the minimum rank of a sign pattern; exact only when the bounds meet."""
    with _input_errors():
        signs = codec.decode_pattern(codec.read_json(pattern))
        overrides = {
            "restarts": restarts,
            "iterations": iterations,
            "entry_bound": entry_bound,
            "max_rank": max_rank,
        }
        budget = SearchBudget(
            **{
                **SearchBudget.from_settings(seed).model_dump(),
                **{key: value for key, value in overrides.items() if value is not None},
            }
        )
        lower = triangle_lower_bound(signs)
        result = minrank_upper_search(signs, budget)
        witness: MinrankWitness = result.baseline if isinstance(result, NotImproved) else result
        verified = verify_witness(witness)
        exact = witness.rank if witness.rank == lower else None
        document = {
            "status": "NotImproved" if isinstance(result, NotImproved) else "Witness",
            "lower_bound": lower,
            "upper_bound": witness.rank,
            "exact": exact,
            "seed": budget.seed,
            "witness": codec.encode_witness(witness),
        }
        if isinstance(result, NotImproved):
            document["attempted_ranks"] = list(result.attempted_ranks)
        written = codec.write_json(out, document)

    if not as_json:
        console.print(f"lower bound: {lower}")
        console.print(f"upper bound: {witness.rank}")
        if exact is not None:
            console.print(f"exact: {exact}")
    outcome = CommandOutcome(
        exit_code=EXIT_OK if verified else EXIT_FAILED,
        artifacts_written=[str(written)],
        summary=f"{lower} ≤ mr ≤ {witness.rank}" if verified else "witness failed its recheck",
        details={key: document[key] for key in ("status", "lower_bound", "upper_bound", "exact", "seed")},
    )
    _finish(outcome, as_json)


@app.command()
def check(
    artifact: Path = typer.Argument(..., help="Result JSON written by 'minrank' or 'rationalize'"),
    matrix: Optional[Path] = typer.Option(
        None, "--matrix", "-m", help="Input matrix of a rationalization, to recheck its root-free window"
    ),
    as_json: bool = typer.Option(False, "--json", help="Print the outcome as JSON"),
):
    """Recheck a minimum-rank witness or a rationalization without trusting its claims."""
    with _input_errors():
        document = codec.read_json(artifact)
        status = document.get("status") if isinstance(document, dict) else None
        if status in ("Witness", "NotImproved"):
            witness = codec.decode_witness(document["witness"])
            passed = verify_witness(witness)
            details = {"kind": "witness", "rank": witness.rank}
        elif status == "Rationalized":
            certificate = codec.decode_rationalization(document["certificate"])
            evaluated = codec.decode_matrix(document["matrix"])
            source = None
            if matrix is not None:
                ratios = codec.decode_ratio_matrix(codec.read_json(matrix))
                source = rationalizer.clear_denominators(ratios, certificate.window).matrix
            passed = rationalizer.recheck_rationalization(certificate, evaluated, source)
            details = {
                "kind": "rationalization",
                "beta": codec.encode_rational(certificate.beta),
                "window_checked": source is not None,
            }
        else:
            raise SerializationError(f"{artifact} is not a minrank or rationalize result (status {status!r})")

    outcome = CommandOutcome(
        exit_code=EXIT_OK if passed else EXIT_FAILED,
        summary=f"{details['kind']} rechecked" if passed else f"{details['kind']} failed its recheck",
        details=details,
    )
    _finish(outcome, as_json)


# -- presentation ---------------------------------------------------------------------

@app.command()
def render(
    incidence: Path = typer.Argument(..., help="Incidence-structure JSON"),
    realization: Path = typer.Argument(..., help="Realization JSON"),
    out: Path = typer.Option(..., "--out", "-o", help="SVG file to write"),
    size: Optional[int] = typer.Option(None, "--size", help="Figure side in pixels"),
    as_json: bool = typer.Option(False, "--json", help="Print the outcome as JSON"),
):
    """Draw a realization as an SVG figure."""
    with _input_errors():
        structure = codec.decode_structure(codec.read_json(incidence))
        points_and_lines = codec.decode_realization(codec.read_json(realization))
        valid = validate_realization(structure, points_and_lines)
        written = render_svg(structure, points_and_lines, out, size) if valid else None

    if written is None:
        outcome = CommandOutcome(exit_code=EXIT_FAILED, summary="realization does not match the incidence structure")
    else:
        outcome = CommandOutcome(
            exit_code=EXIT_OK,
            artifacts_written=[str(written)],
            summary=f"{len(structure.points)} points, {len(structure.lines)} lines",
        )
    _finish(outcome, as_json)


@app.command()
def catalog(
    name: Optional[str] = typer.Argument(None, help="Structure name; omit to list the catalog"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Incidence JSON to write (default stdout)"),
):
    """Write a classical incidence structure as incidence JSON."""
    if name is None:
        for entry in catalog_names():
            console.print(entry)
        raise typer.Exit(EXIT_OK)
    with _input_errors():
        document = codec.encode_structure(by_name(name))
        if out is not None:
            codec.write_json(out, document)
    if out is None:
        typer.echo(codec.dumps(document), nl=False)
    else:
        console.print(f"[dim]wrote {out}[/dim]")


def main() -> None:
    app()


if __name__ == "__main__":
    main()
