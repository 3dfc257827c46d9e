"""Command line front end: compute, render, cache, and verify.

All regular output goes to stdout and is byte-for-byte deterministic for a
given invocation; warnings (a rejected cache file, say) go to stderr.
Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from pathlib import Path

import click

from . import bars, qfunctions, records, spin_characters
from .partitions import (
    Partition,
    StrictPartition,
    format_partition,
    generate_partitions,
    parse_partition,
    parse_strict_partition,
)

MAX_TABLE_N = 14

# per-suite default caps on n; beyond these a run needs --allow-slow
SUITE_CAPS = {
    "srank": 12,
    "vanishing": 10,
    "qdegree": 12,
    "lemmas": 10,
    "independence": 9,
}


@dataclass
class RunReport:
    command: str
    inputs: str
    status: str
    details: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    def render(self) -> str:
        lines = [f"{self.command} {self.inputs}"]
        lines.extend(self.details)
        lines.append(f"result: {self.status.upper()}")
        return "\n".join(lines) + "\n"


def _shape_option(text: str) -> StrictPartition:
    try:
        return parse_strict_partition(text)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--shape") from None


def _type_option(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--type") from None


@click.group()
def main():
    """Bar tableaux, shifted rank, spin characters, and Schur Q-functions."""


@main.command()
@click.option("--shape", required=True, metavar="PARTS", help="strict partition, e.g. 9,7,6,3,1")
@click.option("--check", is_flag=True, help="also run the exhaustive search and compare")
def srank(shape: str, check: bool):
    """Shifted rank of a strict partition."""
    lam = _shape_option(shape)
    rank = bars.srank_formula(lam)
    click.echo(f"srank({format_partition(lam)}) = {rank}")
    if check:
        searched = bars.srank_bruteforce(lam)
        if searched == rank:
            click.echo(f"exhaustive search agrees: {searched}")
        else:
            click.echo(f"exhaustive search disagrees: {searched}")
            raise SystemExit(1)


def _emit_tableau(t: bars.BarTableau, index: int, grid: bool):
    w = bars.tableau_weight(t)
    mark = "+" if w.sign > 0 else "-"
    click.echo(f"tableau {index}: weight {mark}2^{w.two_power} = {w.value}")
    body = bars.render_grid(t).splitlines() if grid else bars.tableau_to_lines(t)
    for line in body:
        click.echo(f"  {line}")


@main.command()
@click.option("--shape", required=True, metavar="PARTS")
@click.option("--type", "type_", metavar="PARTS", default=None, help="bar sizes, all odd")
@click.option("--minimal", is_flag=True, help="enumerate tableaux with the fewest bars")
@click.option("--count-only", is_flag=True)
@click.option("--grid", is_flag=True, help="print cell labels instead of step lines")
def tableaux(shape: str, type_: str | None, minimal: bool, count_only: bool, grid: bool):
    """Enumerate bar tableaux of a shape, by type or minimal."""
    lam = _shape_option(shape)
    if minimal == (type_ is not None):
        raise click.UsageError("pass exactly one of --type and --minimal")
    if minimal:
        found = bars.minimal_tableaux(lam)
        bar_count = bars.srank_bruteforce(lam)
        click.echo(f"minimal bar tableaux of shape {format_partition(lam)}: {len(found)} ({bar_count} bars each)")
    else:
        pi = _type_option(type_)
        try:
            found = bars.enumerate_bar_tableaux(lam, pi)
        except ValueError as exc:
            raise click.BadParameter(str(exc), param_hint="--type") from None
        click.echo(f"bar tableaux of shape {format_partition(lam)} type {format_partition(pi)}: {len(found)}")
    if not count_only:
        for k, t in enumerate(found, start=1):
            _emit_tableau(t, k, grid)
        if not minimal:
            click.echo(f"signed weight sum = {bars.signed_weight_sum(found)}")


def _load_or_build_table(n: int, cache_dir: str | None) -> spin_characters.CharacterTable:
    if cache_dir is None:
        return spin_characters.character_table(n)
    path = Path(cache_dir) / f"chartable-n{n}.records"
    if path.exists():
        try:
            table = spin_characters.CharacterTable.from_records(path.read_text())
            if table.n != n:
                raise ValueError(f"cache holds n={table.n}, wanted {n}")
            return table
        except ValueError as exc:
            click.echo(f"ignoring cache {path}: {exc}", err=True)
    table = spin_characters.character_table(n)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(table.to_records())
    return table


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["text", "records"]), default="text", show_default=True)
@click.option(
    "--cache-dir",
    envvar="BARTAB_CACHE_DIR",
    type=click.Path(file_okay=False),
    help="reuse tables stored as record files [env: BARTAB_CACHE_DIR]",
)
@click.option("--allow-slow", is_flag=True, help="lift the size cap")
def chartable(n: int, fmt: str, cache_dir: str | None, allow_slow: bool):
    """Spin character table at weight n."""
    if n < 0:
        raise click.BadParameter("n must be nonnegative", param_hint="--n")
    if n > MAX_TABLE_N and not allow_slow:
        raise click.BadParameter(f"n > {MAX_TABLE_N} needs --allow-slow", param_hint="--n")
    table = _load_or_build_table(n, cache_dir)
    click.echo(table.to_text() if fmt == "text" else table.to_records(), nl=False)


@main.command()
@click.option("--shape", required=True, metavar="PARTS")
@click.option("--format", "fmt", type=click.Choice(["text", "records"]), default="text", show_default=True)
@click.option("--specialize", is_flag=True, help="also print the one-variable specialization")
@click.option("--allow-slow", is_flag=True, help="lift the weight cap")
def qfun(shape: str, fmt: str, specialize: bool, allow_slow: bool):
    """Schur Q-function of a strict partition in the power-sum basis."""
    lam = _shape_option(shape)
    bound = lam.weight if allow_slow else None
    try:
        inductive = qfunctions.q_lambda_inductive(lam, degree_bound=bound)
        expanded = qfunctions.schur_expansion(lam, degree_bound=bound)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--shape") from None
    agree = inductive == expanded
    name = f"Q_{format_partition(lam)}"
    if fmt == "text":
        click.echo(f"{name} = {inductive}")
        click.echo(f"inductive and character routes agree: {'yes' if agree else 'no'}")
        if specialize:
            spec = qfunctions.principal_specialization(inductive)
            rank = bars.srank_formula(lam)
            click.echo(f"{name}(1^t) = {spec}")
            click.echo(
                f"srank = {rank}, t-order = {spec.order()}, "
                f"divisible by t^srank: {'yes' if spec.divisible_by(rank) else 'no'}"
            )
    else:
        lines = [
            "\t".join([format_partition(pi), str(c.numerator), str(c.denominator)])
            for pi, c in inductive.terms()
        ]
        lines.append(f"# routes-agree {'yes' if agree else 'no'}")
        if specialize:
            spec = qfunctions.principal_specialization(inductive)
            lines.append("# specialization 1^t")
            for k in range(spec.degree(), -1, -1):
                c = spec.coefficient(k)
                if c:
                    lines.append("\t".join([f"t^{k}", str(c.numerator), str(c.denominator)]))
        click.echo(records.document(f"power-sum expansion {name}", lines), nl=False)
    if not agree:
        raise SystemExit(1)


def _suite_srank(n_max: int) -> tuple[bool, str]:
    checked = 0
    for n in range(n_max + 1):
        for lam in generate_partitions(n, "distinct"):
            checked += 1
            if bars.srank_formula(lam) != bars.srank_bruteforce(lam):
                return False, f"formula and search disagree at {format_partition(lam)}"
    return True, f"{checked} shapes checked"


def _suite_vanishing(n_max: int) -> tuple[bool, str]:
    checked = 0
    for n in range(n_max + 1):
        report = spin_characters.vanishing_corollary_check(n)
        if not report.ok:
            v = report.violations[0]
            return False, (
                f"nonzero value {v.value} at shape {format_partition(v.shape)} class {format_partition(v.cls)}"
            )
        checked += report.checked
    return True, f"{checked} forced zeros checked"


def _suite_qdegree(n_max: int) -> tuple[bool, str]:
    checked = 0
    for n in range(n_max + 1):
        report = qfunctions.verify_degree_bounds(n)
        for rec in report.records:
            checked += 1
            if not (rec.lower_bound_ok and rec.divisibility_ok and rec.equality):
                return False, (
                    f"shape {format_partition(rec.shape)}: srank {rec.srank}, min degree {rec.min_degree}"
                )
    return True, f"{checked} shapes checked, degree bounds and equality hold"


def _suite_lemmas(n_max: int) -> tuple[bool, str]:
    checked = 0
    for n in range(n_max + 1):
        for lam in generate_partitions(n, "distinct"):
            checked += 1
            minimal = bars.minimal_tableaux(lam)
            free = [t for t in minimal if bars.even_boundary_free(t)]
            if not free:
                return False, f"no boundary-free minimal tableau of {format_partition(lam)}"
            if not all(bars.lemma2_structure(t) for t in free):
                return False, f"row structure violated at {format_partition(lam)}"
    return True, f"{checked} shapes checked"


def _suite_independence(n_max: int) -> tuple[bool, str]:
    checked = 0
    for n in range(n_max + 1):
        classes = generate_partitions(n, "all-odd")
        for lam in generate_partitions(n, "distinct"):
            for cls in classes:
                base = spin_characters.character(lam, cls)
                for r in sorted(set(cls.parts), reverse=True):
                    checked += 1
                    rest_parts = list(cls.parts)
                    rest_parts.remove(r)
                    rest = Partition(rest_parts)
                    total = sum(
                        removal.coefficient * spin_characters.character(child, rest)
                        for removal, child in bars.legal_removals(lam, r)
                    )
                    if total != base:
                        return False, (
                            f"first removal {r} breaks at shape {format_partition(lam)} "
                            f"class {format_partition(cls)}"
                        )
    return True, f"{checked} first-removal choices checked"


_SUITES = {
    "srank": _suite_srank,
    "vanishing": _suite_vanishing,
    "qdegree": _suite_qdegree,
    "lemmas": _suite_lemmas,
    "independence": _suite_independence,
}


@main.command()
@click.option("--n", "n_max", type=int, default=10, show_default=True)
@click.option("--suites", default=",".join(_SUITES), show_default=True, metavar="NAMES")
@click.option("--allow-slow", is_flag=True, help="run past the per-suite caps")
def verify(n_max: int, suites: str, allow_slow: bool):
    """Re-run the library's verification sweeps up to weight n."""
    if n_max < 0:
        raise click.BadParameter("n must be nonnegative", param_hint="--n")
    names = []
    for name in suites.split(","):
        name = name.strip()
        if name not in _SUITES:
            raise click.BadParameter(f"unknown suite {name!r}", param_hint="--suites")
        if name not in names:
            names.append(name)
    started = time.monotonic()
    report = RunReport(command="verify", inputs=f"n<={n_max} suites={','.join(names)}", status="pass")
    for name in names:
        n_eff = n_max if allow_slow else min(n_max, SUITE_CAPS[name])
        ok, detail = _SUITES[name](n_eff)
        report.details.append(f"suite {name}: n<={n_eff}, {detail}: {'PASS' if ok else 'FAIL'}")
        if not ok:
            report.status = "fail"
    report.elapsed = time.monotonic() - started
    click.echo(report.render(), nl=False)
    if report.status != "pass":
        raise SystemExit(1)
