"""Irreducible negative (spin) characters of the symmetric group.

Characters are indexed by strict partitions.  On classes whose cycle type
has all parts odd the value is an integer, computed by the branching
recurrence over bar removals: peel the largest part r of the class as an
r-bar in every legal way and sum the children with their signed
power-of-two coefficients.  Every other class is settled without
recursion: the value is zero except on the class of the indexing shape
itself, where an odd shape takes a surd value whose sign depends on the
choice of associate character and is left indeterminate here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import records
from .bars import legal_removals, srank_formula
from .partitions import (
    Partition,
    StrictPartition,
    format_partition,
    generate_partitions,
    parity,
    parse_partition,
    parse_strict_partition,
)


@dataclass(frozen=True)
class SpinCharacterValue:
    """A character value: an exact integer, a known zero, or a signed surd.

    A surd is sign * i**i_power * sqrt(radicand) with an exact rational
    radicand; sign is "plus", "minus", or "indeterminate".
    """

    kind: str
    int_value: int | None = None
    i_power: int | None = None
    radicand: Fraction | None = None
    sign: str | None = None

    @classmethod
    def integer(cls, v: int) -> "SpinCharacterValue":
        return cls("integer", int_value=int(v))

    @classmethod
    def zero(cls) -> "SpinCharacterValue":
        return cls("zero")

    @classmethod
    def surd(cls, i_power: int, radicand: Fraction, sign: str = "indeterminate") -> "SpinCharacterValue":
        if sign not in ("plus", "minus", "indeterminate"):
            raise ValueError(f"bad sign {sign!r}")
        return cls("surd", i_power=i_power % 4, radicand=Fraction(radicand), sign=sign)

    def render(self, machine: bool = False) -> str:
        if self.kind == "integer":
            return str(self.int_value)
        if self.kind == "zero":
            return "0"
        mark = {"plus": "+", "minus": "-", "indeterminate": "±"}[self.sign]
        if machine:
            return f"{mark} i^{self.i_power} sqrt({self.radicand.numerator}/{self.radicand.denominator})"
        rad = str(self.radicand) if self.radicand.denominator > 1 else str(self.radicand.numerator)
        return f"{mark}i^{self.i_power}√{rad}"


_SURD_RE = re.compile(r"^([+\-±]) i\^(\d) sqrt\((\d+)/(\d+)\)$")


def _parse_value(kind: str, text: str) -> SpinCharacterValue:
    if kind == "integer":
        return SpinCharacterValue.integer(int(text))
    if kind == "zero":
        return SpinCharacterValue.zero()
    if kind == "surd":
        m = _SURD_RE.match(text)
        if not m:
            raise ValueError(f"malformed surd {text!r}")
        sign = {"+": "plus", "-": "minus", "±": "indeterminate"}[m.group(1)]
        return SpinCharacterValue.surd(int(m.group(2)), Fraction(int(m.group(3)), int(m.group(4))), sign)
    raise ValueError(f"unknown value kind {kind!r}")


def _all_parts_odd(pi: Partition) -> bool:
    return all(p % 2 == 1 for p in pi.parts)


def _branch(lam_parts, pi_parts, recurse) -> int:
    r, rest = pi_parts[0], pi_parts[1:]
    total = 0
    for removal, child in legal_removals(StrictPartition(lam_parts), r):
        total += removal.coefficient * recurse(child.parts, rest)
    return total


@lru_cache(maxsize=None)
def _character_cached(lam_parts: tuple[int, ...], pi_parts: tuple[int, ...]) -> int:
    if not pi_parts:
        return 1
    return _branch(lam_parts, pi_parts, _character_cached)


def _character_uncached(lam_parts: tuple[int, ...], pi_parts: tuple[int, ...]) -> int:
    if not pi_parts:
        return 1
    return _branch(lam_parts, pi_parts, _character_uncached)


def character(shape: StrictPartition, pi: Partition) -> int:
    """Exact character value on the class pi; every part of pi must be odd."""
    if shape.weight != pi.weight:
        raise ValueError(f"weight mismatch: |{shape}| = {shape.weight} but |{pi}| = {pi.weight}")
    if not _all_parts_odd(pi):
        raise ValueError(f"class {pi} has an even part; see schur_vanishing and schur_special")
    return _character_cached(shape.parts, pi.parts)


def schur_vanishing(shape: StrictPartition, pi: Partition) -> str:
    """"zero" when the value is forced to vanish, else "not-determined".

    A class with an even part forces zero unless the shape is odd and the
    class equals the shape itself.
    """
    if shape.weight != pi.weight:
        raise ValueError(f"weight mismatch: |{shape}| = {shape.weight} but |{pi}| = {pi.weight}")
    if _all_parts_odd(pi):
        return "not-determined"
    if parity(shape) == 1 and pi == shape:
        return "not-determined"
    return "zero"


def schur_special(shape: StrictPartition) -> SpinCharacterValue:
    """Surd value of an odd shape on its own class, with indeterminate sign."""
    if parity(shape) == 0:
        raise ValueError(f"special value needs an odd shape, {shape} is even")
    n, length = shape.weight, len(shape)
    assert (n - length + 1) % 2 == 0
    product = 1
    for p in shape.parts:
        product *= p
    return SpinCharacterValue.surd((n - length + 1) // 2, Fraction(product, 2))


def spin_character_value(shape: StrictPartition, pi: Partition) -> SpinCharacterValue:
    """Value on any class: integer on all-odd classes, else zero or a surd."""
    if _all_parts_odd(pi):
        return SpinCharacterValue.integer(character(shape, pi))
    if schur_vanishing(shape, pi) == "zero":
        return SpinCharacterValue.zero()
    return schur_special(shape)


@dataclass(frozen=True)
class CharacterTable:
    """Integer character values at weight n, plus the surd special column.

    Rows are the strict partitions of n and columns the all-odd classes,
    both in reverse-lexicographic order.  Odd shapes additionally carry
    the surd value on their own class.
    """

    n: int
    shapes: tuple[StrictPartition, ...]
    classes: tuple[Partition, ...]
    values: dict[tuple[StrictPartition, Partition], int]
    specials: dict[StrictPartition, SpinCharacterValue]

    def value(self, shape: StrictPartition, cls: Partition) -> int:
        return self.values[(shape, cls)]

    def special(self, shape: StrictPartition) -> SpinCharacterValue | None:
        return self.specials.get(shape)

    def to_text(self) -> str:
        head = ["shape \\ class"] + [format_partition(c) for c in self.classes] + ["shape-class"]
        rows = [head]
        for lam in self.shapes:
            cells = [format_partition(lam)]
            cells += [str(self.values[(lam, c)]) for c in self.classes]
            sp = self.specials.get(lam)
            cells.append(sp.render() if sp else "")
            rows.append(cells)
        widths = [max(len(row[c]) for row in rows) for c in range(len(head))]
        lines = [f"spin character table n={self.n}"]
        for row in rows:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        return "\n".join(lines) + "\n"

    def to_records(self) -> str:
        lines = []
        for lam in self.shapes:
            for cls in self.classes:
                value = SpinCharacterValue.integer(self.values[(lam, cls)])
                lines.append(
                    "\t".join(
                        [str(self.n), format_partition(lam), format_partition(cls), "integer", value.render(machine=True)]
                    )
                )
            sp = self.specials.get(lam)
            if sp is not None:
                lines.append(
                    "\t".join(
                        [str(self.n), format_partition(lam), format_partition(lam), "surd", sp.render(machine=True)]
                    )
                )
        return records.document(f"spin character table n={self.n}", lines)

    @staticmethod
    def from_records(text: str) -> "CharacterTable":
        """Parse and validate a record document into a complete table.

        Every record must carry matching weights, and together the records
        must cover every (shape, class) cell exactly once.
        """
        values: dict[tuple[StrictPartition, Partition], int] = {}
        specials: dict[StrictPartition, SpinCharacterValue] = {}
        n = None
        for line in records.body_lines(text):
            fields = line.split("\t")
            if len(fields) != 5:
                raise ValueError(f"malformed record {line!r}")
            rec_n = int(fields[0])
            lam = parse_strict_partition(fields[1])
            cls = parse_partition(fields[2])
            value = _parse_value(fields[3], fields[4])
            if n is None:
                n = rec_n
            elif rec_n != n:
                raise ValueError(f"record weight {rec_n} differs from table weight {n}")
            if lam.weight != n or cls.weight != n:
                raise ValueError(f"record {line!r} has weights off the table weight {n}")
            if value.kind == "surd":
                if cls != lam:
                    raise ValueError(f"surd record {line!r} off the shape class")
                specials[lam] = value
            else:
                values[(lam, cls)] = value.int_value
        if n is None:
            raise ValueError("no records found")
        shapes = tuple(generate_partitions(n, "distinct"))
        classes = tuple(generate_partitions(n, "all-odd"))
        for lam in shapes:
            for cls in classes:
                if (lam, cls) not in values:
                    raise ValueError(f"missing record for shape {lam} class {cls}")
            if parity(lam) == 1 and lam not in specials:
                raise ValueError(f"missing special record for shape {lam}")
        if len(values) != len(shapes) * len(classes):
            raise ValueError("stray records outside the table grid")
        return CharacterTable(n, shapes, classes, values, specials)


def character_table(n: int) -> CharacterTable:
    """Full negative character data at weight n."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    shapes = tuple(generate_partitions(n, "distinct"))
    classes = tuple(generate_partitions(n, "all-odd"))
    values = {(lam, cls): character(lam, cls) for lam in shapes for cls in classes}
    specials = {lam: schur_special(lam) for lam in shapes if parity(lam) == 1}
    return CharacterTable(n, shapes, classes, values, specials)


@dataclass(frozen=True)
class VanishingViolation:
    shape: StrictPartition
    cls: Partition
    value: int


@dataclass(frozen=True)
class VanishingReport:
    n: int
    checked: int
    violations: tuple[VanishingViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def vanishing_corollary_check(n: int) -> VanishingReport:
    """Zero check on every class shorter than the shifted rank of the shape."""
    checked = 0
    bad = []
    classes = generate_partitions(n, "all-odd")
    for lam in generate_partitions(n, "distinct"):
        rank = srank_formula(lam)
        for cls in classes:
            if len(cls) < rank:
                checked += 1
                v = character(lam, cls)
                if v != 0:
                    bad.append(VanishingViolation(lam, cls, v))
    return VanishingReport(n, checked, tuple(bad))
