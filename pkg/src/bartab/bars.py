"""Bar removals on shifted diagrams, bar tableaux, and shifted rank.

A shifted diagram indents row i by i-1 cells.  An odd number r of cells can
leave the diagram in three ways: as the trailing r cells of one row (type 1,
the shortened part is reinserted where it keeps the parts strictly
decreasing), as one whole row of length r (type 2), or as two whole rows
whose lengths add up to r (type 3).  A bar tableau records a chain of such
removals from a shape down to the empty shape; reading the chain backwards
and labelling the cells of the k-th removal (out of m) with m-k+1 gives the
equivalent picture of a filling of the diagram.  Each removal carries a
signed power of two; the product over a tableau is its weight.

Row indices in this module are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .partitions import Partition, StrictPartition, parity


@dataclass(frozen=True)
class RemovalSets:
    """Rows of a shape admitting an r-bar, split by bar type.

    i_plus maps each type-1 row to the position its shortened part lands
    at, i_zero holds the row whose part equals the bar size when there is
    one, and i_minus maps each type-3 row to the lower partner row removed
    with it.  The three sets are pairwise disjoint.
    """

    i_plus: dict[int, int]
    i_zero: frozenset[int]
    i_minus: dict[int, int]

    def rows(self) -> tuple[int, ...]:
        return tuple(sorted([*self.i_plus, *self.i_zero, *self.i_minus]))

    def __contains__(self, i: int) -> bool:
        return i in self.i_plus or i in self.i_zero or i in self.i_minus

    def bar_type(self, i: int) -> int:
        if i in self.i_plus:
            return 1
        if i in self.i_zero:
            return 2
        if i in self.i_minus:
            return 3
        raise KeyError(i)


@dataclass(frozen=True)
class BarRemoval:
    """One removal step: the row, the bar size, and how the bar sits.

    partner is the insertion position for type 1, None for type 2, and the
    partner row for type 3.  coefficient is the signed power of two the
    step contributes to a tableau weight.
    """

    row: int
    size: int
    bar_type: int
    partner: int | None
    coefficient: int


@dataclass(frozen=True)
class TableauWeight:
    sign: int
    two_power: int

    @property
    def value(self) -> int:
        return self.sign * 2**self.two_power


@dataclass(frozen=True)
class BarTableau:
    """A removal chain from a shape down to the empty shape.

    chain lists the intermediate shapes (one more entry than steps); the
    k-th step, 0-based, removes a bar from chain[k] leaving chain[k+1] and
    is labelled bar_count - k in the filling picture.
    """

    chain: tuple[StrictPartition, ...]
    steps: tuple[BarRemoval, ...]

    @property
    def shape(self) -> StrictPartition:
        return self.chain[0]

    @property
    def bar_count(self) -> int:
        return len(self.steps)

    def label(self, k: int) -> int:
        return len(self.steps) - k

    def bar_sizes(self) -> tuple[int, ...]:
        return tuple(sorted((s.size for s in self.steps), reverse=True))

    def to_grid(self) -> list[list[int]]:
        """Labels of every cell of the original diagram, row by row.

        Rows only ever lose trailing cells, so the cells of a live row are
        always a prefix of the original row.  The live rows are kept sorted
        by decreasing length to mirror the chain's shapes, remembering
        which original row each came from.
        """
        m = len(self.steps)
        grid = [[0] * p for p in self.shape.parts]
        live = [(p, idx) for idx, p in enumerate(self.shape.parts)]
        for k, step in enumerate(self.steps):
            lab = m - k
            if step.bar_type == 1:
                length, orig = live[step.row - 1]
                for c in range(length - step.size, length):
                    grid[orig][c] = lab
                live[step.row - 1] = (length - step.size, orig)
                live.sort(key=lambda t: -t[0])
            elif step.bar_type == 2:
                length, orig = live.pop(step.row - 1)
                for c in range(length):
                    grid[orig][c] = lab
            else:
                for idx in sorted((step.row, step.partner), reverse=True):
                    length, orig = live.pop(idx - 1)
                    for c in range(length):
                        grid[orig][c] = lab
        return grid


def removal_sets(shape: StrictPartition, r: int) -> RemovalSets:
    """Classify every row of shape against an r-bar removal; r must be odd."""
    if r < 1 or r % 2 == 0:
        raise ValueError(f"bar size must be odd and positive, got {r}")
    parts = shape.parts
    part_set = set(parts)
    i_plus: dict[int, int] = {}
    i_zero = set()
    i_minus: dict[int, int] = {}
    for i, part in enumerate(parts, start=1):
        left = part - r
        if left > 0 and left not in part_set:
            # insertion position: the last row whose part still exceeds the rest
            i_plus[i] = sum(1 for q in parts if q > left)
        elif left == 0:
            i_zero.add(i)
        elif left < 0 and (r - part) in part_set:
            j = parts.index(r - part) + 1
            if j > i:
                i_minus[i] = j
    return RemovalSets(i_plus, frozenset(i_zero), i_minus)


def legal_removals(shape: StrictPartition, r: int) -> list[tuple[BarRemoval, StrictPartition]]:
    """Every r-bar removal from shape with its resulting shape, in row order."""
    sets = removal_sets(shape, r)
    eps = parity(shape)
    length = len(shape)
    parts = shape.parts
    out = []
    for i in sets.rows():
        if i in sets.i_plus:
            j = sets.i_plus[i]
            coeff = (-1) ** (j - i) * 2 ** (1 - eps)
            rest = tuple(sorted(parts[: i - 1] + parts[i:] + (parts[i - 1] - r,), reverse=True))
            removal = BarRemoval(row=i, size=r, bar_type=1, partner=j, coefficient=coeff)
        elif i in sets.i_zero:
            coeff = (-1) ** (length - i)
            rest = parts[: i - 1] + parts[i:]
            removal = BarRemoval(row=i, size=r, bar_type=2, partner=None, coefficient=coeff)
        else:
            j = sets.i_minus[i]
            coeff = (-1) ** (j - i + parts[i - 1]) * 2 ** (1 - eps)
            rest = tuple(p for k, p in enumerate(parts, start=1) if k != i and k != j)
            removal = BarRemoval(row=i, size=r, bar_type=3, partner=j, coefficient=coeff)
        out.append((removal, StrictPartition(rest)))
    return out


def remove_bar(shape: StrictPartition, i: int, r: int) -> StrictPartition:
    """The shape left after removing the r-bar at row i; the removal must be legal."""
    for removal, result in legal_removals(shape, r):
        if removal.row == i:
            return result
    raise ValueError(f"no legal {r}-bar at row {i} of shape {shape}")


def morris_coefficient(shape: StrictPartition, i: int, r: int) -> int:
    """Signed power of two attached to the r-bar removal at row i."""
    for removal, _ in legal_removals(shape, r):
        if removal.row == i:
            return removal.coefficient
    raise ValueError(f"no legal {r}-bar at row {i} of shape {shape}")


def tableau_weight(t: BarTableau) -> TableauWeight:
    sign = 1
    twos = 0
    for s in t.steps:
        if s.coefficient < 0:
            sign = -sign
        if abs(s.coefficient) == 2:
            twos += 1
    return TableauWeight(sign, twos)


def enumerate_bar_tableaux(
    shape: StrictPartition, pi: Partition, order: tuple[int, ...] | None = None
) -> list[BarTableau]:
    """All bar tableaux of shape whose bar sizes are the parts of pi.

    Bars are removed largest part first (biggest label first); pass order
    to remove the parts in another sequence.  The signed sum of tableau
    weights over the result does not depend on the order chosen.
    """
    if pi.weight != shape.weight:
        raise ValueError(f"type weight {pi.weight} differs from shape weight {shape.weight}")
    if any(p % 2 == 0 for p in pi.parts):
        raise ValueError(f"bar sizes must all be odd: {pi}")
    if order is None:
        sizes = pi.parts
    else:
        sizes = tuple(order)
        if tuple(sorted(sizes, reverse=True)) != pi.parts:
            raise ValueError("order must rearrange the parts of pi")
    out: list[BarTableau] = []

    def descend(cur: StrictPartition, k: int, chain, steps):
        if k == len(sizes):
            out.append(BarTableau(chain, steps))
            return
        for removal, child in legal_removals(cur, sizes[k]):
            descend(child, k + 1, chain + (child,), steps + (removal,))

    descend(shape, 0, (shape,), ())
    return out


def signed_weight_sum(tableaux: list[BarTableau]) -> int:
    return sum(tableau_weight(t).value for t in tableaux)


def srank_formula(shape: StrictPartition) -> int:
    """Shifted rank: max(o, e + (length mod 2)) over odd and even row counts."""
    o = sum(1 for p in shape.parts if p % 2 == 1)
    e = len(shape) - o
    return max(o, e + len(shape) % 2)


@cache
def _shortest_chain(parts: tuple[int, ...]) -> int:
    if not parts:
        return 0
    shape = StrictPartition(parts)
    top = parts[0] + (parts[1] if len(parts) > 1 else 0)
    best = None
    for r in range(top if top % 2 == 1 else top - 1, 0, -2):
        for _, child in legal_removals(shape, r):
            depth = 1 + _shortest_chain(child.parts)
            if best is None or depth < best:
                best = depth
    return best


def srank_bruteforce(shape: StrictPartition) -> int:
    """Minimum number of bars over every removal chain, by exhaustive search.

    Shares nothing with srank_formula; the two are compared in tests.
    """
    return _shortest_chain(shape.parts)


def minimal_tableaux(shape: StrictPartition) -> list[BarTableau]:
    """All bar tableaux of shape with the minimum number of bars.

    Any child shape satisfies srank(child) >= srank(shape) - 1, so a chain
    stays minimal exactly when every step drops the search rank by one.
    """
    out: list[BarTableau] = []

    def descend(cur: StrictPartition, left: int, chain, steps):
        if not cur.parts:
            out.append(BarTableau(chain, steps))
            return
        top = cur.parts[0] + (cur.parts[1] if len(cur) > 1 else 0)
        for r in range(top if top % 2 == 1 else top - 1, 0, -2):
            for removal, child in legal_removals(cur, r):
                if _shortest_chain(child.parts) == left - 1:
                    descend(child, left - 1, chain + (child,), steps + (removal,))

    descend(shape, _shortest_chain(shape.parts), (shape,), ())
    return out


def even_boundary_free(t: BarTableau) -> bool:
    """True when no label change in any row happens an even number of cells in."""
    for row in t.to_grid():
        for c in range(1, len(row)):
            if row[c] != row[c - 1] and c % 2 == 0:
                return False
    return True


def _runs(row: list[int]) -> list[int]:
    lengths: list[int] = []
    for c, lab in enumerate(row):
        if c > 0 and lab == row[c - 1]:
            lengths[-1] += 1
        else:
            lengths.append(1)
    return lengths


def lemma2_structure(t: BarTableau) -> bool:
    """Row shape forced on tableaux without even boundaries.

    Odd rows carry a single label; even rows carry one label, or exactly
    two labels each filling an odd number of cells.  Labels increase
    weakly along a row, so each label is one contiguous run.
    """
    for row in t.to_grid():
        runs = _runs(row)
        if len(row) % 2 == 1:
            if len(runs) != 1:
                return False
        elif len(runs) != 1 and not (len(runs) == 2 and all(x % 2 == 1 for x in runs)):
            return False
    return True


def tableau_to_lines(t: BarTableau) -> list[str]:
    """One line per step: label, size, row, type, and partner when present."""
    m = len(t.steps)
    lines = []
    for k, s in enumerate(t.steps):
        fields = [m - k, s.size, s.row, s.bar_type]
        if s.partner is not None:
            fields.append(s.partner)
        lines.append(" ".join(str(x) for x in fields))
    return lines


def tableau_from_lines(shape: StrictPartition, lines: list[str]) -> BarTableau:
    """Rebuild a tableau by replaying serialized steps against shape.

    Every step is validated against the legal removals of the shape it
    applies to; labels must count down from the number of steps to 1.
    """
    cur = shape
    chain = (shape,)
    steps: tuple[BarRemoval, ...] = ()
    records = []
    for line in lines:
        fields = [int(tok) for tok in line.split()]
        if len(fields) not in (4, 5):
            raise ValueError(f"malformed tableau line {line!r}")
        records.append(fields)
    m = len(records)
    for k, fields in enumerate(records):
        label, size, row, bar_type = fields[:4]
        partner = fields[4] if len(fields) == 5 else None
        if label != m - k:
            raise ValueError(f"expected label {m - k}, got {label}")
        for removal, child in legal_removals(cur, size):
            if removal.row == row:
                if removal.bar_type != bar_type or removal.partner != partner:
                    raise ValueError(f"step {line!r} does not match the legal removal {removal}")
                cur = child
                chain += (child,)
                steps += (removal,)
                break
        else:
            raise ValueError(f"no legal {size}-bar at row {row} of {cur}")
    if cur.parts:
        raise ValueError(f"steps stop at {cur}, not at the empty shape")
    return BarTableau(chain, steps)


def render_grid(t: BarTableau) -> str:
    """Shifted diagram of the tableau with one label per cell."""
    grid = t.to_grid()
    if not grid:
        return "(empty)"
    width = max(len(str(lab)) for row in grid for lab in row)
    lines = []
    for i, row in enumerate(grid):
        indent = " " * ((width + 1) * i)
        lines.append(indent + " ".join(str(lab).rjust(width) for lab in row))
    return "\n".join(lines)
