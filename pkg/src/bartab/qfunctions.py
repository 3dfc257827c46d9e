"""Schur Q-functions in the power-sum basis, in exact rational arithmetic.

The building block q_k is a sum of monomial symmetric functions with
power-of-two coefficients; it is converted to the power-sum basis through
the change-of-basis system at its weight.  Two-row functions come from the
alternating q-product formula, and general shapes reduce inductively to
one- and two-row functions.  The same functions also arise from the spin
character table, and both routes are exposed so they can be compared.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .bars import srank_formula
from .partitions import (
    Partition,
    StrictPartition,
    centralizer_order,
    format_partition,
    generate_partitions,
    parity,
)
from .spin_characters import character

# Weight cap on the change-of-basis computation; a guard against runaway
# requests, not a hard mathematical limit.
DEFAULT_DEGREE_BOUND = 14


class PowerSumPolynomial:
    """A finite rational linear combination of power-sum products.

    Terms are keyed by the index partition; multiplying basis elements
    concatenates their parts.  Zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | Iterable | None = None):
        clean: dict[Partition, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                if not isinstance(key, Partition):
                    key = Partition(key)
                c = Fraction(c)
                if key in clean:
                    c += clean[key]
                if c:
                    clean[key] = c
                elif key in clean:
                    del clean[key]
        self._terms = clean

    @classmethod
    def zero(cls) -> "PowerSumPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "PowerSumPolynomial":
        return cls({Partition(): Fraction(1)})

    @classmethod
    def basis(cls, pi) -> "PowerSumPolynomial":
        if not isinstance(pi, Partition):
            pi = Partition(pi)
        return cls({pi: Fraction(1)})

    def coefficient(self, pi) -> Fraction:
        if not isinstance(pi, Partition):
            pi = Partition(pi)
        return self._terms.get(pi, Fraction(0))

    def terms(self) -> list[tuple[Partition, Fraction]]:
        """Term list sorted reverse-lexicographically by index partition."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].parts, reverse=True)

    def support(self) -> list[Partition]:
        return [pi for pi, _ in self.terms()]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, PowerSumPolynomial):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "PowerSumPolynomial":
        return PowerSumPolynomial({pi: -c for pi, c in self._terms.items()})

    def __add__(self, other) -> "PowerSumPolynomial":
        if not isinstance(other, PowerSumPolynomial):
            return NotImplemented
        acc = dict(self._terms)
        for pi, c in other._terms.items():
            acc[pi] = acc.get(pi, Fraction(0)) + c
        return PowerSumPolynomial(acc)

    def __sub__(self, other) -> "PowerSumPolynomial":
        if not isinstance(other, PowerSumPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "PowerSumPolynomial":
        if isinstance(other, PowerSumPolynomial):
            acc: dict[Partition, Fraction] = {}
            for pa, ca in self._terms.items():
                for pb, cb in other._terms.items():
                    key = Partition(sorted(pa.parts + pb.parts, reverse=True))
                    acc[key] = acc.get(key, Fraction(0)) + ca * cb
            return PowerSumPolynomial(acc)
        if isinstance(other, (int, Fraction)):
            return PowerSumPolynomial({pi: c * other for pi, c in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other) -> "PowerSumPolynomial":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for pi, c in self.terms():
            body = str(abs(c)) if not pi.parts else f"{abs(c)} p_{{{format_partition(pi)}}}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"PowerSumPolynomial({self._terms!r})"


class DegreePolynomial:
    """A polynomial in one variable t with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coefficient(self, k: int) -> Fraction:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else Fraction(0)

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def order(self) -> int | None:
        """Lowest power with a nonzero coefficient, None for zero."""
        for k, c in enumerate(self._coeffs):
            if c:
                return k
        return None

    def divisible_by(self, k: int) -> bool:
        """Whether t**k divides the polynomial."""
        order = self.order()
        return order is None or order >= k

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, DegreePolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __add__(self, other) -> "DegreePolynomial":
        if not isinstance(other, DegreePolynomial):
            return NotImplemented
        size = max(len(self._coeffs), len(other._coeffs))
        return DegreePolynomial(self.coefficient(k) + other.coefficient(k) for k in range(size))

    def __mul__(self, other) -> "DegreePolynomial":
        if not isinstance(other, DegreePolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return DegreePolynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return DegreePolynomial(out)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        chunks: list[str] = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if not c:
                continue
            power = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            body = f"{abs(c)} {power}".strip()
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"DegreePolynomial({list(self._coeffs)!r})"


def _bump(poly: dict[tuple[int, ...], int], r: int) -> dict[tuple[int, ...], int]:
    """Multiply a monomial-basis expansion by the power sum of degree r.

    Raising one entry of the exponent multiset by r sends m_nu onto m_mu;
    the multiplicity of the raised value inside mu counts the coinciding
    positions.
    """
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for nu, c in poly.items():
        for a in set(nu) | {0}:
            merged = list(nu)
            if a:
                merged.remove(a)
            merged.append(a + r)
            merged.sort(reverse=True)
            mu = tuple(merged)
            out[mu] += c * merged.count(a + r)
    return dict(out)


@lru_cache(maxsize=None)
def _p_in_m(mu: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Monomial-basis expansion of the power-sum product indexed by mu."""
    poly = {(): 1}
    for r in mu:
        poly = _bump(poly, r)
    return poly


@lru_cache(maxsize=None)
def _m_to_p_table(d: int) -> dict[tuple[int, ...], PowerSumPolynomial]:
    """Power-sum expansions of every monomial function of weight d.

    The p-to-m matrix is triangular in reverse-lexicographic order (the
    support of a power-sum product dominates its index) with nonzero
    diagonal, so one back-substitution pass inverts it exactly.
    """
    table: dict[tuple[int, ...], PowerSumPolynomial] = {}
    for mu in (la.parts for la in generate_partitions(d)):
        row = dict(_p_in_m(mu))
        diagonal = row.pop(mu)
        acc = PowerSumPolynomial.basis(mu)
        for nu, c in row.items():
            acc = acc - c * table[nu]
        table[mu] = acc * Fraction(1, diagonal)
    return table


def monomial_to_powersum(la: Partition, degree_bound: int | None = None) -> PowerSumPolynomial:
    """The monomial symmetric function m_la written in the power-sum basis."""
    bound = DEFAULT_DEGREE_BOUND if degree_bound is None else degree_bound
    if la.weight > bound:
        raise ValueError(f"weight {la.weight} exceeds the degree bound {bound}")
    return _m_to_p_table(la.weight)[la.parts]


@lru_cache(maxsize=None)
def _q(k: int) -> PowerSumPolynomial:
    if k < 0:
        return PowerSumPolynomial.zero()
    if k == 0:
        return PowerSumPolynomial.one()
    acc = PowerSumPolynomial.zero()
    for la in generate_partitions(k):
        acc = acc + 2 ** len(la) * _m_to_p_table(k)[la.parts]
    return acc


def q_function(k: int, degree_bound: int | None = None) -> PowerSumPolynomial:
    """The one-row function q_k: the sum of 2**length * m_la over la of weight k.

    Negative k gives zero and q_0 is one.
    """
    bound = DEFAULT_DEGREE_BOUND if degree_bound is None else degree_bound
    if k > bound:
        raise ValueError(f"weight {k} exceeds the degree bound {bound}")
    return _q(k)


@lru_cache(maxsize=None)
def _q_pair(a: int, b: int) -> PowerSumPolynomial:
    acc = _q(a) * _q(b)
    for k in range(1, b + 1):
        acc = acc + (2 * (-1) ** k) * (_q(a + k) * _q(b - k))
    return acc


def q_pair(a: int, b: int, degree_bound: int | None = None) -> PowerSumPolynomial:
    """The two-row function Q_(a,b) for a > b >= 0, by the alternating sum."""
    if not a > b >= 0:
        raise ValueError(f"need a > b >= 0, got a={a}, b={b}")
    bound = DEFAULT_DEGREE_BOUND if degree_bound is None else degree_bound
    if a + b > bound:
        raise ValueError(f"weight {a + b} exceeds the degree bound {bound}")
    return _q_pair(a, b)


@lru_cache(maxsize=None)
def _q_shape(parts: tuple[int, ...]) -> PowerSumPolynomial:
    length = len(parts)
    if length == 0:
        return PowerSumPolynomial.one()
    if length == 1:
        return _q(parts[0])
    if length == 2:
        return _q_pair(parts[0], parts[1])
    acc = PowerSumPolynomial.zero()
    if length % 2 == 1:
        for i in range(length):
            term = _q(parts[i]) * _q_shape(parts[:i] + parts[i + 1 :])
            acc = acc + (term if i % 2 == 0 else -term)
    else:
        for i in range(1, length):
            term = _q_pair(parts[0], parts[i]) * _q_shape(parts[1:i] + parts[i + 1 :])
            acc = acc + (term if i % 2 == 1 else -term)
    return acc


def q_lambda_inductive(shape: StrictPartition, degree_bound: int | None = None) -> PowerSumPolynomial:
    """Q_shape by induction on the number of rows.

    Odd lengths expand along single rows against the rest; even lengths
    pair the first row with each other row.
    """
    if not isinstance(shape, StrictPartition):
        shape = StrictPartition(shape.parts if isinstance(shape, Partition) else shape)
    bound = DEFAULT_DEGREE_BOUND if degree_bound is None else degree_bound
    if shape.weight > bound:
        raise ValueError(f"weight {shape.weight} exceeds the degree bound {bound}")
    return _q_shape(shape.parts)


def schur_expansion(shape: StrictPartition, degree_bound: int | None = None) -> PowerSumPolynomial:
    """Q_shape assembled from spin character values on all-odd classes.

    Each class pi contributes 2**((len(shape)+len(pi)+parity)/2) times the
    character over the centralizer order; the halved exponent is always an
    integer, and a parity failure raises rather than rounding.
    """
    if not isinstance(shape, StrictPartition):
        shape = StrictPartition(shape.parts if isinstance(shape, Partition) else shape)
    bound = DEFAULT_DEGREE_BOUND if degree_bound is None else degree_bound
    if shape.weight > bound:
        raise ValueError(f"weight {shape.weight} exceeds the degree bound {bound}")
    eps = parity(shape)
    length = len(shape)
    acc: dict[Partition, Fraction] = {}
    for cls in generate_partitions(shape.weight, "all-odd"):
        exponent = length + len(cls) + eps
        if exponent % 2 != 0:
            raise ArithmeticError(f"odd halved exponent for shape {shape}, class {cls}")
        value = character(shape, cls)
        if value:
            acc[cls] = Fraction(2 ** (exponent // 2) * value, centralizer_order(cls))
    return PowerSumPolynomial(acc)


def principal_specialization(f: PowerSumPolynomial) -> DegreePolynomial:
    """Send every power sum to t, so p_pi contributes t**len(pi)."""
    if f.is_zero():
        return DegreePolynomial()
    coeffs = [Fraction(0)] * (max(len(pi) for pi in f.support()) + 1)
    for pi, c in f.terms():
        coeffs[len(pi)] += c
    return DegreePolynomial(coeffs)


def min_degree(f: PowerSumPolynomial) -> int:
    """Minimum part count over the support; undefined for zero."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no minimal degree")
    return min(len(pi) for pi in f.support())


@dataclass(frozen=True)
class DegreeRecord:
    shape: StrictPartition
    srank: int
    min_degree: int
    lower_bound_ok: bool
    divisibility_ok: bool
    equality: bool


@dataclass(frozen=True)
class DegreeReport:
    n: int
    records: tuple[DegreeRecord, ...]

    @property
    def corollaries_ok(self) -> bool:
        return all(r.lower_bound_ok and r.divisibility_ok for r in self.records)

    @property
    def conjecture_ok(self) -> bool:
        return all(r.equality for r in self.records)


def verify_degree_bounds(n: int) -> DegreeReport:
    """Degree data of Q_shape against the shifted rank, for every shape of weight n.

    Checks that the minimal power-sum length is at least the rank, that
    the principal specialization is divisible by t**rank, and whether the
    minimal length equals the rank exactly.
    """
    recs = []
    for lam in generate_partitions(n, "distinct"):
        q = q_lambda_inductive(lam)
        rank = srank_formula(lam)
        md = min_degree(q)
        spec = principal_specialization(q)
        recs.append(
            DegreeRecord(
                shape=lam,
                srank=rank,
                min_degree=md,
                lower_bound_ok=md >= rank,
                divisibility_ok=spec.divisible_by(rank),
                equality=md == rank,
            )
        )
    return DegreeReport(n, tuple(recs))
