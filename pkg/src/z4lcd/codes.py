"""Cyclic codes over Z4 in their canonical three-divisor form, and hulls.

A cyclic code of odd length N is presented by a partition of the factors of
X^N - 1 into three monic divisors f, g, h with f g h = X^N - 1; the code is
generated by f(x)g(x) and 2f(x).  Because the factors are pairwise coprime,
gcd and lcm of divisors are plain set operations on factor ids, never a
Euclidean algorithm (Z4[X] has none).

The hull cardinality comes out of the factor sets alone:

    |Hull(C)| = 4^deg(H) * 2^deg(G)

with H the common part of h and the reciprocal of f, and G the part of
X^N - 1 missed by both H and lcm(f, h*).  A code is LCD exactly when that
cardinality is 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import FactorTable
from .z4poly import Z4Poly


@dataclass(frozen=True)
class DivisorSet:
    """A monic divisor of X^N - 1, as the set of factor ids it comprises."""

    table: FactorTable
    members: frozenset[int]

    def __post_init__(self):
        unknown = self.members - self.table.ids()
        if unknown:
            raise ValueError(f"unknown factor ids: {sorted(unknown)}")

    @classmethod
    def of(cls, table: FactorTable, ids=()) -> "DivisorSet":
        return cls(table, frozenset(ids))

    @property
    def degree(self) -> int:
        return sum(self.table[i].degree for i in self.members)

    def complement(self) -> "DivisorSet":
        return DivisorSet(self.table, self.table.ids() - self.members)

    def __or__(self, other: "DivisorSet") -> "DivisorSet":
        return DivisorSet(self.table, self.members | other.members)

    def __and__(self, other: "DivisorSet") -> "DivisorSet":
        return DivisorSet(self.table, self.members & other.members)

    def __contains__(self, index: int) -> bool:
        return index in self.members


@dataclass(frozen=True)
class CodeSpec:
    """A cyclic code as the partition (f, g, h) of the factor table."""

    f_set: DivisorSet
    g_set: DivisorSet
    h_set: DivisorSet

    def __post_init__(self):
        table = self.f_set.table
        if self.g_set.table != table or self.h_set.table != table:
            raise ValueError("partition parts must share one factor table")
        f, g, h = self.f_set.members, self.g_set.members, self.h_set.members
        if f & g or f & h or g & h:
            raise ValueError("f, g, h must be pairwise disjoint")
        if f | g | h != table.ids():
            raise ValueError("f, g, h must cover every factor")

    @classmethod
    def of(cls, table: FactorTable, f=(), g=(), h=None) -> "CodeSpec":
        """Build a partition; h defaults to the complement of f and g."""
        f_ids = frozenset(f)
        g_ids = frozenset(g)
        h_ids = table.ids() - f_ids - g_ids if h is None else frozenset(h)
        return cls(
            DivisorSet(table, f_ids), DivisorSet(table, g_ids), DivisorSet(table, h_ids)
        )

    @property
    def table(self) -> FactorTable:
        return self.f_set.table

    @property
    def length(self) -> int:
        return self.f_set.table.length


@dataclass(frozen=True)
class HullReport:
    """Hull size of a code and the two divisor sets that produce it."""

    H: DivisorSet  # gcd(h, f*): contributes 4^deg
    G: DivisorSet  # complement of H and lcm(f, h*): contributes 2^deg
    deg_H: int
    deg_G: int
    hull_size: int
    lcd: bool


def divisor_poly(divisor: DivisorSet) -> Z4Poly:
    """Product of the member factor polynomials; 1 for the empty set."""
    poly = Z4Poly.one()
    for index in sorted(divisor.members):
        poly = poly * divisor.table[index].poly
    return poly


def reciprocal_set(divisor: DivisorSet) -> DivisorSet:
    """Map every member to its reciprocal partner.

    The reciprocal of a product is the product of the reciprocals, so this
    set represents the reciprocal of divisor_poly(divisor).
    """
    return DivisorSet(
        divisor.table, frozenset(divisor.table[i].partner for i in divisor.members)
    )


def factor_divisor(poly: Z4Poly, table: FactorTable) -> DivisorSet:
    """Resolve a monic divisor of X^N - 1 to its unique set of factor ids.

    Trial division by each table record; rejects input that is not monic or
    leaves a residual other than 1.
    """
    if not poly.is_monic:
        raise ValueError("not a monic polynomial")
    residual = poly
    members = set()
    for record in table.records:
        quotient, remainder = residual.divmod_monic(record.poly)
        if remainder.is_zero:
            members.add(record.index)
            residual = quotient
    if residual != Z4Poly.one():
        raise ValueError(f"{poly.to_string()!r} does not divide X^{table.length}-1")
    return DivisorSet(table, frozenset(members))


def hull_report(spec: CodeSpec) -> HullReport:
    """Hull cardinality of the code, from factor sets alone.

    H = h  intersect  f*        (the gcd of h and the reciprocal of f)
    L = f  union      h*        (the lcm of f and the reciprocal of h)
    G = everything outside H and L
    |Hull| = 4^deg(H) * 2^deg(G), and the code is LCD iff that is 1.
    """
    h_common = spec.h_set & reciprocal_set(spec.f_set)
    lcm_set = spec.f_set | reciprocal_set(spec.h_set)
    g_residual = (h_common | lcm_set).complement()
    deg_h = h_common.degree
    deg_g = g_residual.degree
    size = 4**deg_h * 2**deg_g
    return HullReport(h_common, g_residual, deg_h, deg_g, size, size == 1)


def code_size(spec: CodeSpec) -> int:
    """Number of codewords: 4^deg(h) * 2^deg(g)."""
    return 4 ** spec.h_set.degree * 2 ** spec.g_set.degree


def is_lcd(spec: CodeSpec) -> bool:
    """True when the hull is trivial."""
    return hull_report(spec).hull_size == 1


def spec_to_wire(spec: CodeSpec) -> dict:
    return {
        "N": spec.length,
        "f": sorted(spec.f_set.members),
        "g": sorted(spec.g_set.members),
        "h": sorted(spec.h_set.members),
    }


def hull_to_wire(report: HullReport) -> dict:
    return {
        "degH": report.deg_H,
        "degG": report.deg_G,
        "hullSize": report.hull_size,
        "lcd": report.lcd,
        "H": sorted(report.H.members),
        "G": sorted(report.G.members),
    }
