"""Enumeration and counting of cyclic LCD codes of odd length over Z4.

The LCD codes are exactly the codes C = (f(x)) with f a self-reciprocal
monic divisor of X^N - 1, so each one corresponds to a subset of the
reciprocal-closed atoms of the factor table: the self-reciprocal factors
taken singly plus the reciprocal pairs taken whole.  With nsrf such atoms
there are 2^nsrf LCD codes, counted divisor-wise as

    nsrf = sum over n | N of gamma(n) if (n,2) good else beta(n).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

from . import codes, cyclotomic
from .codes import CodeSpec, DivisorSet, divisor_poly, hull_report
from .cyclotomic import GOOD, SELF_RECIPROCAL, build_factor_table, factor_label
from .z4poly import Z4Poly

DEFAULT_SWEEP_BUDGET = 200_000  # partitions; 3^11 is just under


@dataclass(frozen=True)
class LcdEntry:
    """One LCD code: its factor set and the self-reciprocal generator."""

    f_set: DivisorSet
    generator: Z4Poly


@dataclass(frozen=True)
class LcdCatalog:
    """All cyclic LCD codes of one odd length."""

    length: int
    nsrf: int
    entries: tuple[LcdEntry, ...]


class LcdCensus(NamedTuple):
    """Three independent LCD counts that must agree."""

    formula: int  # 2^nsrf
    enumerated: int  # catalog size
    swept: int | None  # exhaustive partition sweep; None if over budget


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def count_nsrf(length: int) -> int:
    """Number of reciprocal-closed atoms of X^N - 1.

    Per divisor n of N this is gamma(n) self-reciprocal factors for a good
    pair (n, 2) and beta(n) reciprocal pairs for a bad one.
    """
    if length % 2 == 0:
        raise ValueError("N must be odd")
    total = 0
    for n in _divisors(length):
        pc = cyclotomic.classify_pair(n)
        total += pc.gamma if pc.kind == GOOD else pc.beta
    return total


def _atoms(table: cyclotomic.FactorTable) -> list[tuple[int, ...]]:
    """Reciprocal-closed atoms as id tuples, ordered by smallest id."""
    atoms = []
    for record in table.records:
        if record.kind == SELF_RECIPROCAL:
            atoms.append((record.index,))
        elif record.index < record.partner:
            atoms.append((record.index, record.partner))
    return atoms


def enumerate_lcd(length: int) -> LcdCatalog:
    """Catalog of every cyclic LCD code of the given odd length.

    One entry per subset of the reciprocal-closed atoms; the empty subset is
    the whole ambient code (1) and the full subset is the zero code (0).
    Entries are sorted by factor-set size, then by their sorted id lists.
    """
    table = build_factor_table(length)
    atoms = _atoms(table)
    entries = []
    for choice in itertools.product((False, True), repeat=len(atoms)):
        ids = frozenset(
            i for picked, atom in zip(choice, atoms) if picked for i in atom
        )
        f_set = DivisorSet(table, ids)
        entries.append(LcdEntry(f_set, divisor_poly(f_set)))
    entries.sort(key=lambda e: (len(e.f_set.members), sorted(e.f_set.members)))
    return LcdCatalog(length, len(atoms), tuple(entries))


def all_partitions(table: cyclotomic.FactorTable):
    """Yield every CodeSpec (f, g, h) partition of the factor table."""
    ids = sorted(table.ids())
    for assignment in itertools.product(range(3), repeat=len(ids)):
        f = frozenset(i for i, part in zip(ids, assignment) if part == 0)
        g = frozenset(i for i, part in zip(ids, assignment) if part == 1)
        yield CodeSpec.of(table, f, g)


def lcd_census(length: int, sweep_budget: int = DEFAULT_SWEEP_BUDGET) -> LcdCensus:
    """Count LCD codes three ways: closed formula, catalog, partition sweep.

    The sweep applies the hull formula to all 3^r partitions and is skipped
    (swept=None) when that count exceeds the budget.
    """
    formula = 2 ** count_nsrf(length)
    enumerated = len(enumerate_lcd(length).entries)
    table = build_factor_table(length)
    if 3 ** len(table.records) > sweep_budget:
        return LcdCensus(formula, enumerated, None)
    swept = sum(1 for spec in all_partitions(table) if hull_report(spec).lcd)
    return LcdCensus(formula, enumerated, swept)


def entry_label(entry: LcdEntry) -> str:
    """Display form of the generator: (1), (0), or the factor labels."""
    table = entry.f_set.table
    ids = entry.f_set.members
    if not ids:
        return "(1)"
    if ids == table.ids():
        return "(0)"
    labels = [factor_label(table[i]) for i in sorted(ids)]
    return "(" + "".join(labels) + ")"


def catalog_to_wire(catalog: LcdCatalog) -> dict:
    return {
        "N": catalog.length,
        "nsrf": catalog.nsrf,
        "count": len(catalog.entries),
        "entries": [
            {
                "f": sorted(entry.f_set.members),
                "generator": entry.generator.to_string(),
                "label": entry_label(entry),
            }
            for entry in catalog.entries
        ],
    }
