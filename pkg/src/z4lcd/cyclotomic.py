"""Factorization of X^N - 1 over Z4 for odd N, with its block structure.

The route is classical: the 2-cyclotomic cosets mod N give the monic
irreducible factors of X^N + 1 over F2 (one factor per coset, computed as a
minimal polynomial in the splitting field F_{2^m}, m = ord_N(2)), and a
single Graeffe step lifts each factor to the unique monic basic irreducible
divisor of X^N - 1 over Z4 with that mod-2 reduction.

Each divisor n of N contributes a block of factors: gamma(n) self-reciprocal
ones when (n, 2) is a good pair, beta(n) reciprocal pairs when bad, where
gamma(n) = phi(n)/ord_n(2) and beta(n) = phi(n)/(2 ord_n(2)).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .z4poly import F2Poly, Z4Poly

GOOD = "good"
BAD = "bad"

SELF_RECIPROCAL = "selfReciprocal"
PAIR_FIRST = "pairFirst"
PAIR_SECOND = "pairSecond"


@dataclass(frozen=True)
class PairClass:
    """Classification of (n, 2) for odd n, with the block-count it implies."""

    divisor: int
    order2: int
    phi: int
    kind: str
    gamma: int | None  # self-reciprocal factor count, good pairs only
    beta: int | None  # reciprocal-pair count, bad pairs only


@dataclass(frozen=True)
class FactorRecord:
    """One monic basic irreducible factor of X^N - 1 with its metadata."""

    index: int
    poly: Z4Poly
    divisor: int  # the n | N this factor belongs to
    block_index: int  # position within its n-block, 1-based
    kind: str  # SELF_RECIPROCAL, PAIR_FIRST or PAIR_SECOND
    partner: int  # index of the reciprocal partner (itself if self-reciprocal)
    coset: tuple[int, ...]  # the 2-cyclotomic coset mod N it was lifted from

    @property
    def degree(self) -> int:
        return len(self.coset)


@dataclass(frozen=True)
class FactorTable:
    """The complete factorization of X^N - 1 over Z4 for odd N."""

    length: int
    records: tuple[FactorRecord, ...]

    def ids(self) -> frozenset[int]:
        return frozenset(r.index for r in self.records)

    def __getitem__(self, index: int) -> FactorRecord:
        return self.records[index]

    def __len__(self) -> int:
        return len(self.records)


def _require_odd(n: int) -> None:
    if n < 1:
        raise ValueError("N must be a positive integer")
    if n % 2 == 0:
        raise ValueError("N must be odd")


def euler_phi(n: int) -> int:
    """Euler's totient, by the product formula over prime divisors."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result -= result // m
    return result


def mult_order_of_2(n: int) -> int:
    """Least k >= 1 with 2^k = 1 mod n; by convention 1 when n = 1."""
    _require_odd(n)
    if n == 1:
        return 1
    acc = 2 % n
    k = 1
    while acc != 1:
        acc = acc * 2 % n
        k += 1
    return k


def classify_pair(n: int) -> PairClass:
    """Decide whether (n, 2) is a good or bad pair and size its block.

    Good means 2^k = -1 mod n for some k; searching k up to ord_n(2)
    suffices because the powers of 2 repeat with that period.  n = 1 is
    good by convention.
    """
    _require_odd(n)
    order2 = mult_order_of_2(n)
    phi = euler_phi(n)
    minus_one = (n - 1) % n
    good = n == 1 or any(pow(2, k, n) == minus_one for k in range(1, order2 + 1))
    if good:
        if phi % order2:
            raise AssertionError(f"phi({n}) not divisible by ord_{n}(2)")
        return PairClass(n, order2, phi, GOOD, gamma=phi // order2, beta=None)
    if phi % (2 * order2):
        raise AssertionError(f"phi({n}) not divisible by 2 ord_{n}(2)")
    return PairClass(n, order2, phi, BAD, gamma=None, beta=phi // (2 * order2))


def cyclotomic_cosets(length: int) -> list[tuple[int, ...]]:
    """Orbits of s -> 2s mod N on {0..N-1}, each ascending, sorted by minimum."""
    _require_odd(length)
    seen = [False] * length
    cosets = []
    for start in range(length):
        if seen[start]:
            continue
        orbit = []
        s = start
        while not seen[s]:
            seen[s] = True
            orbit.append(s)
            s = 2 * s % length
        cosets.append(tuple(sorted(orbit)))
    return cosets


# ---------------------------------------------------------------------------
# Splitting-field engine on int-encoded binary polynomials (bit k = coeff X^k)

def _bits_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _bits_mod(a: int, b: int) -> int:
    db = b.bit_length() - 1
    while a and a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def _bits_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _bits_mod(a, b)
    return a


def _bits_powmod(base: int, exp: int, mod: int) -> int:
    result = 1
    base = _bits_mod(base, mod)
    while exp:
        if exp & 1:
            result = _bits_mod(_bits_mul(result, base), mod)
        base = _bits_mod(_bits_mul(base, base), mod)
        exp >>= 1
    return result


def _bits_is_irreducible(a: int) -> bool:
    # a has an irreducible factor of degree dividing k iff
    # gcd(X^(2^k) - X, a) != 1; no factor of degree <= deg/2 means irreducible
    deg = a.bit_length() - 1
    if deg <= 0:
        return False
    frob = 2  # X
    for _ in range(deg // 2):
        frob = _bits_mod(_bits_mul(frob, frob), a)
        if _bits_gcd(frob ^ 2, a) != 1:
            return False
    return True


def _least_irreducible(degree: int) -> int:
    for low in range(1 << degree):
        candidate = (1 << degree) | low
        if _bits_is_irreducible(candidate):
            return candidate
    raise AssertionError(f"no irreducible of degree {degree}")  # unreachable


def _prime_factors(n: int) -> list[int]:
    primes = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        primes.append(n)
    return primes


def _least_generator(degree: int, modulus: int) -> int:
    """Smallest encoding of full multiplicative order in F_{2^degree}."""
    group_order = (1 << degree) - 1
    if group_order == 1:
        return 1
    primes = _prime_factors(group_order)
    for candidate in range(2, 1 << degree):
        if all(_bits_powmod(candidate, group_order // q, modulus) != 1 for q in primes):
            return candidate
    raise AssertionError("multiplicative group has a generator")  # unreachable


def factor_mod2(length: int) -> list[F2Poly]:
    """Monic irreducible factors of X^N + 1 over F2, one per cyclotomic coset.

    Factor j is the minimal polynomial of alpha^s for s in coset j, where
    alpha is a fixed element of multiplicative order N in F_{2^m}; the list
    is ordered to match cyclotomic_cosets(N).
    """
    cosets = cyclotomic_cosets(length)
    m = mult_order_of_2(length)
    modulus = _least_irreducible(m)
    group_order = (1 << m) - 1
    alpha = _bits_powmod(_least_generator(m, modulus), group_order // length, modulus)
    factors = []
    for coset in cosets:
        # product of (X + alpha^j) over the coset, coefficients in F_{2^m}
        poly = [1]
        for j in coset:
            root = _bits_powmod(alpha, j, modulus)
            nxt = [0] * (len(poly) + 1)
            for k, c in enumerate(poly):
                nxt[k + 1] ^= c
                nxt[k] ^= _bits_mod(_bits_mul(root, c), modulus)
            poly = nxt
        if any(c not in (0, 1) for c in poly):
            raise AssertionError("minimal polynomial left the prime field")
        factors.append(F2Poly(poly))
    return factors


def graeffe_lift(f2: F2Poly) -> Z4Poly:
    """One Graeffe step from a mod-2 factor to its unique Z4 lift.

    Splits f2(X) = e(X^2) + X o(X^2) and returns
    (-1)^deg (e(X)^2 - X o(X)^2) mod 4, which is the monic polynomial over
    Z4 reducing to f2 mod 2 and dividing X^N - 1.
    """
    if not f2.is_monic:
        raise ValueError("lift requires a monic polynomial")
    if not f2.coeffs[0]:
        raise ValueError("lift requires a nonzero constant term")
    even = Z4Poly(f2.coeffs[0::2])
    odd = Z4Poly(f2.coeffs[1::2])
    x = Z4Poly((0, 1))
    lifted = even * even - x * odd * odd
    if len(f2.coeffs) % 2 == 0:  # odd degree
        lifted = -lifted
    if not lifted.is_monic:
        raise AssertionError("Graeffe lift is monic by the sign choice")
    return lifted


@functools.lru_cache(maxsize=None)
def build_factor_table(length: int) -> FactorTable:
    """Lift every mod-2 factor of X^N + 1 and assemble the factor table.

    Records are ordered by the minimal representative of their coset.  Each
    record is assigned the divisor n = N / gcd(N, s) its roots have order n
    for, a 1-based index within its n-block, and its reciprocal partner;
    within a pair the record with the smaller minimal representative is the
    pairFirst.
    """
    _require_odd(length)
    cosets = cyclotomic_cosets(length)
    lifted = [graeffe_lift(f2) for f2 in factor_mod2(length)]

    by_poly = {poly: idx for idx, poly in enumerate(lifted)}
    partners = []
    for poly in lifted:
        partner = by_poly.get(poly.reciprocal())
        if partner is None:
            raise AssertionError("reciprocal of a factor is again a factor")
        partners.append(partner)

    self_counter: dict[int, int] = {}
    pair_counter: dict[int, int] = {}
    records: list[FactorRecord] = []
    for idx, (coset, poly) in enumerate(zip(cosets, lifted)):
        divisor = length // math.gcd(length, coset[0])
        partner = partners[idx]
        if partner == idx:
            kind = SELF_RECIPROCAL
            block = self_counter[divisor] = self_counter.get(divisor, 0) + 1
        elif idx < partner:
            kind = PAIR_FIRST
            block = pair_counter[divisor] = pair_counter.get(divisor, 0) + 1
        else:
            kind = PAIR_SECOND
            block = records[partner].block_index
        records.append(
            FactorRecord(idx, poly, divisor, block, kind, partner, coset)
        )
    return FactorTable(length, tuple(records))


def factor_label(record: FactorRecord) -> str:
    """Display label in g[i,n] / f[i,n] / f*[i,n] form."""
    stem = {SELF_RECIPROCAL: "g", PAIR_FIRST: "f", PAIR_SECOND: "f*"}[record.kind]
    return f"{stem}[{record.block_index},{record.divisor}]"


def table_to_wire(table: FactorTable) -> dict:
    """JSON-ready form of a factor table."""
    return {
        "N": table.length,
        "records": [
            {
                "id": r.index,
                "n": r.divisor,
                "i": r.block_index,
                "kind": r.kind,
                "partner": r.partner,
                "coset": list(r.coset),
                "poly": r.poly.to_string(),
            }
            for r in table.records
        ],
    }
