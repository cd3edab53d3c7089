"""Exact polynomial arithmetic over Z4 and over F2.

Polynomials are held as tuples of canonical residues in ascending degree
order: ``coeffs[k]`` is the coefficient of X^k.  The last entry is always
nonzero; the zero polynomial is the empty tuple and has degree ``NEG_INF``.
Constructors reduce arbitrary integer coefficients into canonical form, so
inputs may use the signed convention (-1 for 3, -2 for 2, and so on).

Z4[X] is not a Euclidean domain, so only division by a *monic* divisor is
offered (quotient and remainder are then unique).  F2[X] is a Euclidean
domain and supports full divmod and gcd.

The text form of a polynomial is its comma-separated ascending coefficient
list, e.g. ``"3,1,2,1"`` for X^3+2X^2+X-1; the empty string is the zero
polynomial.
"""

from __future__ import annotations

NEG_INF = float("-inf")  # degree of the zero polynomial

_Z4_UNITS = (1, 3)
_Z4_INVERSE = {1: 1, 3: 3}


def _normalize(coeffs, modulus: int) -> tuple[int, ...]:
    out = [c % modulus for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Z4Poly:
    """A polynomial over Z4, immutable after construction."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs: tuple[int, ...] = _normalize(coeffs, 4)

    @classmethod
    def zero(cls) -> "Z4Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Z4Poly":
        return cls((1,))

    @classmethod
    def x_pow_minus_one(cls, n: int) -> "Z4Poly":
        """X^n - 1 for n >= 1."""
        if n < 1:
            raise ValueError("exponent must be positive")
        return cls((3,) + (0,) * (n - 1) + (1,))

    @classmethod
    def from_string(cls, text: str) -> "Z4Poly":
        """Parse the comma-separated ascending coefficient form."""
        text = text.strip()
        if not text:
            return cls.zero()
        return cls(int(part) for part in text.split(","))

    def to_string(self) -> str:
        """Canonical comma-separated ascending coefficient form."""
        return ",".join(str(c) for c in self.coeffs)

    @property
    def degree(self):
        """Degree of the polynomial; NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __add__(self, other):
        if not isinstance(other, Z4Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = (out[k] + c) % 4
        return Z4Poly(out)

    def __neg__(self):
        return Z4Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, Z4Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Z4Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Z4Poly.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] = (out[i + j] + ca * cb) % 4
        return Z4Poly(out)

    def scale(self, unit: int) -> "Z4Poly":
        """Multiply every coefficient by an integer (reduced mod 4)."""
        return Z4Poly(unit * c for c in self.coeffs)

    def divmod_monic(self, divisor: "Z4Poly") -> tuple["Z4Poly", "Z4Poly"]:
        """Long division by a monic divisor; returns (quotient, remainder).

        Quotient and remainder are the unique pair with
        self = quotient * divisor + remainder and deg(remainder) < deg(divisor).
        """
        if not divisor.is_monic:
            raise ValueError("divisor must be monic and nonzero")
        rem = list(self.coeffs)
        d = divisor.coeffs
        dd = len(d) - 1
        if len(rem) - 1 < dd:
            return Z4Poly.zero(), Z4Poly(rem)
        quot = [0] * (len(rem) - dd)
        for top in range(len(rem) - 1, dd - 1, -1):
            lead = rem[top]
            if lead:
                quot[top - dd] = lead
                for k in range(dd + 1):
                    rem[top - dd + k] = (rem[top - dd + k] - lead * d[k]) % 4
        return Z4Poly(quot), Z4Poly(rem)

    def divides(self, other: "Z4Poly") -> bool:
        """True when this monic polynomial divides `other` exactly."""
        _, rem = other.divmod_monic(self)
        return rem.is_zero

    def reciprocal(self) -> "Z4Poly":
        """a0^-1 * X^deg * p(1/X): coefficient reversal scaled monic.

        Defined only for monic polynomials whose constant term is a unit
        of Z4; rejects anything else.
        """
        if not self.is_monic:
            raise ValueError("reciprocal requires a monic polynomial")
        a0 = self.constant_term
        if a0 not in _Z4_UNITS:
            raise ValueError("reciprocal requires a unit constant term")
        inv = _Z4_INVERSE[a0]
        return Z4Poly(inv * c for c in reversed(self.coeffs))

    def is_self_reciprocal(self) -> bool:
        return self == self.reciprocal()

    def reduce_mod2(self) -> "F2Poly":
        """Coefficient-wise reduction mod 2 (degree may drop)."""
        return F2Poly(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Z4Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((Z4Poly, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Z4Poly([{self.to_string()}])"

    def __str__(self):
        return format_terms(self)


class F2Poly:
    """A polynomial over F2 with the same tuple representation as Z4Poly."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs: tuple[int, ...] = _normalize(coeffs, 2)

    @classmethod
    def zero(cls) -> "F2Poly":
        return cls(())

    @classmethod
    def one(cls) -> "F2Poly":
        return cls((1,))

    @classmethod
    def x_pow_plus_one(cls, n: int) -> "F2Poly":
        """X^n + 1 for n >= 1."""
        if n < 1:
            raise ValueError("exponent must be positive")
        return cls((1,) + (0,) * (n - 1) + (1,))

    def to_string(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs)  # any nonzero leading coefficient is 1

    def __add__(self, other):
        if not isinstance(other, F2Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] ^= c
        return F2Poly(out)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other):
        if not isinstance(other, F2Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return F2Poly.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] ^= cb
        return F2Poly(out)

    def __divmod__(self, divisor):
        if not isinstance(divisor, F2Poly):
            return NotImplemented
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = divisor.coeffs
        dd = len(d) - 1
        if len(rem) - 1 < dd:
            return F2Poly.zero(), F2Poly(rem)
        quot = [0] * (len(rem) - dd)
        for top in range(len(rem) - 1, dd - 1, -1):
            if rem[top]:
                quot[top - dd] = 1
                for k in range(dd + 1):
                    rem[top - dd + k] ^= d[k]
        return F2Poly(quot), F2Poly(rem)

    def __floordiv__(self, divisor):
        return divmod(self, divisor)[0]

    def __mod__(self, divisor):
        return divmod(self, divisor)[1]

    def gcd(self, other: "F2Poly") -> "F2Poly":
        """Monic greatest common divisor (Euclidean algorithm)."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a

    def __eq__(self, other):
        return isinstance(other, F2Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((F2Poly, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"F2Poly([{self.to_string()}])"


def format_terms(p: Z4Poly) -> str:
    """Render a Z4 polynomial in signed symbolic form, e.g. X^3+2X^2+X-1.

    Residue 3 is written as -1, matching the usual signed display of Z4
    coefficients; residues 1 and 2 are written as-is.
    """
    if p.is_zero:
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign, mag = ("-", 1) if c == 3 else ("+", c)
        if k == 0:
            body = str(mag)
        else:
            power = "X" if k == 1 else f"X^{k}"
            body = power if mag == 1 else f"{mag}{power}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = first_body if first_sign == "+" else "-" + first_body
    for sign, body in parts[1:]:
        text += sign + body
    return text
