"""Exact arithmetic in GF(2^m) with a runtime-configurable modulus.

An element is a plain int: bit i holds the coefficient of x^i of the
residue polynomial, so addition is xor and every element fits in one
machine word (m is capped at 16). The modulus is checked for
irreducibility at construction by exhaustive trial division, which is
instant at these degrees.

Multiplication is schoolbook shift-and-reduce. For m <= 8 a context
builds log/antilog tables by default and routes products through them;
the two paths are interchangeable and are equality-tested against each
other in the test suite.
"""

from __future__ import annotations

import re

from .errors import BadDegreeError, OutOfRangeError, ParseError, ReducibleModulusError
from .modular import factorize

MAX_DEGREE = 16

_HEX_LITERAL = re.compile(r"0[xX][0-9A-Fa-f]+\Z")
_POLY_TERM = re.compile(r"(?:0|1|([axα])(?:\^(\d+))?)\Z")


def poly_degree(mask: int) -> int:
    """Degree of a GF(2)[x] polynomial bitmask (-1 for the zero polynomial)."""
    return mask.bit_length() - 1


def poly_rem(a: int, b: int) -> int:
    """Remainder of polynomial division a mod b over GF(2)."""
    db = poly_degree(b)
    while poly_degree(a) >= db:
        a ^= b << (poly_degree(a) - db)
    return a


def is_irreducible(mask: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2."""
    d = poly_degree(mask)
    if d < 1:
        return False
    for divisor in range(2, 1 << (d // 2 + 1)):
        if poly_degree(divisor) < 1:
            continue
        if poly_rem(mask, divisor) == 0:
            return False
    return True


class GF2m:
    """A field GF(2^m), 1 <= m <= 16, fixed by an irreducible modulus.

    Immutable after construction; safe to share across threads. All
    arithmetic methods are pure functions of int-encoded elements.
    """

    def __init__(self, m: int, modulus: int, use_tables: bool | None = None):
        if not 1 <= m <= MAX_DEGREE:
            raise BadDegreeError(f"extension degree must be in 1..{MAX_DEGREE}, got {m}")
        if poly_degree(modulus) != m:
            raise BadDegreeError(
                f"modulus {modulus:#x} has degree {poly_degree(modulus)}, expected {m}"
            )
        if modulus & 1 == 0:
            raise ReducibleModulusError(f"modulus {modulus:#x} is reducible: divisible by x")
        if not is_irreducible(modulus):
            raise ReducibleModulusError(f"modulus {modulus:#x} is reducible")
        self.m = m
        self.modulus = modulus
        self.q = 1 << m
        self._group_factors: list[tuple[int, int]] | None = None  # factorization of q-1
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if use_tables is None:
            use_tables = m <= 8
        if use_tables:
            self._build_tables()

    # -- identity / hashing: contexts are equal iff they define the same field

    def __eq__(self, other):
        return isinstance(other, GF2m) and other.m == self.m and other.modulus == self.modulus

    def __hash__(self):
        return hash((self.m, self.modulus))

    def __repr__(self):
        return f"GF2m(m={self.m}, modulus={self.modulus:#x})"

    # -- arithmetic

    @staticmethod
    def add(a: int, b: int) -> int:
        """Characteristic-2 addition is xor; also serves as subtraction."""
        return a ^ b

    sub = add

    def _mul_schoolbook(self, a: int, b: int) -> int:
        r = 0
        top = self.q
        mod = self.modulus
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= mod
        return r

    def mul(self, a: int, b: int) -> int:
        """Product (a*b) mod modulus."""
        if self._exp is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_schoolbook(a, b)

    def pow(self, a: int, e: int) -> int:
        """a^e by square-and-multiply; a^0 = 1 for every a."""
        if e < 0:
            raise ValueError("exponent must be non-negative")
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        """Multiplicative inverse via a^(2^m - 2)."""
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    # -- multiplicative structure

    def group_factors(self) -> list[tuple[int, int]]:
        """Cached prime factorization of the group order 2^m - 1."""
        if self._group_factors is None:
            self._group_factors = factorize(self.q - 1)
        return self._group_factors

    def is_primitive(self, a: int) -> bool:
        """True iff a generates the multiplicative group.

        Checks a^((q-1)/p) != 1 for each prime p dividing q-1.
        """
        if a == 0:
            return False
        n = self.q - 1
        if n == 1:
            return a == 1
        return all(self.pow(a, n // p) != 1 for p, _ in self.group_factors())

    def primitive_element(self) -> int:
        """Smallest generator of the multiplicative group."""
        for cand in range(1, self.q):
            if self.is_primitive(cand):
                return cand
        raise AssertionError("unreachable: GF(2^m)* is cyclic")

    def _build_tables(self):
        gen = self._find_generator()
        n = self.q - 1
        exp = [0] * (2 * n)
        log = [0] * self.q
        x = 1
        for i in range(n):
            exp[i] = x
            exp[i + n] = x
            log[x] = i
            x = self._mul_schoolbook(x, gen)
        self._exp = exp
        self._log = log

    def _find_generator(self) -> int:
        # order walk instead of is_primitive: keeps table construction
        # independent of the factorization-based primitivity check
        for cand in range(2, self.q):
            x = cand
            steps = 1
            while x != 1:
                x = self._mul_schoolbook(x, cand)
                steps += 1
            if steps == self.q - 1:
                return cand
        return 1  # m == 1

    @property
    def uses_tables(self) -> bool:
        return self._exp is not None

    # -- parsing and formatting

    def parse(self, text: str) -> int:
        """Read an element from hex ("0x65") or polynomial syntax ("1+a^2+a^5+a^6").

        Also accepts the combined form emitted by format(), requiring the
        two renderings to agree.
        """
        s = text.strip()
        if not s:
            raise ParseError("empty element literal")
        if "(" in s:
            head, _, tail = s.partition("(")
            if not tail.endswith(")"):
                raise ParseError(f"unbalanced parentheses in {text!r}")
            v1 = self.parse(head)
            v2 = self.parse(tail[:-1])
            if v1 != v2:
                raise ParseError(f"hex and polynomial parts of {text!r} disagree")
            return v1
        if s[:2].lower() == "0x":
            if not _HEX_LITERAL.match(s):
                raise ParseError(f"bad hex literal {s!r}")
            value = int(s, 16)
            if value >= self.q:
                raise OutOfRangeError(f"{s} does not fit in GF(2^{self.m})")
            return value
        return self._parse_poly(s)

    def _parse_poly(self, s: str) -> int:
        mask = 0
        for pos, term in enumerate(t.strip() for t in s.split("+")):
            match = _POLY_TERM.match(term)
            if match is None:
                raise ParseError(f"bad term {term!r} at position {pos}")
            if term == "0":
                continue
            if term == "1":
                mask ^= 1
                continue
            degree = int(match.group(2)) if match.group(2) is not None else 1
            if degree >= self.m:
                raise OutOfRangeError(
                    f"term {term!r} has degree {degree}, field degree is {self.m}"
                )
            mask ^= 1 << degree
        return mask

    def format_hex(self, a: int) -> str:
        return f"0x{a:0{(self.m + 3) // 4}x}"

    def format_poly(self, a: int, var: str = "a") -> str:
        if a == 0:
            return "0"
        terms = []
        for i in range(self.m):
            if a >> i & 1:
                terms.append("1" if i == 0 else var if i == 1 else f"{var}^{i}")
        return "+".join(terms)

    def format(self, a: int) -> str:
        """Both renderings at once, e.g. "0x65 (1+a^2+a^5+a^6)"; parse() round-trips it."""
        return f"{self.format_hex(a)} ({self.format_poly(a)})"

    # -- serialization (field block of the matrix/spec JSON formats)

    def to_json(self) -> dict:
        return {"m": self.m, "poly": f"0x{self.modulus:x}"}

    @classmethod
    def from_json(cls, obj: dict) -> "GF2m":
        try:
            m = int(obj["m"])
            poly = obj["poly"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad field block {obj!r}") from exc
        modulus = int(poly, 16) if isinstance(poly, str) else int(poly)
        return cls(m, modulus)
