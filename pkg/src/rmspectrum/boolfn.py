"""Boolean functions over GF(2): truth tables, algebraic normal form, concatenation.

Truth tables are stored as Python ints used as bit vectors. The point
``x = (x_1, ..., x_n)`` lives at index ``sum(x_k << (k - 1))``, so ``x_1`` is
the least significant coordinate and concatenating two tables is literal
bit-vector concatenation (the second block sits in the upper half).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

# Degree of the zero function; below every real degree so "deg <= r" admits it.
ZERO_DEGREE = -1


class AnfSyntaxError(ValueError):
    """Raised by :func:`parse_anf` on malformed input."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"variable count must be non-negative, got {n}")


@lru_cache(maxsize=None)
def full_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


@lru_cache(maxsize=None)
def var_mask(k: int, n: int) -> int:
    """Truth table of the coordinate function x_k (1-based) in n variables."""
    if not 1 <= k <= n:
        raise ValueError(f"variable index {k} outside [1, {n}]")
    half = 1 << (k - 1)
    # repeating pattern of `half` zeros followed by `half` ones
    block = ((1 << half) - 1) << half
    period = 2 * half
    out = 0
    for start in range(0, 1 << n, period):
        out |= block << start
    return out


@lru_cache(maxsize=None)
def _low_mask(k: int, n: int) -> int:
    # indices whose bit k-1 is zero
    return full_mask(n) ^ var_mask(k, n)


@lru_cache(maxsize=65536)
def monomial_table(vars_: frozenset, n: int) -> int:
    t = full_mask(n)
    for k in vars_:
        t &= var_mask(k, n)
    return t


@dataclass(frozen=True, init=False)
class Monomial:
    """A product of distinct variables, stored as the set of their indices."""

    vars: frozenset
    n: int

    def __init__(self, vars: Iterable[int], n: int):
        _check_n(n)
        vs = frozenset(int(v) for v in vars)
        for v in vs:
            if not 1 <= v <= n:
                raise ValueError(f"variable index {v} outside [1, {n}]")
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "n", n)

    @property
    def degree(self) -> int:
        return len(self.vars)

    def key(self) -> tuple:
        return tuple(sorted(self.vars))

    def table(self) -> "TruthTable":
        return TruthTable(self.n, monomial_table(self.vars, self.n))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _same_n(self.n, other.n)
        return Monomial(self.vars | other.vars, self.n)

    def __str__(self) -> str:
        if not self.vars:
            return "1"
        return "*".join(f"x{k}" for k in self.key())

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r}, n={self.n})"


def _same_n(a: int, b: int) -> None:
    if a != b:
        raise ValueError(f"variable count mismatch: {a} != {b}")


MonomialLike = Union[Monomial, Iterable[int]]


def as_monomial(m: MonomialLike, n: int) -> Monomial:
    if isinstance(m, Monomial):
        _same_n(m.n, n)
        return m
    return Monomial(m, n)


@dataclass(frozen=True, init=False)
class Anf:
    """XOR of monomials. Terms cancel pairwise, so the representation is canonical."""

    terms: frozenset
    n: int

    def __init__(self, terms: Iterable[MonomialLike], n: int):
        _check_n(n)
        acc: set = set()
        for t in terms:
            acc ^= {as_monomial(t, n)}
        object.__setattr__(self, "terms", frozenset(acc))
        object.__setattr__(self, "n", n)

    @classmethod
    def zero(cls, n: int) -> "Anf":
        return cls((), n)

    @classmethod
    def one(cls, n: int) -> "Anf":
        return cls([()], n)

    @property
    def degree(self) -> int:
        if not self.terms:
            return ZERO_DEGREE
        return max(t.degree for t in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list:
        return sorted(self.terms, key=lambda t: (t.degree, t.key()))

    def __add__(self, other: Union["Anf", int]) -> "Anf":
        if isinstance(other, int):
            return self + (Anf.one(self.n) if other & 1 else Anf.zero(self.n))
        _same_n(self.n, other.n)
        return Anf(list(self.terms) + list(other.terms), self.n)

    __radd__ = __add__
    __xor__ = __add__

    def __mul__(self, other: "Anf") -> "Anf":
        _same_n(self.n, other.n)
        return Anf([a * b for a in self.terms for b in other.terms], self.n)

    def lift(self, n: int) -> "Anf":
        """Same polynomial viewed in n >= self.n variables."""
        if n < self.n:
            raise ValueError(f"cannot lift {self.n} variables down to {n}")
        return Anf([t.vars for t in self.terms], n)

    def table(self) -> "TruthTable":
        return anf_to_table(self)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(t) for t in self.sorted_terms())

    def __repr__(self) -> str:
        return f"Anf({str(self)!r}, n={self.n})"


@dataclass(frozen=True)
class TruthTable:
    n: int
    bits: int

    def __post_init__(self):
        _check_n(self.n)
        if self.bits < 0 or self.bits > full_mask(self.n):
            raise ValueError(f"bits do not fit a table of 2^{self.n} entries")

    @classmethod
    def zero(cls, n: int) -> "TruthTable":
        return cls(n, 0)

    @classmethod
    def one(cls, n: int) -> "TruthTable":
        return cls(n, full_mask(n))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "TruthTable":
        bits = list(bits)
        n = len(bits).bit_length() - 1
        if len(bits) != 1 << n:
            raise ValueError(f"table length {len(bits)} is not a power of two")
        return cls(n, sum((b & 1) << i for i, b in enumerate(bits)))

    @classmethod
    def from_function(cls, n: int, fn) -> "TruthTable":
        """Tabulate ``fn(x)`` where x is the tuple (x_1, ..., x_n)."""
        bits = 0
        for idx in range(1 << n):
            x = tuple((idx >> k) & 1 for k in range(n))
            if fn(x) & 1:
                bits |= 1 << idx
        return cls(n, bits)

    def __len__(self) -> int:
        return 1 << self.n

    def __getitem__(self, idx: int) -> int:
        if not 0 <= idx < len(self):
            raise IndexError(idx)
        return (self.bits >> idx) & 1

    def to_list(self) -> list:
        return [(self.bits >> i) & 1 for i in range(len(self))]

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def __xor__(self, other: "TruthTable") -> "TruthTable":
        return add(self, other)

    __add__ = __xor__

    def __and__(self, other: "TruthTable") -> "TruthTable":
        _same_n(self.n, other.n)
        return TruthTable(self.n, self.bits & other.bits)

    def __invert__(self) -> "TruthTable":
        return complement(self)

    def to_hex(self) -> str:
        """Lowercase hex; byte 0 bit 0 is table index 0. Tables under 8 bits use one byte."""
        nbytes = max(1, (1 << self.n) // 8)
        return self.bits.to_bytes(nbytes, "little").hex()

    @classmethod
    def from_hex(cls, text: str, n: int) -> "TruthTable":
        nbytes = max(1, (1 << n) // 8)
        raw = bytes.fromhex(text)
        if len(raw) != nbytes:
            raise ValueError(f"expected {2 * nbytes} hex digits for n={n}, got {len(text)}")
        return cls(n, int.from_bytes(raw, "little"))

    def blocks(self, k: int) -> list:
        """Split into 2^k sub-tables on the lowest n-k variables (inverse of concatenation)."""
        if not 0 <= k <= self.n:
            raise ValueError(f"cannot split {self.n} variables into 2^{k} blocks")
        sub = self.n - k
        size = 1 << sub
        mask = full_mask(sub)
        return [TruthTable(sub, (self.bits >> (i * size)) & mask) for i in range(1 << k)]


# --- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<var>x(?P<idx>\d+))|(?P<const>[01])|(?P<op>[+*])|(?P<bad>\S))")


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        mo = _TOKEN.match(text, pos)
        if mo is None:  # trailing whitespace only
            break
        start = mo.start(mo.lastgroup)
        if mo.group("bad") is not None:
            raise AnfSyntaxError(f"unexpected character {mo.group('bad')!r}", start)
        yield mo.lastgroup, mo, start
        pos = mo.end()
    yield "end", None, len(text)


def parse_anf(text: str, n: int) -> Anf:
    """Parse ``expr := term ('+' term)*`` where a term is 0, 1, or x<i> factors joined by '*'.

    >>> str(parse_anf("x1*x2 + x1*x2 + 1", 2))
    '1'
    """
    _check_n(n)
    toks = list(_tokens(text))
    pos = 0
    terms = []

    def expect_factor():
        nonlocal pos
        kind, mo, at = toks[pos]
        if kind == "var":
            k = int(mo.group("idx"))
            if not 1 <= k <= n:
                raise AnfSyntaxError(f"variable x{k} outside [1, {n}]", at)
            pos += 1
            return k
        raise AnfSyntaxError("expected a variable", at)

    while True:
        kind, mo, at = toks[pos]
        if kind == "const":
            pos += 1
            if mo.group("const") == "1":
                terms.append(())
        elif kind == "var":
            vs = [expect_factor()]
            while toks[pos][0] == "op" and toks[pos][1].group("op") == "*":
                pos += 1
                vs.append(expect_factor())
            # a digit or variable directly after a factor means juxtaposition
            if toks[pos][0] in ("var", "const"):
                raise AnfSyntaxError("missing '*' between factors", toks[pos][2])
            terms.append(vs)
        else:
            raise AnfSyntaxError("expected a term", at)
        kind, mo, at = toks[pos]
        if kind == "end":
            break
        if kind == "op" and mo.group("op") == "+":
            pos += 1
            continue
        raise AnfSyntaxError("expected '+' or end of input", at)
    return Anf(terms, n)


# --- conversions -------------------------------------------------------------

def _mobius(bits: int, n: int) -> int:
    # in-place butterfly over GF(2); the transform is its own inverse
    for k in range(1, n + 1):
        shift = 1 << (k - 1)
        bits ^= (bits & _low_mask(k, n)) << shift
    return bits


def anf_to_table(f: Anf, method: str = "mobius") -> TruthTable:
    """Evaluate f on every point. ``method`` is "mobius" (fast transform) or "terms"."""
    if method == "terms":
        bits = 0
        for t in f.terms:
            bits ^= monomial_table(t.vars, f.n)
        return TruthTable(f.n, bits)
    if method != "mobius":
        raise ValueError(f"unknown method {method!r}")
    # coefficient of monomial K sits at index sum(1 << (k-1) for k in K)
    coeffs = 0
    for t in f.terms:
        coeffs |= 1 << _monomial_index(t.vars)
    return TruthTable(f.n, _mobius(coeffs, f.n))


@lru_cache(maxsize=1 << 16)
def _index_monomial(idx: int, n: int) -> Monomial:
    return Monomial([k + 1 for k in range(n) if (idx >> k) & 1], n)


@lru_cache(maxsize=1 << 16)
def _monomial_index(vars_: frozenset) -> int:
    return sum(1 << (k - 1) for k in vars_)


def table_to_anf(t: TruthTable) -> Anf:
    coeffs = _mobius(t.bits, t.n)
    # set bits of coeffs are distinct indices, so no term can cancel
    terms = [_index_monomial(i, t.n) for i, c in enumerate(reversed(bin(coeffs)[2:])) if c == "1"]
    return Anf(terms, t.n)


# --- arithmetic --------------------------------------------------------------

def weight(t: Union[TruthTable, Anf]) -> int:
    if isinstance(t, Anf):
        t = anf_to_table(t)
    return t.bits.bit_count()


def add(f, g):
    """GF(2) sum of two tables (or two Anfs)."""
    if isinstance(f, Anf):
        return f + g
    _same_n(f.n, g.n)
    return TruthTable(f.n, f.bits ^ g.bits)


def distance(f: TruthTable, g: TruthTable) -> int:
    return add(f, g).weight


def complement(f: TruthTable) -> TruthTable:
    return TruthTable(f.n, f.bits ^ full_mask(f.n))


def concat2(f1: TruthTable, f2: TruthTable) -> TruthTable:
    """(x_{n+1} + 1) f1 + x_{n+1} f2."""
    _same_n(f1.n, f2.n)
    return TruthTable(f1.n + 1, f1.bits | (f2.bits << (1 << f1.n)))


def concat4(f1: TruthTable, f2: TruthTable, f3: TruthTable, f4: TruthTable) -> TruthTable:
    """Block i (0-based) is selected by (x_{n+1}, x_{n+2}) = (i & 1, i >> 1)."""
    return concat2(concat2(f1, f2), concat2(f3, f4))


def lift(t: TruthTable, n: int) -> TruthTable:
    """The same function in n >= t.n variables, independent of the extra ones."""
    if n < t.n:
        raise ValueError(f"cannot lift {t.n} variables down to {n}")
    while t.n < n:
        t = concat2(t, t)
    return t


def degree(f: Union[Anf, TruthTable]) -> int:
    if isinstance(f, TruthTable):
        f = table_to_anf(f)
    return f.degree


def as_table(f: Union[Anf, TruthTable]) -> TruthTable:
    return anf_to_table(f) if isinstance(f, Anf) else f
