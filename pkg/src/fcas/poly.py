"""Exact sparse multivariate polynomial ring over the rationals with metric signs.

A polynomial is a finite map from monomials to nonzero rational coefficients.
Coefficients are exact (Python int, promoted to Fraction only when a true
fraction appears), so identities verified here are verified, not approximated.

On top of the ordinary variables the ring carries five involutive sign
symbols E, E1..E4 (the metric signs epsilon, epsilon_1..epsilon_4 of the
frame): each squares to 1, so their exponents live in Z/2 and a monomial
stores them as a 5-bit mask.  Numerically a sign symbol is always +1 or -1.
Because (1+E)(1-E) = 0 the ring has zero divisors; callers that need an
integral domain (resultants, fraction-free elimination) split over the 2^s
sign assignments first (see elim.py).

Monomial representation: variable exponents are packed into a single int,
FIELD_BITS bits per variable, so monomial multiplication is one integer
addition and divisibility is one masked subtraction.  A term key is the pair
(sign_bits, packed_exponents).

Canonical term order is graded lexicographic over the variable-table order
(total degree first, then lexicographic with earlier table entries more
significant); sign bits only break ties.  Canonical text and binary forms
are emitted in descending order, so equal polynomials serialize identically
regardless of how they were built.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

Coeff = Union[int, Fraction]

SIGN_NAMES = ("E", "E1", "E2", "E3", "E4")
SIGN_INDEX = {name: i for i, name in enumerate(SIGN_NAMES)}

# Fixed packing geometry: FIELD_BITS bits of exponent per variable slot.
# MAX_VARS slots are reserved up front so a table may grow (append-only)
# without repacking existing monomials.
FIELD_BITS = 16
MAX_VARS = 26
_FIELD_MASK = (1 << FIELD_BITS) - 1
_EXP_LIMIT = 1 << (FIELD_BITS - 1)
# High bit of every field; used to detect per-field borrow after subtraction.
_BORROW_MASK = sum(1 << (FIELD_BITS * i + FIELD_BITS - 1) for i in range(MAX_VARS))

MINUS_INFINITY = float("-inf")  # degree of the zero polynomial


class PolyError(Exception):
    pass


class TableMismatchError(PolyError):
    pass


class UnknownVariableError(PolyError):
    pass


class MissingAssignmentError(PolyError):
    pass


class ZeroPolynomialError(PolyError):
    pass


class NonExactDivisionError(PolyError):
    pass


class ParseError(PolyError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# Canonical variable order of the verification pipeline.  Appending further
# names is allowed; reordering or removal is not.
STANDARD_VARS = (
    "lm", "l1", "l2", "l3", "l4",
    "b2", "b3", "b4",
    "rho", "rho1", "T", "T1", "T2",
    "Q", "beta",
    "alpha", "phi", "k", "P",
    "H", "u",
)


class VarTable:
    """Ordered registry of variable names.

    Indices are stable for the lifetime of the table; registration is
    append-only so previously built monomial keys remain valid.
    """

    def __init__(self, names: Sequence[str] = STANDARD_VARS):
        self._names: list[str] = []
        self._index: dict[str, int] = {}
        for name in names:
            self.register(name)

    def register(self, name: str) -> int:
        if name in SIGN_INDEX:
            raise PolyError(f"{name!r} is a reserved sign symbol")
        if not name.isidentifier():
            raise PolyError(f"invalid variable name {name!r}")
        if name in self._index:
            return self._index[name]
        if len(self._names) >= MAX_VARS:
            raise PolyError(f"variable table full (max {MAX_VARS})")
        idx = len(self._names)
        self._names.append(name)
        self._index[name] = idx
        return idx

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(f"unknown variable {name!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self._names)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self._names)

    def digest(self) -> str:
        """Hash of the table contents; embedded in reports so cached/golden
        material cannot silently drift to a different variable order."""
        blob = "\x00".join(self._names).encode()
        return hashlib.sha256(blob).hexdigest()[:16]

    # --- convenience constructors -------------------------------------

    def var(self, name: str) -> "Polynomial":
        key = (0, 1 << (FIELD_BITS * self.index(name)))
        return Polynomial(self, {key: 1})

    def sign(self, name: str) -> "Polynomial":
        if name not in SIGN_INDEX:
            raise UnknownVariableError(f"unknown sign symbol {name!r}")
        return Polynomial(self, {(1 << SIGN_INDEX[name], 0): 1})

    def const(self, value: Coeff) -> "Polynomial":
        value = _normalize_coeff(value)
        if value == 0:
            return Polynomial(self, {})
        return Polynomial(self, {(0, 0): value})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def symbols(self) -> dict[str, "Polynomial"]:
        """Name -> generator map for every variable and sign symbol."""
        out = {name: self.var(name) for name in self._names}
        for s in SIGN_NAMES:
            out[s] = self.sign(s)
        return out


def _normalize_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return c
    if isinstance(c, int):
        return c
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


def _unpack(packed: int, nvars: int) -> tuple[int, ...]:
    return tuple((packed >> (FIELD_BITS * i)) & _FIELD_MASK for i in range(nvars))


def _pack(exps: Iterable[int]) -> int:
    packed = 0
    for i, e in enumerate(exps):
        if e:
            if e < 0 or e >= _EXP_LIMIT:
                raise PolyError(f"exponent {e} out of range")
            packed |= e << (FIELD_BITS * i)
    return packed


def _total_degree(packed: int) -> int:
    deg = 0
    while packed:
        deg += packed & _FIELD_MASK
        packed >>= FIELD_BITS
    return deg


def term_sort_key(key: tuple[int, int], nvars: int):
    bits, packed = key
    return (_total_degree(packed), _unpack(packed, nvars), bits)


class Polynomial:
    """Immutable canonical-form sparse polynomial bound to a VarTable."""

    __slots__ = ("table", "terms")

    def __init__(self, table: VarTable, terms: dict):
        self.table = table
        self.terms = terms  # {(sign_bits, packed): coeff}; never mutated

    # --- basics --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.table is other.table and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == self.table.const(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((id(self.table), frozenset(self.terms.items())))

    def _check_same_table(self, other: "Polynomial") -> None:
        if self.table is not other.table:
            raise TableMismatchError("polynomials built over different variable tables")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_same_table(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.table.const(other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    # --- ring operations ------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = _normalize_coeff(s) if isinstance(s, Fraction) else s
            else:
                out.pop(key, None)
        return Polynomial(self.table, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.table, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = _normalize_coeff(other)
            if other == 0:
                return self.table.zero()
            if other == 1:
                return self
            out = {}
            for key, c in self.terms.items():
                p = c * other
                out[key] = _normalize_coeff(p) if isinstance(p, Fraction) else p
            return Polynomial(self.table, out)
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return self.table.zero()
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for (bits1, packed1), c1 in a.items():
            for (bits2, packed2), c2 in b.items():
                key = (bits1 ^ bits2, packed1 + packed2)
                s = get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    del out[key]
        for key, c in out.items():
            if isinstance(c, Fraction) and c.denominator == 1:
                out[key] = int(c)
        return Polynomial(self.table, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise PolyError("polynomial powers must be non-negative integers")
        result = self.table.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    # --- structure ------------------------------------------------------

    def total_degree(self):
        if not self.terms:
            return MINUS_INFINITY
        return max(_total_degree(packed) for _, packed in self.terms)

    def degree_in(self, var: str):
        """Degree in one variable; MINUS_INFINITY for the zero polynomial."""
        idx = self.table.index(var)
        if not self.terms:
            return MINUS_INFINITY
        shift = FIELD_BITS * idx
        return max((packed >> shift) & _FIELD_MASK for _, packed in self.terms)

    def coefficient_of(self, var: str, power: int) -> "Polynomial":
        """Coefficient of var**power, as a polynomial in the other variables."""
        idx = self.table.index(var)
        if power < 0:
            raise PolyError("power must be non-negative")
        shift = FIELD_BITS * idx
        clear = ~(_FIELD_MASK << shift)
        out = {}
        for (bits, packed), c in self.terms.items():
            if (packed >> shift) & _FIELD_MASK == power:
                out[(bits, packed & clear)] = c
        return Polynomial(self.table, out)

    def degree_coeff(self, var: str, power: int):
        """(degree in var, coefficient of var**power)."""
        return self.degree_in(var), self.coefficient_of(var, power)

    def coefficients_in(self, var: str) -> list["Polynomial"]:
        """Little-endian coefficient list [c0, c1, ...] with respect to var."""
        deg = self.degree_in(var)
        if deg is MINUS_INFINITY:
            return []
        idx = self.table.index(var)
        shift = FIELD_BITS * idx
        clear = ~(_FIELD_MASK << shift)
        buckets: list[dict] = [dict() for _ in range(int(deg) + 1)]
        for (bits, packed), c in self.terms.items():
            e = (packed >> shift) & _FIELD_MASK
            buckets[e][(bits, packed & clear)] = c
        return [Polynomial(self.table, b) for b in buckets]

    def variables(self) -> tuple[str, ...]:
        """Names of the variables that actually occur."""
        seen = 0
        for _, packed in self.terms:
            seen |= packed
        names = []
        for i, name in enumerate(self.table.names):
            if (seen >> (FIELD_BITS * i)) & _FIELD_MASK:
                names.append(name)
        return tuple(names)

    def sign_bits_used(self) -> int:
        mask = 0
        for bits, _ in self.terms:
            mask |= bits
        return mask

    def leading_key(self) -> tuple[int, int]:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        nvars = len(self.table)
        return max(self.terms, key=lambda k: term_sort_key(k, nvars))

    def leading_coeff(self) -> Coeff:
        return self.terms[self.leading_key()]

    def sorted_terms(self) -> list[tuple[tuple[int, int], Coeff]]:
        nvars = len(self.table)
        return sorted(self.terms.items(), key=lambda kv: term_sort_key(kv[0], nvars), reverse=True)

    def term_count(self) -> int:
        return len(self.terms)

    def max_coeff_bits(self) -> int:
        bits = 0
        for c in self.terms.values():
            if isinstance(c, Fraction):
                bits = max(bits, c.numerator.bit_length(), c.denominator.bit_length())
            else:
                bits = max(bits, c.bit_length())
        return bits

    # --- substitution and evaluation -------------------------------------

    def substitute(self, var: str, value) -> "Polynomial":
        """Replace a variable or sign symbol by a polynomial (or scalar)."""
        if not isinstance(value, Polynomial):
            value = self.table.const(value)
        else:
            self._check_same_table(value)
        if var in SIGN_INDEX:
            return self._substitute_sign(var, value)
        idx = self.table.index(var)
        shift = FIELD_BITS * idx
        if not any((packed >> shift) & _FIELD_MASK for _, packed in self.terms):
            return self
        clear = ~(_FIELD_MASK << shift)
        buckets: dict[int, dict] = {}
        for (bits, packed), c in self.terms.items():
            e = (packed >> shift) & _FIELD_MASK
            buckets.setdefault(e, {})[(bits, packed & clear)] = c
        result = self.table.zero()
        power_cache: dict[int, Polynomial] = {0: self.table.one(), 1: value}
        for e in sorted(buckets):
            if e not in power_cache:
                p = power_cache[max(k for k in power_cache if k <= e)]
                base = max(k for k in power_cache if k <= e)
                for _ in range(base, e):
                    p = p * value
                    base += 1
                    power_cache[base] = p
            result = result + Polynomial(self.table, buckets[e]) * power_cache[e]
        return result

    def _substitute_sign(self, name: str, value: "Polynomial") -> "Polynomial":
        bit = 1 << SIGN_INDEX[name]
        stay = {}
        moved = self.table.zero()
        pending: dict = {}
        for (bits, packed), c in self.terms.items():
            if bits & bit:
                pending[(bits ^ bit, packed)] = c
            else:
                stay[(bits, packed)] = c
        if pending:
            moved = Polynomial(self.table, pending) * value
        return Polynomial(self.table, stay) + moved

    def instantiate_signs(self, signs: Mapping[str, int]) -> "Polynomial":
        """Substitute +1/-1 for the given sign symbols."""
        p = self
        for name, val in signs.items():
            if val not in (1, -1):
                raise PolyError(f"sign symbol {name} must be +1 or -1, got {val}")
            p = p.substitute(name, val)
        return p

    def evaluate(self, point: Mapping[str, Coeff], signs: Mapping[str, int] | None = None) -> Fraction:
        """Exact value at a rational point; evaluation is a ring homomorphism."""
        signs = signs or {}
        sign_vals = [1] * len(SIGN_NAMES)
        needed_bits = self.sign_bits_used()
        for i, name in enumerate(SIGN_NAMES):
            if needed_bits & (1 << i):
                if name not in signs:
                    raise MissingAssignmentError(f"no assignment for sign symbol {name}")
                v = signs[name]
                if v not in (1, -1):
                    raise PolyError(f"sign symbol {name} must be +1 or -1")
                sign_vals[i] = v
        nvars = len(self.table)
        values: list[Fraction | None] = [None] * nvars
        for name, v in point.items():
            values[self.table.index(name)] = Fraction(v)
        total = Fraction(0)
        for (bits, packed), c in self.terms.items():
            term = Fraction(c)
            if bits:
                for i in range(len(SIGN_NAMES)):
                    if bits & (1 << i) and sign_vals[i] < 0:
                        term = -term
            rest = packed
            idx = 0
            while rest:
                e = rest & _FIELD_MASK
                if e:
                    v = values[idx]
                    if v is None:
                        raise MissingAssignmentError(
                            f"no assignment for variable {self.table.names[idx]!r}")
                    term *= v ** e
                rest >>= FIELD_BITS
                idx += 1
            total += term
        return total

    def map_coeffs(self, fn: Callable[[Coeff], Coeff]) -> "Polynomial":
        out = {}
        for key, c in self.terms.items():
            v = _normalize_coeff(fn(c))
            if v:
                out[key] = v
        return Polynomial(self.table, out)

    # --- content and units ------------------------------------------------

    def rational_content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no content")
        from math import gcd
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            f = Fraction(c)
            num_gcd = gcd(num_gcd, abs(f.numerator))
            den_lcm = den_lcm * f.denominator // gcd(den_lcm, f.denominator)
        return Fraction(num_gcd, den_lcm)

    def primitive_decomposition(self):
        """Split self = content * sign * E^bits * primitive.

        content is a positive rational, sign is +1/-1, bits is the sign-symbol
        mask common to every term, and primitive has coprime integer
        coefficients with a positive leading coefficient.
        """
        if not self.terms:
            raise ZeroPolynomialError("cannot decompose the zero polynomial")
        common_bits = None
        for bits, _ in self.terms:
            common_bits = bits if common_bits is None else (common_bits & bits)
        content = self.rational_content()
        inv = 1 / content
        out = {}
        for (bits, packed), c in self.terms.items():
            out[(bits ^ common_bits, packed)] = _normalize_coeff(Fraction(c) * inv)
        prim = Polynomial(self.table, out)
        sign = 1
        if prim.leading_coeff() < 0:
            sign = -1
            prim = -prim
        return content, sign, common_bits, prim

    def monomial_content(self) -> tuple[int, int]:
        """(common sign bits, packed minimum exponents) across all terms."""
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no monomial content")
        common_bits = None
        mins: list[int] | None = None
        nvars = len(self.table)
        for bits, packed in self.terms:
            common_bits = bits if common_bits is None else (common_bits & bits)
            exps = _unpack(packed, nvars)
            if mins is None:
                mins = list(exps)
            else:
                mins = [min(a, b) for a, b in zip(mins, exps)]
            if not any(mins) and common_bits == 0:
                return 0, 0
        return common_bits, _pack(mins or [])

    def strip_monomial_content(self):
        """Return (monomial polynomial, stripped) with monomial * stripped == self."""
        bits, packed = self.monomial_content()
        if bits == 0 and packed == 0:
            return self.table.one(), self
        out = {(b ^ bits, p - packed): c for (b, p), c in self.terms.items()}
        return Polynomial(self.table, {(bits, packed): 1}), Polynomial(self.table, out)

    # --- derived helpers ---------------------------------------------------

    def exact_divide_term(self, key: tuple[int, int], coeff: Coeff) -> "Polynomial":
        """Divide by a single term (monomial times unit); must divide exactly."""
        bits, packed = key
        out = {}
        for (b, p), c in self.terms.items():
            q = p - packed
            if q < 0 or (q & _BORROW_MASK and (p & _BORROW_MASK) == 0):
                raise NonExactDivisionError("monomial does not divide a term")
            if q & _BORROW_MASK:
                raise NonExactDivisionError("monomial does not divide a term")
            v = Fraction(c, 1) / coeff if not isinstance(c, Fraction) and isinstance(coeff, Fraction) else Fraction(c) / Fraction(coeff)
            out[(b ^ bits, q)] = _normalize_coeff(v)
        return Polynomial(self.table, out)

    def moved_to(self, table: VarTable) -> "Polynomial":
        """Rebuild over another table that shares a name-compatible prefix."""
        if table is self.table:
            return self
        mapping = [table.index(name) for name in self.table.names]
        out = {}
        nvars = len(self.table)
        for (bits, packed), c in self.terms.items():
            exps = _unpack(packed, nvars)
            new = [0] * len(table)
            for i, e in enumerate(exps):
                if e:
                    new[mapping[i]] = e
            out[(bits, _pack(new))] = c
        return Polynomial(table, out)

    # --- text form ----------------------------------------------------------

    def format(self) -> str:
        return format_poly(self)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        text = format_poly(self)
        if len(text) > 120:
            text = text[:117] + "..."
        return f"Polynomial({text})"

    def canonical_bytes(self) -> bytes:
        return to_bytes(self)

    def digest(self) -> str:
        return hashlib.sha256(to_bytes(self)).hexdigest()


# --- text grammar -------------------------------------------------------
#
#   expr   := [sign] term (('+'|'-') term)*
#   term   := factor ('*' factor)*
#   factor := rational | name ['^' uint]
#   rational := uint ['/' uint]
#
# Whitespace is insignificant.  Names resolve against the table plus the
# sign symbols E, E1..E4.  The canonical formatter emits terms in descending
# canonical order, omits unit coefficients, and orders factors sign symbols
# first then variables in table order.


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "/":
                jj = j + 1
                while jj < n and text[jj].isdigit():
                    jj += 1
                if jj == j + 1:
                    raise ParseError("missing denominator", j)
                tokens.append(("num", Fraction(int(text[i:j]), int(text[j + 1:jj])), i))
                i = jj
            else:
                tokens.append(("num", int(text[i:j]), i))
                i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


def parse(text: str, table: VarTable) -> Polynomial:
    """Parse canonical text into a polynomial over the given table."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty input", 0)
    result = table.zero()
    pos = 0
    n = len(tokens)

    def parse_term(pos: int):
        coeff: Coeff = 1
        bits = 0
        exps = [0] * len(table)
        expect_factor = True
        saw_factor = False
        while pos < n:
            kind, val, at = tokens[pos]
            if expect_factor:
                if kind == "num":
                    coeff = _normalize_coeff(Fraction(coeff) * Fraction(val))
                    pos += 1
                elif kind == "name":
                    power = 1
                    pos += 1
                    if pos < n and tokens[pos][0] == "^":
                        if pos + 1 >= n or tokens[pos + 1][0] != "num" or not isinstance(tokens[pos + 1][1], int):
                            raise ParseError("expected integer exponent after '^'",
                                             tokens[pos][2])
                        power = tokens[pos + 1][1]
                        pos += 2
                    if val in SIGN_INDEX:
                        if power % 2:
                            bits ^= 1 << SIGN_INDEX[val]
                    else:
                        exps[table.index(val)] += power
                else:
                    raise ParseError("expected a factor", at)
                saw_factor = True
                expect_factor = False
            else:
                if kind == "*":
                    expect_factor = True
                    pos += 1
                else:
                    break
        if expect_factor and saw_factor:
            raise ParseError("dangling '*'", tokens[pos - 1][2] if pos else 0)
        if not saw_factor:
            raise ParseError("empty term", tokens[pos][2] if pos < n else len(tokens))
        return pos, (bits, _pack(exps)), coeff

    sign = 1
    kind, val, at = tokens[0]
    if kind in "+-":
        sign = -1 if kind == "-" else 1
        pos = 1
    while True:
        pos, key, coeff = parse_term(pos)
        coeff = _normalize_coeff(Fraction(coeff) * sign)
        if coeff:
            result = result + Polynomial(table, {key: coeff})
        if pos >= n:
            break
        kind, val, at = tokens[pos]
        if kind == "+":
            sign = 1
        elif kind == "-":
            sign = -1
        else:
            raise ParseError(f"expected '+' or '-', found {val!r}", at)
        pos += 1
        if pos >= n:
            raise ParseError("dangling sign", at)
    return result


def format_poly(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    nvars = len(p.table)
    names = p.table.names
    pieces = []
    for (bits, packed), coeff in p.sorted_terms():
        factors = []
        for i, s in enumerate(SIGN_NAMES):
            if bits & (1 << i):
                factors.append(s)
        exps = _unpack(packed, nvars)
        for i, e in enumerate(exps):
            if e == 1:
                factors.append(names[i])
            elif e > 1:
                factors.append(f"{names[i]}^{e}")
        mag = abs(Fraction(coeff))
        if mag != 1 or not factors:
            factors.insert(0, str(mag) if mag.denominator > 1 else str(mag.numerator))
        body = "*".join(factors)
        pieces.append((coeff < 0, body))
    out = []
    for i, (neg, body) in enumerate(pieces):
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# --- binary form ----------------------------------------------------------

MAGIC = b"FCAS1"


def _encode_int(v: int) -> bytes:
    length = (v.bit_length() + 8) // 8  # room for the sign bit
    blob = v.to_bytes(length, "big", signed=True)
    return len(blob).to_bytes(4, "big") + blob


def _decode_int(buf: bytes, at: int) -> tuple[int, int]:
    length = int.from_bytes(buf[at:at + 4], "big")
    at += 4
    return int.from_bytes(buf[at:at + length], "big", signed=True), at + length


def to_bytes(p: Polynomial) -> bytes:
    """Length-prefixed canonical term list with versioned header."""
    out = [MAGIC]
    names = p.table.names
    out.append(len(names).to_bytes(2, "big"))
    for name in names:
        blob = name.encode()
        out.append(len(blob).to_bytes(1, "big"))
        out.append(blob)
    terms = p.sorted_terms()
    out.append(len(terms).to_bytes(4, "big"))
    nvars = len(names)
    for (bits, packed), coeff in terms:
        out.append(bits.to_bytes(1, "big"))
        exps = _unpack(packed, nvars)
        nz = [(i, e) for i, e in enumerate(exps) if e]
        out.append(len(nz).to_bytes(1, "big"))
        for i, e in nz:
            out.append(i.to_bytes(1, "big"))
            out.append(e.to_bytes(4, "big"))
        f = Fraction(coeff)
        out.append(_encode_int(f.numerator))
        out.append(_encode_int(f.denominator))
    return b"".join(out)


def from_bytes(buf: bytes, table: VarTable) -> Polynomial:
    """Inverse of to_bytes; the table must contain the serialized names."""
    if buf[:5] != MAGIC:
        raise PolyError("bad magic: not FCAS1 data")
    at = 5
    nnames = int.from_bytes(buf[at:at + 2], "big")
    at += 2
    names = []
    for _ in range(nnames):
        ln = buf[at]
        at += 1
        names.append(buf[at:at + ln].decode())
        at += ln
    remap = [table.index(name) for name in names]
    nterms = int.from_bytes(buf[at:at + 4], "big")
    at += 4
    terms = {}
    for _ in range(nterms):
        bits = buf[at]
        at += 1
        nz = buf[at]
        at += 1
        exps = [0] * len(table)
        for _ in range(nz):
            idx = buf[at]
            at += 1
            e = int.from_bytes(buf[at:at + 4], "big")
            at += 4
            exps[remap[idx]] = e
        num, at = _decode_int(buf, at)
        den, at = _decode_int(buf, at)
        coeff = _normalize_coeff(Fraction(num, den))
        if coeff:
            terms[(bits, _pack(exps))] = coeff
    return Polynomial(table, terms)
