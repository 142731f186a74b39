"""Elimination machinery over the sign-carrying polynomial ring.

Linear substitution with denominator clearing, Cramer elimination of a
variable shared by two quadratics, resultants (subresultant-style pseudo
remainder sequence as the primary path, fraction-free Bareiss on the
Sylvester matrix as the independent oracle), the explicit quadratic-cubic
resultant formula used by the derivation, exact division, reduction of
quadratic monomials modulo product relations, rewriting of symmetric
polynomials through elementary symmetric functions, and modular
specialization probes for the eliminations too large to expand.

Because the sign symbols satisfy E^2 = 1 the coefficient ring is a product
of 2^s copies of Q and has zero divisors.  Determinant-based operations
therefore split the computation over the sign assignments (each component
is an honest integral domain) and reassemble the result through the CRT
idempotents (1 +- E)/2.  The split is exact, not a sampling device.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from . import modp
from .poly import (
    FIELD_BITS,
    _BORROW_MASK,
    _FIELD_MASK,
    MINUS_INFINITY,
    NonExactDivisionError,
    Polynomial,
    PolyError,
    SIGN_NAMES,
    VarTable,
    ZeroPolynomialError,
)


class EliminationError(PolyError):
    pass


# --- exact division ---------------------------------------------------------

def exact_divide(p: Polynomial, d: Polynomial, max_steps: int = 200000) -> Polynomial:
    """Quotient q with q*d == p exactly; raises NonExactDivisionError otherwise.

    Greedy leading-term division is sound here because the leading term of the
    divisor is a single monomial times a unit, so it can never cancel.  When
    the division is exact every iteration emits one quotient term; max_steps
    bounds the wandering a non-exact division could otherwise do.
    """
    if d.is_zero():
        raise ZeroPolynomialError("division by the zero polynomial")
    if p.is_zero():
        return p.table.zero()
    p._check_same_table(d)
    table = p.table
    lead_key = d.leading_key()
    lead_bits, lead_packed = lead_key
    lead_coeff = Fraction(d.terms[lead_key])
    quotient: dict = {}
    remainder = p
    steps = 0
    while remainder.terms:
        steps += 1
        if steps > max_steps:
            raise NonExactDivisionError("division did not terminate within budget")
        r_bits, r_packed = remainder.leading_key()
        q_packed = r_packed - lead_packed
        if q_packed < 0 or (q_packed & _BORROW_MASK):
            raise NonExactDivisionError(
                "non-exact division: leading monomial not divisible")
        q_key = (r_bits ^ lead_bits, q_packed)
        q_coeff = Fraction(remainder.terms[(r_bits, r_packed)]) / lead_coeff
        q_coeff = int(q_coeff) if q_coeff.denominator == 1 else q_coeff
        quotient[q_key] = quotient.get(q_key, 0) + q_coeff
        remainder = remainder - Polynomial(table, {q_key: q_coeff}) * d
    return Polynomial(table, {k: c for k, c in quotient.items() if c})


# --- linear elimination -----------------------------------------------------

def linear_subst_cleared(
    f: Polynomial, var: str, numer: Polynomial, denom: Polynomial
) -> tuple[Polynomial, Polynomial]:
    """Substitute var := numer/denom into f and clear denominators.

    Returns (denom**d * f|_{var=numer/denom}, denom**d) where d is the degree
    of f in var.  The cleared factor is the caller's proof obligation: it must
    be nonzero under the standing hypotheses of the derivation.
    """
    if denom.is_zero():
        raise ZeroPolynomialError("zero denominator in linear substitution")
    coeffs = f.coefficients_in(var)
    d = len(coeffs) - 1
    if d <= 0:
        return f, f.table.one()
    result = f.table.zero()
    num_pow = f.table.one()
    den_pows = [f.table.one()]
    for _ in range(d):
        den_pows.append(den_pows[-1] * denom)
    for k, c in enumerate(coeffs):
        if c.terms:
            result = result + c * num_pow * den_pows[d - k]
        if k < d:
            num_pow = num_pow * numer
    return result, den_pows[d]


def solve_linear(f: Polynomial, var: str) -> tuple[Polynomial, Polynomial]:
    """Read var = numer/denom off an equation f == 0 that is linear in var."""
    if f.degree_in(var) != 1:
        raise EliminationError(f"expected degree 1 in {var}, found {f.degree_in(var)}")
    return -f.coefficient_of(var, 0), f.coefficient_of(var, 1)


# --- Cramer elimination of two quadratics -----------------------------------

@dataclass(frozen=True)
class EliminationResult:
    B1: Polynomial
    B2: Polynomial
    B3: Polynomial
    F: Polynomial
    cleared: tuple[str, ...] = ()
    sources: tuple[str, ...] = ()


def cramer_quadratic(p: Polynomial, q: Polynomial, var: str,
                     sources: tuple[str, ...] = ()) -> EliminationResult:
    """Treat p and q as quadratics c1+c2 v+c3 v^2 = 0 and c4+c5 v+c6 v^2 = 0
    in v = var and eliminate v by Cramer's rule on the pair (v^2, v):

        B1 = c2 c4 - c1 c5,  B2 = c3 c4 - c1 c6,  B3 = c3 c5 - c2 c6,
        F  = B2^2 - B1 B3.

    F vanishes wherever the two quadratics share a root, and -B2/B3 recovers
    that root when B3 is invertible.
    """
    dp, dq = p.degree_in(var), q.degree_in(var)
    if dp is MINUS_INFINITY or dq is MINUS_INFINITY or max(dp, dq) > 2:
        raise EliminationError(f"inputs must be quadratic in {var}")
    c1, c2, c3 = (p.coefficient_of(var, i) for i in range(3))
    c4, c5, c6 = (q.coefficient_of(var, i) for i in range(3))
    if c3.is_zero() and c6.is_zero():
        raise EliminationError(f"neither input is genuinely quadratic in {var}")
    B1 = c2 * c4 - c1 * c5
    B2 = c3 * c4 - c1 * c6
    B3 = c3 * c5 - c2 * c6
    return EliminationResult(B1, B2, B3, B2 * B2 - B1 * B3, sources=sources)


# --- sign splitting ----------------------------------------------------------

def sign_names_in(*polys: Polynomial) -> tuple[str, ...]:
    mask = 0
    for p in polys:
        mask |= p.sign_bits_used()
    return tuple(name for i, name in enumerate(SIGN_NAMES) if mask & (1 << i))


def sign_assignments(names: Sequence[str]) -> list[dict[str, int]]:
    out: list[dict[str, int]] = [{}]
    for name in names:
        out = [dict(a, **{name: v}) for a in out for v in (1, -1)]
    return out


def is_regular(p: Polynomial) -> bool:
    """True when p is nonzero in every sign component (not a zero divisor)."""
    if p.is_zero():
        return False
    names = sign_names_in(p)
    return all(not p.instantiate_signs(a).is_zero() for a in sign_assignments(names))


def _idempotent(table: VarTable, assign: Mapping[str, int]) -> Polynomial:
    out = table.one()
    half = Fraction(1, 2)
    for name, v in assign.items():
        out = out * ((table.one() + v * table.sign(name)) * half)
    return out


def signsplit_binary(
    p: Polynomial, q: Polynomial, fn: Callable[[Polynomial, Polynomial], Polynomial]
) -> Polynomial:
    """Compute fn componentwise over the sign assignments and reassemble.

    fn must commute with ring homomorphisms (true for any determinant
    expression), so the reassembled value is the value over the full ring.
    """
    names = sign_names_in(p, q)
    if not names:
        return fn(p, q)
    total = p.table.zero()
    for assign in sign_assignments(names):
        comp = fn(p.instantiate_signs(assign), q.instantiate_signs(assign))
        if comp.terms:
            total = total + _idempotent(p.table, assign) * comp
    return total


# --- resultants ---------------------------------------------------------------

def _prem(A: list[Polynomial], B: list[Polynomial]) -> list[Polynomial]:
    """Pseudo-remainder of coefficient lists: lc(B)^(dA-dB+1) * A mod B."""
    dB = len(B) - 1
    lb = B[-1]
    R = list(A)
    steps = len(A) - len(B) + 1
    while R and len(R) - 1 >= dB:
        lcR = R[-1]
        shift = len(R) - 1 - dB
        R = [lb * c for c in R]
        for i in range(dB + 1):
            R[shift + i] = R[shift + i] - lcR * B[i]
        R.pop()
        while R and R[-1].is_zero():
            R.pop()
        steps -= 1
    for _ in range(steps):
        R = [lb * c for c in R]
    return R


class _FactorBag:
    """Multiplicative bookkeeping: scalar * product(poly^exp) with exp in Z."""

    def __init__(self, table: VarTable):
        self.table = table
        self.scalar = Fraction(1)
        self.factors: dict[str, list] = {}

    def mul(self, poly: Polynomial, exp: int) -> None:
        if exp == 0 or poly.is_zero():
            if poly.is_zero() and exp > 0:
                self.scalar = Fraction(0)
            return
        if len(poly.terms) == 1 and (0, 0) in poly.terms:
            self.scalar *= Fraction(poly.terms[(0, 0)]) ** exp
            return
        entry = self.factors.setdefault(poly.digest(), [poly, 0])
        entry[1] += exp

    def apply(self, sign: int) -> Polynomial:
        num = self.table.const(self.scalar.numerator * sign)
        den = self.table.const(self.scalar.denominator)
        for poly, exp in self.factors.values():
            if exp > 0:
                num = num * poly ** exp
            elif exp < 0:
                den = den * poly ** (-exp)
        if den == self.table.one():
            return num
        return exact_divide(num, den)


def _resultant_prs_component(p: Polynomial, q: Polynomial, var: str) -> Polynomial:
    """Subresultant PRS resultant over a sign-free component.

    Remainders are divided by the Brown-Collins beta factors (psi chain);
    every division is checked exact.  Each step contributes the factor

        res(A, B) = (-1)^(dA dB) lc(B)^(dA - dR - (delta+1) dB) beta^dB res(B, R/beta)

    so the accumulated product reconstructs the true Sylvester determinant;
    a property test pins agreement with det_bareiss.
    """
    table = p.table
    A = p.coefficients_in(var)
    B = q.coefficients_in(var)
    if not A or not B:
        return table.zero()
    bag = _FactorBag(table)
    sign = 1
    if len(A) < len(B):
        if ((len(A) - 1) * (len(B) - 1)) % 2:
            sign = -sign
        A, B = B, A
    psi = table.const(-1)
    prev_lc: Polynomial | None = None
    delta_prev = 0
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        if dB == 0:
            bag.mul(B[0], dA)
            break
        delta = dA - dB
        R = _prem(A, B)
        if not R:
            return table.zero()
        dR = len(R) - 1
        if prev_lc is None:
            beta = table.const((-1) ** (delta + 1))
        else:
            if delta_prev == 1:
                psi = -prev_lc
            elif delta_prev > 1:
                psi = exact_divide((-prev_lc) ** delta_prev, psi ** (delta_prev - 1))
            beta = -prev_lc * psi ** delta
        try:
            Rt = [exact_divide(c, beta) for c in R]
        except NonExactDivisionError:
            # Correctness does not depend on the beta choice, only growth
            # control does; fall back to no division.
            beta = table.one()
            Rt = R
        if (dA * dB) % 2:
            sign = -sign
        lcB = B[-1]
        bag.mul(lcB, dA - dR - (delta + 1) * dB)
        bag.mul(beta, dB)
        prev_lc = lcB
        delta_prev = delta
        A, B = B, Rt
    return bag.apply(sign)


def resultant_prs(p: Polynomial, q: Polynomial, var: str) -> Polynomial:
    """Resultant via pseudo-remainder sequences (sign-split when needed)."""
    _require_positive_degree(p, q, var)
    _require_regular_leads(p, q, var)
    return signsplit_binary(p, q, lambda a, b: _resultant_prs_component(a, b, var))


def sylvester_matrix_sym(p: Polynomial, q: Polynomial, var: str,
                         dims: tuple[int, int] | None = None) -> list[list[Polynomial]]:
    table = p.table
    A = p.coefficients_in(var)
    B = q.coefficients_in(var)
    m = dims[0] if dims else len(A) - 1
    n = dims[1] if dims else len(B) - 1
    zero = table.zero()
    A = A + [zero] * (m + 1 - len(A))
    B = B + [zero] * (n + 1 - len(B))
    fr = list(reversed(A[: m + 1]))
    gr = list(reversed(B[: n + 1]))
    rows = []
    for i in range(n):
        rows.append([zero] * i + fr + [zero] * (n - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gr + [zero] * (m - 1 - i))
    return rows


def det_bareiss(matrix: list[list[Polynomial]]) -> Polynomial:
    """Fraction-free Bareiss determinant of a matrix of polynomials.

    Valid over an integral domain; callers with sign symbols go through
    resultant_bareiss, which sign-splits first.
    """
    n = len(matrix)
    if n == 0:
        raise EliminationError("empty matrix")
    table = matrix[0][0].table
    if n == 1:
        return matrix[0][0]
    m = [row[:] for row in matrix]
    sign = 1
    prev = table.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return table.zero()
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                elt = pivot * m[i][j] - m[i][k] * m[k][j]
                if k > 0:
                    elt = exact_divide(elt, prev)
                m[i][j] = elt
            m[i][k] = table.zero()
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def resultant_bareiss(p: Polynomial, q: Polynomial, var: str) -> Polynomial:
    """Sylvester determinant via Bareiss; the oracle path for dims <= 12."""
    _require_positive_degree(p, q, var)
    _require_regular_leads(p, q, var)
    dims = (int(p.degree_in(var)), int(q.degree_in(var)))
    return signsplit_binary(
        p, q, lambda a, b: det_bareiss(sylvester_matrix_sym(a, b, var, dims=dims)))


BAREISS_ORACLE_LIMIT = 12


def resultant(p: Polynomial, q: Polynomial, var: str,
              cross_check: bool | None = None) -> Polynomial:
    """Resultant of p and q with respect to var.

    PRS is the primary algorithm.  When the Sylvester dimension is within
    BAREISS_ORACLE_LIMIT (or cross_check is forced) the Bareiss determinant
    is computed as an independent oracle and must agree exactly.
    """
    res = resultant_prs(p, q, var)
    dim = int(p.degree_in(var)) + int(q.degree_in(var))
    if cross_check is None:
        cross_check = dim <= BAREISS_ORACLE_LIMIT
    if cross_check:
        oracle = resultant_bareiss(p, q, var)
        if res != oracle:
            raise EliminationError(
                f"PRS and Bareiss disagree on a resultant in {var} (dim {dim})")
    return res


def _require_positive_degree(p: Polynomial, q: Polynomial, var: str) -> None:
    if p.degree_in(var) in (MINUS_INFINITY, 0) or q.degree_in(var) in (MINUS_INFINITY, 0):
        raise EliminationError(f"resultant inputs must have positive degree in {var}")


def _require_regular_leads(p: Polynomial, q: Polynomial, var: str) -> None:
    for poly in (p, q):
        lead = poly.coefficient_of(var, int(poly.degree_in(var)))
        if not is_regular(lead):
            raise EliminationError(
                f"leading coefficient in {var} vanishes in some sign component; "
                "instantiate signs before eliminating")


# --- closed elimination formulas ---------------------------------------------

# Expansion of the displayed quadratic-cubic eliminant:
# index 0..2 -> c1..c3, index 3..6 -> D0..D3.
_CLOSED_FORM_TERMS: tuple[tuple[int, tuple[int, ...]], ...] = (
    (1, (0, 2, 2, 4, 4)),    # c1 c3^2 D1^2
    (-2, (0, 2, 2, 3, 5)),   # -2 c1 c3^2 D0 D2
    (3, (0, 1, 2, 3, 6)),    # 3 c1 c2 c3 D0 D3
    (-1, (0, 1, 2, 4, 5)),   # -c1 c2 c3 D1 D2
    (1, (0, 0, 2, 5, 5)),    # c1^2 c3 D2^2
    (-2, (0, 0, 2, 4, 6)),   # -2 c1^2 c3 D1 D3
    (1, (0, 0, 0, 6, 6)),    # c1^3 D3^2
    (-1, (0, 0, 1, 5, 6)),   # -c1^2 c2 D2 D3
    (1, (0, 1, 1, 4, 6)),    # c1 c2^2 D1 D3
    (-1, (1, 1, 1, 3, 6)),   # -c2^3 D0 D3
    (1, (1, 1, 2, 3, 5)),    # c2^2 c3 D0 D2
    (-1, (1, 2, 2, 3, 4)),   # -c2 c3^2 D0 D1
    (1, (2, 2, 2, 3, 3)),    # c3^3 D0^2
)


def cubic_quadratic_closed_form(
    c: Sequence[Polynomial], D: Sequence[Polynomial]
) -> Polynomial:
    """The explicit eliminant of a quadratic c1+c2 x+c3 x^2 and a cubic
    D0+D1 x+D2 x^2+D3 x^3; agrees with the Sylvester resultant up to a fixed
    unit (proved once symbolically in the tests)."""
    if len(c) != 3 or len(D) != 4:
        raise EliminationError("expected three quadratic and four cubic coefficients")
    pool = tuple(c) + tuple(D)
    table = pool[0].table
    total = table.zero()
    for scalar, idxs in _CLOSED_FORM_TERMS:
        prod = table.const(scalar)
        for i in idxs:
            prod = prod * pool[i]
        total = total + prod
    return total


def closed_form_top_band(
    c: Sequence[Polynomial], D: Sequence[Polynomial], var: str, min_deg: int
) -> tuple[dict[int, Polynomial], int]:
    """Coefficients of var^d (d >= min_deg) of the closed-form eliminant,
    computed bandwise without expanding the full polynomial, together with
    the rigorous degree upper bound implied by the factor degrees."""
    pool = tuple(c) + tuple(D)
    table = pool[0].table
    lists = [f.coefficients_in(var) for f in pool]
    bound = 0
    bands: dict[int, Polynomial] = {}
    for scalar, idxs in _CLOSED_FORM_TERMS:
        degs = [len(lists[i]) - 1 for i in idxs]
        if any(d < 0 for d in degs):
            continue
        term_bound = sum(degs)
        bound = max(bound, term_bound)
        cur: dict[int, Polynomial] = {0: table.const(scalar)}
        rem = term_bound
        for pos, i in enumerate(idxs):
            rem -= degs[pos]
            lower = min_deg - rem
            nxt: dict[int, Polynomial] = {}
            for d1, c1 in cur.items():
                for d2, c2 in enumerate(lists[i]):
                    if c2.is_zero():
                        continue
                    d = d1 + d2
                    if d < lower:
                        continue
                    prod = c1 * c2
                    if d in nxt:
                        nxt[d] = nxt[d] + prod
                    else:
                        nxt[d] = prod
            cur = nxt
        for d, val in cur.items():
            if d < min_deg or val.is_zero():
                continue
            bands[d] = bands[d] + val if d in bands else val
    return {d: v for d, v in bands.items() if not v.is_zero()}, bound


def quadratic_linear_resultant(c: Sequence[Polynomial], e: Sequence[Polynomial]) -> Polynomial:
    """res_x(c0 + c1 x + c2 x^2, e0 + e1 x) = c2 e0^2 - c1 e0 e1 + c0 e1^2."""
    c0, c1, c2 = c
    e0, e1 = e
    return c2 * e0 * e0 - c1 * e0 * e1 + c0 * e1 * e1


# --- relation-driven rewriting ------------------------------------------------

def reduce_quadratic_monomials(
    p: Polynomial, relations: Mapping[tuple[str, str], Polynomial]
) -> Polynomial:
    """Rewrite every monomial containing a product v_i v_j (or square v_i^2)
    listed in relations by the given replacement, to fixpoint.

    Deterministic strategy: squares are rewritten before mixed products, and
    both groups are tried in variable-index order.
    """
    table = p.table
    squares = []
    pairs = []
    for (a, b), repl in relations.items():
        ia, ib = table.index(a), table.index(b)
        if ia > ib:
            ia, ib = ib, ia
        (squares if ia == ib else pairs).append((ia, ib, repl))
    squares.sort(key=lambda t: t[:2])
    pairs.sort(key=lambda t: t[:2])
    ordered = squares + pairs
    while True:
        out = table.zero()
        changed = False
        for (bits, packed), coeff in p.terms.items():
            applied = False
            for ia, ib, repl in ordered:
                ea = (packed >> (FIELD_BITS * ia)) & _FIELD_MASK
                if ia == ib:
                    if ea >= 2:
                        lowered = packed - (2 << (FIELD_BITS * ia))
                        out = out + Polynomial(table, {(bits, lowered): coeff}) * repl
                        applied = True
                        break
                else:
                    eb = (packed >> (FIELD_BITS * ib)) & _FIELD_MASK
                    if ea >= 1 and eb >= 1:
                        lowered = packed - (1 << (FIELD_BITS * ia)) - (1 << (FIELD_BITS * ib))
                        out = out + Polynomial(table, {(bits, lowered): coeff}) * repl
                        applied = True
                        break
            if applied:
                changed = True
            else:
                out = out + Polynomial(table, {(bits, packed): coeff})
        p = out
        if not changed:
            return p


def reduce_symmetric(
    p: Polynomial,
    vars3: tuple[str, str, str],
    e1_value: Polynomial,
    e2_value: Polynomial,
    e3_value: Polynomial,
) -> Polynomial:
    """Rewrite a polynomial symmetric in vars3 through the elementary
    symmetric functions, substituting the given values for them.

    Raises if p is not actually symmetric in the three variables.
    """
    table = p.table
    ix = tuple(table.index(v) for v in vars3)
    x, y, z = (table.var(v) for v in vars3)
    e1 = x + y + z
    e2 = x * y + x * z + y * z
    e3 = x * y * z

    def triple(packed: int) -> tuple[int, int, int]:
        return (
            (packed >> (FIELD_BITS * ix[0])) & _FIELD_MASK,
            (packed >> (FIELD_BITS * ix[1])) & _FIELD_MASK,
            (packed >> (FIELD_BITS * ix[2])) & _FIELD_MASK,
        )

    out = table.zero()
    remaining = p
    guard = 0
    while True:
        guard += 1
        if guard > 100000:
            raise EliminationError("symmetric reduction failed to terminate")
        lead = None
        for (_, packed) in remaining.terms:
            t = triple(packed)
            if any(t) and (lead is None or t > lead):
                lead = t
        if lead is None:
            return out + remaining
        a, b, c = lead
        if not (a >= b >= c):
            raise EliminationError(
                f"polynomial is not symmetric in {vars3}: leading exponents {lead}")
        coeff = remaining
        for name, e in zip(vars3, lead):
            coeff = coeff.coefficient_of(name, e)
        basis = e1 ** (a - b) * e2 ** (b - c) * e3 ** c
        value = e1_value ** (a - b) * e2_value ** (b - c) * e3_value ** c
        out = out + coeff * value
        remaining = remaining - coeff * basis


# --- modular specialization probes ---------------------------------------------

@dataclass
class ProbeReport:
    var: str
    prime: int
    seed: int
    trials: int
    nonzero: int = 0
    zero_trials: list[int] = field(default_factory=list)
    resamples: int = 0
    degenerate: bool = False
    image_degrees: tuple[int, int] = (0, 0)
    resultant_runs: int = 0
    algorithms_agree: bool = True

    @property
    def verdict(self) -> str:
        if self.degenerate:
            return "degenerate specialization"
        if not self.algorithms_agree:
            return "algorithm disagreement"
        if self.nonzero == self.trials:
            return "nonzero"
        return f"zero in {len(self.zero_trials)}/{self.trials} trials"

    def as_dict(self) -> dict:
        return {
            "var": self.var,
            "prime": self.prime,
            "seed": self.seed,
            "trials": self.trials,
            "nonzero": self.nonzero,
            "zero_trials": list(self.zero_trials),
            "resamples": self.resamples,
            "image_degrees": list(self.image_degrees),
            "algorithms_agree": self.algorithms_agree,
            "verdict": self.verdict,
        }


MAX_RESAMPLES_PER_TRIAL = 64


def modular_resultant_probe(
    p: Polynomial,
    q: Polynomial,
    var: str,
    prime: int,
    trials: int,
    seed: int,
) -> ProbeReport:
    """Specialize every variable except var at random residues (signs at +-1),
    compute the univariate resultants mod prime with both the remainder
    sequence and Bareiss-Sylvester, and report agreement plus zero/nonzero
    statistics.  Deterministic for a fixed seed.
    """
    if prime <= (1 << 60):
        raise EliminationError("probe prime must exceed 2^60")
    if not modp.is_prime(prime):
        raise EliminationError(f"{prime} is not prime")
    rng = random.Random(seed)
    dp, dq = p.degree_in(var), q.degree_in(var)
    if dp is MINUS_INFINITY or dq is MINUS_INFINITY:
        raise EliminationError("probe inputs must involve the elimination variable")
    other = sorted((set(p.variables()) | set(q.variables())) - {var})
    signs = sign_names_in(p, q)
    report = ProbeReport(var=var, prime=prime, seed=seed, trials=trials,
                         image_degrees=(int(dp), int(dq)))
    for trial in range(trials):
        for _attempt in range(MAX_RESAMPLES_PER_TRIAL):
            assignment = {name: rng.randrange(1, prime) for name in other}
            sign_choice = {name: rng.choice((1, -1)) for name in signs}
            fp = modp.specialize_univariate(p, var, assignment, sign_choice, prime)
            fq = modp.specialize_univariate(q, var, assignment, sign_choice, prime)
            if len(fp) - 1 == dp and len(fq) - 1 == dq:
                break
            report.resamples += 1
        else:
            report.degenerate = True
            return report
        r1 = modp.resultant_euclid(fp, fq, prime)
        r2 = modp.resultant_bareiss(fp, fq, prime)
        report.resultant_runs += 1
        if r1 != r2:
            report.algorithms_agree = False
            return report
        if r1 == 0:
            report.zero_trials.append(trial)
        else:
            report.nonzero += 1
    return report
