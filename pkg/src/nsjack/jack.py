"""Construction of vector-valued nonsymmetric Jack polynomials over Q(kappa).

The constructor starts from the triangular leading term and applies the
commuting spectral projections

    (U'_i - v) / (zeta(i) - v)

one for each lower label, where v runs over the spectral values that must be
annihilated.  Identical factors act idempotently on the relevant span, so each
distinct (index, value) pair is applied once.

The hot loop works on an invariant basis (the order ideal of the leading
exponent tensored with all tableaux) with coefficients written as integer
polynomials in 1/kappa packed into single big integers (fixed-width signed
digits), so a projection step is a handful of big-integer multiply-adds per
matrix entry.  A running digit-width bound computed from the matrices makes
the packing provably overflow-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .combinatorics import (
    Rsyt,
    compositions_strictly_below,
    rank_permutation,
    transposition,
)
from .operators import cherednik_prime, uprime_column
from .ratfunc import PoleAtKappa, RatFunc
from .vectorpoly import VectorPoly, group_action, leading_vector, tau_context


class ZeroDenominator(ZeroDivisionError):
    """Adjacent spectral values coincide identically (invalid label data)."""


# ---------------------------------------------------------------------------
# spectral vectors
# ---------------------------------------------------------------------------


def spectral_pairs(alpha, tableau: Rsyt) -> tuple[tuple[int, int], ...]:
    """Entries of the spectral vector as exact integer pairs (a, c) meaning
    a / kappa + c; equality of pairs is equality in Q(kappa)."""
    alpha = tuple(alpha)
    r = rank_permutation(alpha)
    return tuple(
        (alpha[i], tableau.content(r[i])) for i in range(len(alpha))
    )


def spectral_vector(alpha, tableau: Rsyt) -> tuple[RatFunc, ...]:
    """zeta'(i) = alpha_i / kappa + content(r_alpha(i)) as field elements."""
    return tuple(
        RatFunc((a, c), (0, 1)) if a else RatFunc.from_int(c)
        for a, c in spectral_pairs(alpha, tableau)
    )


def spectral_vector_at(alpha, tableau: Rsyt, kappa0) -> tuple[Fraction, ...]:
    kappa0 = Fraction(kappa0)
    return tuple(
        Fraction(a, 1) / kappa0 + c for a, c in spectral_pairs(alpha, tableau)
    )


def b_value(alpha, tableau: Rsyt, i: int) -> RatFunc:
    """Reciprocal spectral gap 1 / (zeta'(i) - zeta'(i+1))."""
    pairs = spectral_pairs(alpha, tableau)
    da = pairs[i - 1][0] - pairs[i][0]
    dc = pairs[i - 1][1] - pairs[i][1]
    if da == 0 and dc == 0:
        raise ZeroDenominator(f"spectral entries {i} and {i + 1} coincide")
    # 1 / (da/kappa + dc) = kappa / (da + dc*kappa)
    return RatFunc((0, 1), (da, dc))


# ---------------------------------------------------------------------------
# result type
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class JackPolynomial:
    alpha: tuple[int, ...]
    tableau: Rsyt
    poly: VectorPoly
    spectral: tuple[RatFunc, ...]

    @property
    def shape(self):
        return self.tableau.shape

    def monomial_count(self) -> int:
        return len(self.poly.monomial_support())


# ---------------------------------------------------------------------------
# packed polynomials in nu = 1/kappa
# ---------------------------------------------------------------------------


def _decode_digits(n: int, width: int) -> list[int]:
    out = []
    mask = (1 << width) - 1
    half = 1 << (width - 1)
    while n:
        r = n & mask
        if r >= half:
            r -= 1 << width
        out.append(r)
        n = (n - r) >> width
    return out


def _try_div_linear(poly: list[int], a: int, b: int) -> list[int] | None:
    """Exact quotient of an integer polynomial by a*nu + b, or None."""
    if not poly:
        return []
    if len(poly) == 1:
        return None
    d = len(poly) - 1
    q = [0] * d
    carry = poly[d]
    for t in range(d, 0, -1):
        if carry % a:
            return None
        qt = carry // a
        q[t - 1] = qt
        carry = poly[t - 1] - b * qt
    if carry:
        return None
    return q


def _nu_fraction_to_ratfunc(num: list[int], den: list[int]) -> RatFunc:
    """num(nu)/den(nu) with nu = 1/kappa, as a canonical element of Q(kappa)."""
    width = max(len(num), len(den))
    num_k = [0] * width
    den_k = [0] * width
    for t, c in enumerate(num):
        num_k[width - 1 - t] = c
    for t, c in enumerate(den):
        den_k[width - 1 - t] = c
    return RatFunc(num_k, den_k)


# ---------------------------------------------------------------------------
# the projection constructor
# ---------------------------------------------------------------------------


def _jack_basis(alpha, dim: int):
    lower = compositions_strictly_below(alpha)
    exps = sorted(lower) + [tuple(alpha)]
    basis = [(exp, t) for exp in exps for t in range(dim)]
    index = {key: pos for pos, key in enumerate(basis)}
    return lower, basis, index


def _projection_factors(alpha, tableau, lower, ctx):
    """Deduplicated (index, value) pairs, one annihilating factor for every
    lower label; the smallest separating index is chosen for each."""
    target = spectral_pairs(alpha, tableau)
    n = len(target)
    factors = set()
    for gamma in lower:
        r = rank_permutation(gamma)
        for tab in ctx.tableaux:
            for i in range(n):
                pair = (gamma[i], tab.content(r[i]))
                if pair != target[i]:
                    factors.add((i + 1, pair))
                    break
            else:
                raise AssertionError(
                    f"spectral collision between {(alpha, tableau)} and "
                    f"{(gamma, tab)}"
                )
    return sorted(factors)


def _scaled_matrix(i, basis, index, ctx):
    """Integer-scaled sparse columns of U'_i on the basis: entries
    (row, a, b) meaning (a/denominator) * (1/kappa) + b/denominator."""
    raw_cols = []
    denom = 1
    for exp, tab in basis:
        col = uprime_column(i, exp, tab, ctx)
        entries = []
        for key, (nu, const) in col.items():
            row = index.get(key)
            assert row is not None, "projection basis is not invariant"
            entries.append((row, nu, const))
            denom = lcm(denom, nu.denominator, const.denominator)
        raw_cols.append(entries)
    cols = [
        [(row, int(nu * denom), int(const * denom)) for row, nu, const in entries]
        for entries in raw_cols
    ]
    return cols, denom


@lru_cache(maxsize=512)
def _construct_cached(alpha: tuple[int, ...], contents: tuple[int, ...]):
    from .combinatorics import rsyt_from_contents

    return _construct(alpha, rsyt_from_contents(contents))


def construct_jack(alpha, tableau: Rsyt) -> JackPolynomial:
    """The Jack polynomial with the given label, exactly over Q(kappa).

    Leading coefficient is 1, every other exponent is strictly below the
    label in the composition order, and U'_i acts by the spectral value for
    every i (asserted by the test suite against independent solves).
    """
    alpha = tuple(alpha)
    if len(alpha) != tableau.n:
        raise ValueError(f"label length {len(alpha)} != {tableau.n} variables")
    if any(a < 0 for a in alpha):
        raise ValueError("exponents must be nonnegative")
    return _construct_cached(alpha, tableau.content_vector())


def _construct(alpha, tableau: Rsyt) -> JackPolynomial:
    ctx = tau_context(tableau.shape)
    start = leading_vector(alpha, tableau)
    spectral = spectral_vector(alpha, tableau)
    lower, basis, index = _jack_basis(alpha, ctx.dim)
    if not lower:
        return JackPolynomial(alpha, tableau, start, spectral)
    factors = _projection_factors(alpha, tableau, lower, ctx)
    target = spectral_pairs(alpha, tableau)

    matrices = {}
    for i in sorted({i for i, _ in factors}):
        matrices[i] = _scaled_matrix(i, basis, index, ctx)

    # integer starting vector (constant digits)
    start_coeffs = {}
    d0 = 1
    for (exp, tab), coeff in start.terms.items():
        q = coeff.as_fraction()
        start_coeffs[index[(exp, tab)]] = q
        d0 = lcm(d0, q.denominator)
    dim = len(basis)
    vec = [0] * dim
    start_max = 1
    for pos, q in start_coeffs.items():
        vec[pos] = int(q * d0)
        start_max = max(start_max, abs(vec[pos]))

    # provably sufficient digit width for the whole product
    bits = start_max.bit_length() + 16
    denom_int = d0
    scaled_factors = []
    for i, (va, vb) in factors:
        cols, d_i = matrices[i]
        za, zc = target[i - 1]
        dz = (za - va, zc - vb)
        assert dz != (0, 0)
        dva, dvb = d_i * va, d_i * vb
        row_amp = [abs(dva) + abs(dvb)] * dim
        for entries in cols:
            for row, a, b in entries:
                row_amp[row] += abs(a) + abs(b)
        bits += max(row_amp).bit_length() + 1
        scaled_factors.append((i, dva, dvb, d_i, dz))
        denom_int *= d_i
    width = max(64, bits)

    denom_linears = []
    for _, _, _, _, (dza, dzc) in scaled_factors:
        if dza == 0:
            denom_int *= dzc
            continue
        g = gcd(abs(dza), abs(dzc))
        if dza < 0:
            g = -g
        denom_int *= g
        denom_linears.append((dza // g, dzc // g))

    for i, dva, dvb, d_i, _ in scaled_factors:
        cols, _ = matrices[i]
        out = [0] * dim
        for col in range(dim):
            u = vec[col]
            if not u:
                continue
            shifted = u << width
            for row, a, b in cols[col]:
                out[row] += a * shifted + b * u
            out[col] -= dva * shifted + dvb * u
        vec = out

    terms = {}
    for pos, packed in enumerate(vec):
        if not packed:
            continue
        digits = _decode_digits(packed, width)
        remaining = []
        for a, b in denom_linears:
            quotient = _try_div_linear(digits, a, b)
            if quotient is None:
                remaining.append((a, b))
            else:
                digits = quotient
        den = [denom_int]
        for a, b in remaining:
            new = [0] * (len(den) + 1)
            for t, c in enumerate(den):
                new[t] += b * c
                new[t + 1] += a * c
            den = new
        coeff = _nu_fraction_to_ratfunc(digits, den)
        if coeff:
            terms[basis[pos]] = coeff

    poly = VectorPoly(tableau.shape, terms)
    assert poly.tableau_component(alpha) == start.tableau_component(alpha), (
        "projection altered the leading term"
    )
    return JackPolynomial(alpha, tableau, poly, spectral)


# ---------------------------------------------------------------------------
# specialization
# ---------------------------------------------------------------------------


def specialize(jack: JackPolynomial, kappa0) -> VectorPoly:
    """Evaluate every coefficient at kappa = kappa0.

    Raises PoleAtKappa carrying the offending exponents when any denominator
    vanishes; a pole is a meaningful outcome, not an internal failure.
    """
    kappa0 = Fraction(kappa0)
    out = {}
    poles = set()
    for (exp, tab), coeff in jack.poly.terms.items():
        try:
            out[(exp, tab)] = coeff.evaluate(kappa0)
        except PoleAtKappa:
            poles.add(exp)
    if poles:
        err = PoleAtKappa(kappa0, f"{len(poles)} offending exponents")
        err.exponents = sorted(poles)
        raise err
    return VectorPoly(jack.shape, out)


# ---------------------------------------------------------------------------
# transformation under simple reflections
# ---------------------------------------------------------------------------


class ReflectionCase(Enum):
    EXPONENT_RAISE = "exponent_raise"  # alpha_{i+1} > alpha_i
    EXPONENT_LOWER = "exponent_lower"  # alpha_i > alpha_{i+1}
    ROW_EIGENVECTOR = "row_eigenvector"  # adjacent entries share a row: +1
    COLUMN_EIGENVECTOR = "column_eigenvector"  # share a column: -1
    TABLEAU_RAISE = "tableau_raise"  # entry swap valid, reciprocal gap > 0
    TABLEAU_LOWER = "tableau_lower"  # entry swap valid, reciprocal gap < 0


@dataclass(frozen=True)
class ReflectionResult:
    case: ReflectionCase
    b: RatFunc
    scalar: RatFunc  # (s_i - b) J = scalar * J_new, or the eigenvalue
    result: JackPolynomial


class NotAnRsyt(ValueError):
    """Entry swap would break the tableau conditions (eigenvector cases)."""


def apply_simple_reflection(
    i: int, jack: JackPolynomial, verify: bool = True
) -> ReflectionResult:
    """Transform a Jack polynomial by the simple reflection swapping i, i+1.

    Dispatches on the label: unequal adjacent exponents swap the exponent
    (scaled by 1 - b^2 in the lowering direction); equal exponents act on the
    tableau, giving an eigenvector when the moved entries share a row or
    column and an entry swap otherwise.
    """
    alpha, tableau = jack.alpha, jack.tableau
    n = len(alpha)
    if not 1 <= i < n:
        raise ValueError(f"index {i} out of range 1..{n - 1}")
    b = b_value(alpha, tableau, i)
    one = RatFunc.from_int(1)
    swapped = group_action(transposition(n, i, i + 1), jack.poly)

    if alpha[i] > alpha[i - 1]:
        new_alpha = alpha[: i - 1] + (alpha[i], alpha[i - 1]) + alpha[i + 1 :]
        new = _labelled(new_alpha, tableau, swapped - jack.poly.scale(b), verify)
        return ReflectionResult(ReflectionCase.EXPONENT_RAISE, b, one, new)
    if alpha[i - 1] > alpha[i]:
        new_alpha = alpha[: i - 1] + (alpha[i], alpha[i - 1]) + alpha[i + 1 :]
        factor = one - b * b
        new_poly = (swapped - jack.poly.scale(b)).scale(factor.inverse())
        new = _labelled(new_alpha, tableau, new_poly, verify)
        return ReflectionResult(ReflectionCase.EXPONENT_LOWER, b, factor, new)

    j = rank_permutation(alpha)[i - 1]
    rj, cj = tableau.cell(j)
    rj1, cj1 = tableau.cell(j + 1)
    if rj == rj1:
        return ReflectionResult(ReflectionCase.ROW_EIGENVECTOR, b, one, jack)
    if cj == cj1:
        return ReflectionResult(ReflectionCase.COLUMN_EIGENVECTOR, b, -one, jack)
    new_tableau = Rsyt(tableau.swap_entries(j))
    if cj > cj1:
        new = _labelled(alpha, new_tableau, swapped - jack.poly.scale(b), verify)
        return ReflectionResult(ReflectionCase.TABLEAU_RAISE, b, one, new)
    factor = one - b * b
    new_poly = (swapped - jack.poly.scale(b)).scale(factor.inverse())
    new = _labelled(alpha, new_tableau, new_poly, verify)
    return ReflectionResult(ReflectionCase.TABLEAU_LOWER, b, factor, new)


def _labelled(alpha, tableau, poly, verify: bool) -> JackPolynomial:
    jack = JackPolynomial(tuple(alpha), tableau, poly, spectral_vector(alpha, tableau))
    lead = leading_vector(alpha, tableau)
    assert poly.tableau_component(alpha) == lead.tableau_component(alpha)
    if verify:
        verify_eigen_equations(jack)
    return jack


def verify_eigen_equations(jack: JackPolynomial, indices=None):
    """Assert U'_i J = zeta'(i) J over Q(kappa) for the given indices."""
    for i in indices or range(1, len(jack.alpha) + 1):
        lhs = cherednik_prime(i, jack.poly)
        rhs = jack.poly.scale(jack.spectral[i - 1])
        if lhs != rhs:
            raise AssertionError(
                f"eigen equation fails at index {i} for label "
                f"({jack.alpha}, {jack.tableau.rows})"
            )
