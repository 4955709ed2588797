"""Dunkl, Cherednik-Dunkl and Jucys-Murphy operators on vector-valued
polynomials.

All operators are exact and work either at generic parameter (RatFunc
coefficients) or at a fixed rational value (Fraction coefficients); pass the
matching ``kappa``.  Divided differences are evaluated by the closed telescoping
formula for monomials, which is the exact quotient by ``x_i - x_j``.
"""

from __future__ import annotations

from fractions import Fraction

from .combinatorics import transposition
from .ratfunc import KAPPA, RatFunc
from .vectorpoly import VectorPoly, group_action, tau_context


def _divided_difference_monomials(exp, i, j):
    """Monomials of x_i * (x^exp - x^{exp swapped at i,j}) / (x_i - x_j),
    yielded as (exponent, sign). Empty when exp_i == exp_j."""
    p, q = exp[i - 1], exp[j - 1]
    if p == q:
        return
    base = list(exp)
    if p > q:
        for t in range(p - q):
            base[i - 1] = q + t + 1
            base[j - 1] = p - 1 - t
            yield tuple(base), 1
    else:
        for t in range(q - p):
            base[i - 1] = p + t + 1
            base[j - 1] = q - 1 - t
            yield tuple(base), -1


def _accumulate(acc, key, value):
    old = acc.get(key)
    new = value if old is None else old + value
    if new:
        acc[key] = new
    elif old is not None:
        del acc[key]


def dunkl(i: int, p: VectorPoly, kappa=None) -> VectorPoly:
    """Dunkl operator: partial derivative plus kappa times the sum of divided
    differences twisted by the transposition action."""
    if kappa is None:
        kappa = KAPPA
    ctx = tau_context(p.shape)
    n = p.n
    acc = {}
    for (exp, tab), coeff in p.terms.items():
        if exp[i - 1]:
            d = list(exp)
            d[i - 1] -= 1
            _accumulate(acc, (tuple(d), tab), coeff * exp[i - 1])
        for j in range(1, n + 1):
            if j == i or exp[i - 1] == exp[j - 1]:
                continue
            col = ctx.transposition_matrix(i, j)[tab]
            kc = kappa * coeff
            # x_i * divided difference carries one extra power of x_i; strip it
            for new_exp, sign in _divided_difference_monomials(exp, i, j):
                stripped = list(new_exp)
                stripped[i - 1] -= 1
                key_exp = tuple(stripped)
                for row, c in col:
                    _accumulate(acc, (key_exp, row), kc * (sign * c))
    return VectorPoly(p.shape, acc)


def jucys_murphy(i: int, p: VectorPoly) -> VectorPoly:
    """Sum of transpositions (i, j) over j > i acting on the module; the
    top index gives the zero operator."""
    out = VectorPoly.zero(p.shape)
    for j in range(i + 1, p.n + 1):
        out = out + group_action(transposition(p.n, i, j), p)
    return out


def _x_dunkl(i: int, p: VectorPoly, kappa) -> VectorPoly:
    e_i = tuple(int(t == i - 1) for t in range(p.n))
    return dunkl(i, p, kappa).mul_monomial(e_i)


def cherednik(i: int, p: VectorPoly, kappa=None) -> VectorPoly:
    """Cherednik-Dunkl operator x_i D_i + 1 + kappa * sum_{j>i} (i,j)."""
    if kappa is None:
        kappa = KAPPA
    return _x_dunkl(i, p, kappa) + p + jucys_murphy(i, p).scale(kappa)


def cherednik_prime(i: int, p: VectorPoly, kappa=None) -> VectorPoly:
    """Modified operator (1/kappa) x_i D_i + omega_i, with spectrum
    alpha_i / kappa + content on the Jack basis."""
    if kappa is None:
        inv = RatFunc.kappa_inverse()
        kappa = KAPPA
    else:
        inv = Fraction(1) / Fraction(kappa)
    return _x_dunkl(i, p, kappa).scale(inv) + jucys_murphy(i, p)


def cherednik_from_definition(i: int, p: VectorPoly, kappa=None) -> VectorPoly:
    """The defining expression D_i(x_i p) - kappa * sum_{j<i} (i,j) p; equals
    cherednik(i, p) and is kept as an independent cross-check."""
    if kappa is None:
        kappa = KAPPA
    e_i = tuple(int(t == i - 1) for t in range(p.n))
    out = dunkl(i, p.mul_monomial(e_i), kappa)
    for j in range(1, i):
        out = out - group_action(transposition(p.n, i, j), p).scale(kappa)
    return out


def is_singular_at(p: VectorPoly, kappa0, indices=None) -> bool:
    """Whether every Dunkl operator kills the (specialized) polynomial."""
    kappa0 = Fraction(kappa0)
    for i in indices or range(1, p.n + 1):
        if not dunkl(i, p, kappa0).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# matrix assembly on a fixed basis (used by the projection constructor)
# ---------------------------------------------------------------------------


def uprime_column(i: int, exp, tab: int, ctx) -> dict:
    """Column of the modified Cherednik-Dunkl operator on one basis monomial.

    Entries are pairs (nu, const) meaning nu * (1/kappa) + const with Fraction
    parts; only the diagonal carries a 1/kappa part.  The departing monomial
    of each telescoped difference cancels against the Jucys-Murphy term for
    j > i, so all images stay within the order ideal of the leading exponent.
    """
    n = len(exp)
    col = {}

    def add(key, nu, const):
        old = col.get(key, (0, 0))
        new = (old[0] + nu, old[1] + const)
        if new == (0, 0):
            col.pop(key, None)
        else:
            col[key] = new

    if exp[i - 1]:
        add((exp, tab), Fraction(exp[i - 1]), 0)
    for j in range(1, n + 1):
        if j == i:
            continue
        tcol = None
        if exp[i - 1] != exp[j - 1]:
            tcol = ctx.transposition_matrix(i, j)[tab]
            for new_exp, sign in _divided_difference_monomials(exp, i, j):
                for row, c in tcol:
                    add((new_exp, row), 0, sign * c)
        if j > i:
            swapped = list(exp)
            swapped[i - 1], swapped[j - 1] = swapped[j - 1], swapped[i - 1]
            if tcol is None:
                tcol = ctx.transposition_matrix(i, j)[tab]
            for row, c in tcol:
                add((tuple(swapped), row), 0, c)
    return col
