"""The module of vector-valued polynomials: scalars tensored with the span of
RSYT of a fixed shape, carrying the symmetric group action
``w(p)(x) = tau(w) p(xw)``.

The tableau span carries Young's seminormal action, realized through the
degree-zero transformation rules: for adjacent entries in the same row a
simple reflection acts by +1, in the same column by -1, and otherwise it
mixes the tableau with the one obtained by swapping the entries, weighted by
the reciprocal content difference.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .combinatorics import (
    Rsyt,
    descent_word,
    enumerate_rsyt,
    normalize_partition,
    perm_apply_to_composition,
    rank_permutation,
    rsyt_index,
    transposition,
)
from .ratfunc import RatFunc


class ShapeMismatch(ValueError):
    """Operands live over different shapes or variable counts."""


# ---------------------------------------------------------------------------
# seminormal action on the tableau span
# ---------------------------------------------------------------------------

Matrix = dict  # column index -> tuple of (row index, Fraction)


class TauContext:
    """Cached seminormal matrices for one shape.

    Matrices are stored column-sparse; ``matrix(w)`` composes the cached
    simple-reflection matrices along a fixed word for ``w`` (any word yields
    the same matrix since the generators satisfy the braid relations).
    """

    def __init__(self, shape):
        self.shape = normalize_partition(shape)
        self.n = sum(self.shape)
        self.tableaux = enumerate_rsyt(self.shape)
        self.index = rsyt_index(self.shape)
        self.dim = len(self.tableaux)
        self._simple: dict[int, Matrix] = {}
        self._words: dict[tuple, Matrix] = {}

    def index_of(self, tableau: Rsyt) -> int:
        return self.index[tableau.content_vector()]

    def simple(self, i: int) -> Matrix:
        """Matrix of the simple reflection swapping i, i+1."""
        if i in self._simple:
            return self._simple[i]
        cols = {}
        for t, tab in enumerate(self.tableaux):
            ri, ci = tab.cell(i)
            rj, cj = tab.cell(i + 1)
            if ri == rj:
                cols[t] = ((t, Fraction(1)),)
            elif ci == cj:
                cols[t] = ((t, Fraction(-1)),)
            else:
                b = Fraction(1, (ci - ri) - (cj - rj))
                other = self.index[Rsyt(tab.swap_entries(i)).content_vector()]
                if b > 0:
                    cols[t] = ((t, b), (other, Fraction(1)))
                else:
                    cols[t] = ((t, b), (other, 1 - b * b))
        self._simple[i] = cols
        return cols

    def matrix(self, w) -> Matrix:
        """Matrix of an arbitrary permutation (one-line form)."""
        w = tuple(w)
        if w in self._words:
            return self._words[w]
        word = descent_word(w)
        out = {t: ((t, Fraction(1)),) for t in range(self.dim)}
        for a in reversed(word):
            out = _compose(self.simple(a), out)
        self._words[w] = out
        return out

    def transposition_matrix(self, i: int, j: int) -> Matrix:
        if i > j:
            i, j = j, i
        return self.matrix(transposition(self.n, i, j))


def _compose(m1: Matrix, m2: Matrix) -> Matrix:
    """Column-sparse product m1 . m2."""
    out = {}
    for col, entries in m2.items():
        acc = {}
        for mid, c2 in entries:
            for row, c1 in m1[mid]:
                acc[row] = acc.get(row, 0) + c1 * c2
        out[col] = tuple((r, c) for r, c in acc.items() if c)
    return out


@lru_cache(maxsize=None)
def tau_context(shape: tuple[int, ...]) -> TauContext:
    return TauContext(shape)


def tau_action(w, tab_index: int, shape) -> dict[int, Fraction]:
    """Image of a basis tableau under the seminormal action of w, as a
    mapping from basis index to coefficient."""
    ctx = tau_context(normalize_partition(shape))
    return dict(ctx.matrix(tuple(w))[tab_index])


# ---------------------------------------------------------------------------
# sparse vector-valued polynomials
# ---------------------------------------------------------------------------


class VectorPoly:
    """Finite sum of terms ``coeff * x^exponent (x) basis_tableau``.

    Coefficients are either all RatFunc (generic parameter) or all Fraction
    (specialized); terms with zero coefficient are never stored.  Instances
    are immutable; arithmetic returns new objects.
    """

    __slots__ = ("shape", "n", "terms")

    def __init__(self, shape, terms=None):
        shape = normalize_partition(shape)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "n", sum(shape))
        clean = {}
        for (exp, tab), coeff in (terms or {}).items():
            if not coeff:
                continue
            if len(exp) != self.n:
                raise ShapeMismatch(
                    f"exponent length {len(exp)} != {self.n} variables"
                )
            clean[(tuple(exp), tab)] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("VectorPoly is immutable")

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def zero(shape) -> "VectorPoly":
        return VectorPoly(shape, {})

    @staticmethod
    def monomial(shape, exp, tab_index: int, coeff=None) -> "VectorPoly":
        if coeff is None:
            coeff = RatFunc.from_int(1)
        return VectorPoly(shape, {(tuple(exp), tab_index): coeff})

    # -- structure ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=0)

    def monomial_support(self) -> set:
        return {e for e, _ in self.terms}

    def coefficient(self, exp, tab_index: int):
        return self.terms.get((tuple(exp), tab_index))

    def tableau_component(self, exp) -> dict:
        """Mapping tableau index -> coefficient at one exponent."""
        exp = tuple(exp)
        return {t: c for (e, t), c in self.terms.items() if e == exp}

    def sorted_terms(self):
        """Graded lexicographic on exponents (leading first), then basis index."""
        return sorted(
            self.terms.items(),
            key=lambda kv: (-sum(kv[0][0]), tuple(-e for e in kv[0][0]), kv[0][1]),
        )

    # -- arithmetic ----------------------------------------------------------------

    def _require_same(self, other):
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other):
        self._require_same(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = out.get(key)
            new = coeff if acc is None else acc + coeff
            if new:
                out[key] = new
            elif acc is not None:
                del out[key]
        return VectorPoly(self.shape, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return VectorPoly(self.shape, {k: -c for k, c in self.terms.items()})

    def scale(self, c) -> "VectorPoly":
        if not c:
            return VectorPoly.zero(self.shape)
        return VectorPoly(self.shape, {k: c * v for k, v in self.terms.items()})

    def mul_monomial(self, exp_delta, coeff=None) -> "VectorPoly":
        """Multiply by a scalar monomial: shift every exponent."""
        delta = tuple(exp_delta)
        if len(delta) != self.n:
            raise ShapeMismatch("monomial length mismatch")
        out = {}
        for (exp, tab), c in self.terms.items():
            key = (tuple(a + d for a, d in zip(exp, delta)), tab)
            out[key] = c * coeff if coeff is not None else c
        return VectorPoly(self.shape, out)

    def mul_scalar_poly(self, scalar_terms) -> "VectorPoly":
        """Multiply by a scalar polynomial given as {exponent: coefficient}."""
        out = VectorPoly.zero(self.shape)
        for exp, c in scalar_terms.items():
            out = out + self.mul_monomial(exp, c)
        return out

    def map_coefficients(self, fn) -> "VectorPoly":
        return VectorPoly(self.shape, {k: fn(c) for k, c in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, VectorPoly)
            and self.shape == other.shape
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"VectorPoly(shape={self.shape}, terms={len(self.terms)})"

    # -- serialization ------------------------------------------------------------

    def to_json(self) -> list:
        ctx = tau_context(self.shape)
        out = []
        for (exp, tab), coeff in self.sorted_terms():
            if isinstance(coeff, RatFunc):
                cj = coeff.to_json()
            else:
                q = Fraction(coeff)
                cj = f"{q.numerator}/{q.denominator}"
            out.append(
                {
                    "exp": list(exp),
                    "tableau": list(ctx.tableaux[tab].content_vector()),
                    "coeff": cj,
                }
            )
        return out

    @staticmethod
    def from_json(obj, shape=None) -> "VectorPoly":
        from .combinatorics import rsyt_from_contents

        terms = {}
        for item in obj:
            tableau = rsyt_from_contents(tuple(item["tableau"]))
            if shape is None:
                shape = tableau.shape
            ctx = tau_context(normalize_partition(shape))
            coeff = item["coeff"]
            if isinstance(coeff, str):
                p, _, q = coeff.partition("/")
                value = Fraction(int(p), int(q or 1))
            else:
                value = RatFunc.from_json(coeff)
            key = (tuple(item["exp"]), ctx.index_of(tableau))
            terms[key] = terms.get(key, 0) + value if key in terms else value
        if shape is None:
            raise ValueError("cannot infer shape from an empty polynomial")
        return VectorPoly(shape, terms)


def group_action(w, p: VectorPoly) -> VectorPoly:
    """w(p)(x) = tau(w) p(xw); exponents permute as (w.exp)_i = exp_{w^{-1}(i)}."""
    ctx = tau_context(p.shape)
    mat = ctx.matrix(tuple(w))
    out = {}
    for (exp, tab), coeff in p.terms.items():
        new_exp = perm_apply_to_composition(w, exp)
        for row, c in mat[tab]:
            key = (new_exp, row)
            acc = out.get(key)
            contrib = c * coeff
            new = contrib if acc is None else acc + contrib
            if new:
                out[key] = new
            elif acc is not None:
                del out[key]
    return VectorPoly(p.shape, out)


def leading_vector(alpha, tableau: Rsyt) -> VectorPoly:
    """x^alpha tensored with tau(r_alpha^{-1}) applied to the tableau: the
    triangular leading term of the Jack polynomial labelled (alpha, T)."""
    from .combinatorics import perm_inverse

    ctx = tau_context(tableau.shape)
    r_inv = perm_inverse(rank_permutation(alpha))
    col = ctx.matrix(r_inv)[ctx.index_of(tableau)]
    one = RatFunc.from_int(1)
    return VectorPoly(
        tableau.shape,
        {(tuple(alpha), row): one * c for row, c in col},
    )
