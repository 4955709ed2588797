"""Singular-polynomial machinery for rectangular shapes.

For a two-row rectangle with mk columns and the stacked shape with 2k rows of
width m, every RSYT of the two-row shape maps to a label (composition,
stacked tableau) whose Jack polynomial specializes without poles at
kappa = n/(m+2), is killed by every Dunkl operator there, and carries the
source tableau as its isotype.  This module constructs the family, certifies
those properties exactly, and builds the associated module map and its
reverse, together with exhaustive uniqueness oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
import random

from .combinatorics import (
    BadShapeParams,
    ColumnStrictTableau,
    Rsyt,
    brick_stack_target,
    compositions_strictly_below,
    enumerate_rsyt,
    layer_composition,
    max_inv_source,
    rank_permutation,
    rsyt_from_contents,
    transposition,
)
from .jack import (
    JackPolynomial,
    b_value,
    construct_jack,
    spectral_vector_at,
    specialize,
)
from .operators import cherednik_prime, dunkl, jucys_murphy
from .ratfunc import format_rational
from .vectorpoly import VectorPoly, group_action, tau_context

BadParams = BadShapeParams


class NotIsotypic(ValueError):
    """The polynomial is not a simultaneous Jucys-Murphy eigenfunction."""


class OrderViolation(ValueError):
    """Pair tableau fails its monotonicity conditions."""


class ClosureViolation(AssertionError):
    """The family span is not closed under a simple reflection as predicted."""


class NonzeroDunklImage(AssertionError):
    """A claimed singular polynomial is not killed by some Dunkl operator."""


# ---------------------------------------------------------------------------
# brick map
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BrickPair:
    """Label (beta, tableau) attached to a two-row source tableau: beta is a
    permutation of the layer composition and the stacked tableau satisfies
    (m+2) beta_i + content(r_beta(i)) = content(i, source) for every i."""

    beta: tuple[int, ...]
    tableau: Rsyt
    source: ColumnStrictTableau | Rsyt
    m: int
    k: int


def brick_map(source, m: int) -> BrickPair:
    """Per brick (2 x m block of columns), record the brick index in beta at
    the positions of the block's entries and re-rank the block into the
    corresponding block of the stacked shape."""
    if len(source.shape) != 2 or source.shape[0] != source.shape[1]:
        raise BadShapeParams(f"need a two-row rectangle, got {source.shape}")
    if source.shape[0] % m:
        raise BadShapeParams(f"{source.shape[0]} columns not a multiple of {m}")
    k = source.shape[0] // m
    if k < 2:
        raise BadShapeParams(f"need at least two bricks, got k={k}")
    n = 2 * m * k
    beta = [0] * n
    rows = [[0] * m for _ in range(2 * k)]
    for level in range(k):
        block = [
            source.entry(r, c)
            for r in (1, 2)
            for c in range(level * m + 1, (level + 1) * m + 1)
        ]
        for r in (0, 1):
            for c in range(m - 1):
                if block[r * m + c] <= block[r * m + c + 1]:
                    raise BadShapeParams(
                        f"entries in brick {level} do not decrease along rows"
                    )
        for v in block:
            beta[v - 1] = level
        offset = 2 * (k - 1 - level) * m
        for pos, v in enumerate(block):
            local_rank = sum(1 for u in block if u <= v)
            rows[2 * level + pos // m][pos % m] = local_rank + offset
    tableau = Rsyt(rows)
    beta = tuple(beta)
    r = rank_permutation(beta)
    for i in range(n):
        assert (m + 2) * beta[i] + tableau.content(r[i]) == source.content(i + 1)
    return BrickPair(beta, tableau, source, m, k)


# ---------------------------------------------------------------------------
# norms and gamma factors
# ---------------------------------------------------------------------------


def tableau_norm_squared(tab) -> Fraction:
    """Product over entry pairs i < j with content gap <= -2 of
    1 - 1/(content difference)^2."""
    cv = tab.content_vector()
    out = Fraction(1)
    for i in range(tab.n):
        for j in range(i + 1, tab.n):
            d = cv[i] - cv[j]
            if d <= -2:
                out *= 1 - Fraction(1, d * d)
    return out


def gamma_factor(pair: BrickPair) -> Fraction:
    """Product over pairs i < j with beta_i < beta_j of the same factors;
    relates the source-side norm to the Jack-side norm."""
    cv = pair.source.content_vector()
    out = Fraction(1)
    for i in range(len(pair.beta)):
        for j in range(i + 1, len(pair.beta)):
            if pair.beta[i] < pair.beta[j]:
                d = cv[i] - cv[j]
                assert abs(d) >= 2, "degenerate gamma factor"
                out *= 1 - Fraction(1, d * d)
    return out


# ---------------------------------------------------------------------------
# the singular family
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilyMember:
    source: Rsyt
    pair: BrickPair
    label: tuple[int, ...]  # n * beta
    jack: JackPolynomial
    specialized: VectorPoly
    gamma: Fraction
    source_norm_squared: Fraction


@dataclass(frozen=True)
class FamilyContext:
    m: int
    k: int
    n: int
    kappa0: Fraction
    members: tuple[FamilyMember, ...]  # ordered like enumerate_rsyt(sigma)

    @property
    def sigma(self):
        return (self.m * self.k, self.m * self.k)

    @property
    def tau(self):
        return (self.m,) * (2 * self.k)


@lru_cache(maxsize=None)
def family_context(m: int, k: int, n: int = 1) -> FamilyContext:
    """Construct (without verifying) every family member at kappa = n/(m+2)."""
    if m < 1 or k < 2:
        raise BadShapeParams(f"need m >= 1, k >= 2, got ({m}, {k})")
    if n < 1 or gcd(n, m + 2) != 1:
        raise BadParams(f"need n >= 1 coprime to m+2, got n={n}")
    kappa0 = Fraction(n, m + 2)
    members = []
    for source in enumerate_rsyt((m * k, m * k)):
        pair = brick_map(source, m)
        label = tuple(n * b for b in pair.beta)
        jack = construct_jack(label, pair.tableau)
        spec = specialize(jack, kappa0)
        members.append(
            FamilyMember(
                source=source,
                pair=pair,
                label=label,
                jack=jack,
                specialized=spec,
                gamma=gamma_factor(pair),
                source_norm_squared=tableau_norm_squared(source),
            )
        )
    return FamilyContext(m, k, n, kappa0, tuple(members))


@dataclass(frozen=True)
class SingularCertificate:
    m: int
    k: int
    n: int
    kappa0: Fraction
    members: tuple[dict, ...]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "n": self.n,
            "kappa": format_rational(self.kappa0),
            "family_size": len(self.members),
            "members": list(self.members),
        }


def singular_family(m: int, k: int, n: int = 1) -> SingularCertificate:
    """Verify the whole family at kappa = n/(m+2): no poles, every Dunkl image
    zero, Jucys-Murphy eigenvalues equal to the source contents.  Raises on
    any failure; the certificate carries complete evidence."""
    fam = family_context(m, k, n)
    records = []
    for member in fam.members:
        spec = member.specialized
        dunkl_images = []
        for i in range(1, 2 * m * k + 1):
            image = dunkl(i, spec, fam.kappa0)
            if not image.is_zero():
                raise NonzeroDunklImage(
                    f"Dunkl index {i} does not kill the member of source "
                    f"{member.source.rows}"
                )
            dunkl_images.append(image.to_json())
        isotype = isotype_of(spec)
        if isotype != member.source:
            raise NotIsotypic(
                f"isotype {isotype.rows} != source {member.source.rows}"
            )
        zeta = spectral_vector_at(member.label, member.pair.tableau, fam.kappa0)
        assert zeta == tuple(map(Fraction, member.source.content_vector()))
        records.append(
            {
                "source": [list(r) for r in member.source.rows],
                "beta": list(member.label),
                "tableau": [list(r) for r in member.pair.tableau.rows],
                "spectral": [format_rational(z) for z in zeta],
                "dunkl_images": dunkl_images,
                "omega_eigenvalues": list(member.source.content_vector()),
                "gamma": format_rational(member.gamma),
                "source_norm_squared": format_rational(member.source_norm_squared),
                "pole_free": True,
                "polynomial": spec.to_json(),
            }
        )
    return SingularCertificate(m, k, n, fam.kappa0, tuple(records))


# ---------------------------------------------------------------------------
# isotype
# ---------------------------------------------------------------------------


def isotype_of(p: VectorPoly) -> Rsyt:
    """The tableau whose content vector lists the Jucys-Murphy eigenvalues of
    p; its shape is the isotype.  Raises NotIsotypic when p is not a
    simultaneous eigenfunction with integer eigenvalues."""
    if p.is_zero():
        raise NotIsotypic("zero polynomial has no isotype")
    key, base = next(iter(p.terms.items()))
    contents = []
    for i in range(1, p.n + 1):
        image = jucys_murphy(i, p)
        scalar = image.terms.get(key, Fraction(0)) / base
        if image != p.scale(scalar):
            raise NotIsotypic(f"not an eigenfunction of the index-{i} element")
        q = Fraction(scalar)
        if q.denominator != 1:
            raise NotIsotypic(f"non-integer eigenvalue {q} at index {i}")
        contents.append(q.numerator)
    try:
        return rsyt_from_contents(tuple(contents))
    except Exception as exc:
        raise NotIsotypic(f"eigenvalues {contents} are not a content vector") from exc


# ---------------------------------------------------------------------------
# uniqueness oracle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UniquenessReport:
    beta: tuple[int, ...]
    tableau: Rsyt
    kappa0: Fraction
    unique: bool
    collisions: tuple
    enumeration_size: int

    def to_json(self) -> dict:
        return {
            "beta": list(self.beta),
            "tableau": [list(r) for r in self.tableau.rows],
            "kappa": format_rational(self.kappa0),
            "unique": self.unique,
            "enumeration_size": self.enumeration_size,
            "collisions": [
                {"gamma": list(g), "tableau": [list(r) for r in t.rows]}
                for g, t in self.collisions
            ],
        }


def uniqueness_oracle(beta, tableau: Rsyt, kappa0) -> UniquenessReport:
    """Exhaustively enumerate all labels (gamma, T') with gamma below-or-equal
    beta of the same degree and T' of the same shape, and report every label
    whose specialized spectral vector coincides with that of (beta, tableau)."""
    beta = tuple(beta)
    kappa0 = Fraction(kappa0)
    target = spectral_vector_at(beta, tableau, kappa0)
    tabs = enumerate_rsyt(tableau.shape)
    candidates = list(compositions_strictly_below(beta)) + [beta]
    collisions = []
    for gamma in candidates:
        for tab in tabs:
            if gamma == beta and tab == tableau:
                continue
            if spectral_vector_at(gamma, tab, kappa0) == target:
                collisions.append((gamma, tab))
    return UniquenessReport(
        beta=beta,
        tableau=tableau,
        kappa0=kappa0,
        unique=not collisions,
        collisions=tuple(collisions),
        enumeration_size=len(candidates) * len(tabs),
    )


# ---------------------------------------------------------------------------
# the two swapped label variants
# ---------------------------------------------------------------------------


def _swap(comp, i):
    out = list(comp)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


@dataclass(frozen=True)
class AlphaVariants:
    m: int
    k: int
    s: int
    pivot: int  # 2m(k-s)
    base: tuple[int, ...]  # the layer composition
    swapped_once: tuple[int, ...]
    variant1: tuple[int, ...]
    variant2: tuple[int, ...]
    spectral_table: dict  # name -> full spectral vector at 1/(m+2)

    def window(self, comp) -> tuple[int, ...]:
        return tuple(comp[self.pivot - 2 : self.pivot + 2])

    def spectral_window(self, name) -> tuple[Fraction, ...]:
        v = self.spectral_table[name]
        return tuple(v[self.pivot - 2 : self.pivot + 2])


def alpha_variants(m: int, k: int, s: int) -> AlphaVariants:
    """The two compositions reached from the layer composition by two simple
    swaps around the boundary of bricks s-1 and s, together with their
    specialized spectral vectors; their spectral vectors reproduce the content
    vectors of the one-swap inv-maximal tableaux."""
    if not 1 <= s <= k - 1:
        raise BadParams(f"need 1 <= s <= k-1, got s={s}")
    lam = layer_composition(m, k)
    t0 = brick_stack_target(m, k)
    i0 = 2 * m * (k - s)
    swapped = _swap(lam, i0)
    variant1 = _swap(swapped, i0 + 1)
    variant2 = _swap(swapped, i0 - 1)
    kappa0 = Fraction(1, m + 2)
    table = {
        "base": spectral_vector_at(lam, t0, kappa0),
        "swapped_once": spectral_vector_at(swapped, t0, kappa0),
        "variant1": spectral_vector_at(variant1, t0, kappa0),
        "variant2": spectral_vector_at(variant2, t0, kappa0),
    }
    return AlphaVariants(
        m=m,
        k=k,
        s=s,
        pivot=i0,
        base=lam,
        swapped_once=swapped,
        variant1=variant1,
        variant2=variant2,
        spectral_table=table,
    )


# ---------------------------------------------------------------------------
# pair tableau diagnostic
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PairTableau:
    rows: tuple  # tuples of (entry, sorted-composition value) pairs

    def __str__(self):
        return "\n".join(
            " ".join(f"({a},{b})" for a, b in row) for row in self.rows
        )


def pair_tableau(beta, tableau) -> PairTableau:
    """Place (i, beta^+_i) at the cell of entry i; valid pairs make the first
    entries decrease and the second entries weakly increase along every row
    and column.  Accepts column-strict tableaux as well, where the row
    conditions can genuinely fail and the violation is the diagnostic."""
    beta = tuple(beta)
    if len(beta) != tableau.n:
        raise BadParams("composition length does not match tableau size")
    beta_plus = tuple(sorted(beta, reverse=True))
    rows = tuple(
        tuple((v, beta_plus[v - 1]) for v in row) for row in tableau.rows
    )
    for row in rows:
        for (a1, b1), (a2, b2) in zip(row, row[1:]):
            if not (a1 > a2 and b1 <= b2):
                raise OrderViolation(f"row violation at {(a1, b1)}, {(a2, b2)}")
    for r in range(len(rows) - 1):
        for c in range(len(rows[r + 1])):
            (a1, b1), (a2, b2) = rows[r][c], rows[r + 1][c]
            if not (a1 > a2 and b1 <= b2):
                raise OrderViolation(f"column violation at {(a1, b1)}, {(a2, b2)}")
    return PairTableau(rows)


# ---------------------------------------------------------------------------
# norms: product formula against step recursion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NormReport:
    m: int
    k: int
    table: dict  # source content vector -> (norm^2, gamma)
    steps_checked: int

    def to_json(self) -> dict:
        fam = family_context(self.m, self.k)
        return {
            "m": self.m,
            "k": self.k,
            "steps_checked": self.steps_checked,
            "members": [
                {
                    "source": [list(r) for r in member.source.rows],
                    "norm_squared": format_rational(member.source_norm_squared),
                    "gamma": format_rational(member.gamma),
                }
                for member in fam.members
            ],
        }


def norms_and_gamma(m: int, k: int) -> NormReport:
    """Norms and gamma factors for every member, with the product formula
    cross-checked against the permissible-step recursion over every edge of
    the reduction graph (hence path-independently)."""
    from .combinatorics import apply_permissible_step, is_permissible_step

    fam = family_context(m, k)
    by_source = {member.source: member for member in fam.members}
    s0 = max_inv_source(m, k)
    assert by_source[s0].source_norm_squared == 1
    assert by_source[s0].gamma == 1
    steps = 0
    for member in fam.members:
        low = member.source
        for i in range(1, 2 * m * k):
            if not is_permissible_step(low, i):
                continue
            high = apply_permissible_step(low, i)
            high_member = by_source[high]
            cv = high.content_vector()
            d = cv[i - 1] - cv[i]
            assert d >= 2
            b = Fraction(1, d)
            factor = 1 - b * b
            assert member.source_norm_squared == factor * high_member.source_norm_squared
            hb = high_member.pair.beta
            if hb[i - 1] == hb[i]:
                assert member.gamma == high_member.gamma
            else:
                assert member.gamma == factor * high_member.gamma
            steps += 1
    table = {
        member.source.content_vector(): (
            member.source_norm_squared,
            member.gamma,
        )
        for member in fam.members
    }
    return NormReport(m=m, k=k, table=table, steps_checked=steps)


# ---------------------------------------------------------------------------
# the module map and its reverse
# ---------------------------------------------------------------------------


def mu_map(g: VectorPoly, m: int, k: int) -> VectorPoly:
    """Linear map sending f (x) S to f * gamma_S * J_S at kappa = 1/(m+2);
    commutes with multiplication, the group action, and the Dunkl operators."""
    fam = family_context(m, k)
    if g.shape != fam.sigma:
        raise BadShapeParams(f"input must live on shape {fam.sigma}")
    out = VectorPoly.zero(fam.tau)
    for (exp, s_idx), coeff in g.terms.items():
        member = fam.members[s_idx]
        out = out + member.specialized.mul_monomial(exp, coeff * member.gamma)
    return out


def random_source_polynomial(rng: random.Random, m: int, k: int, degree: int):
    """Sparse random element of the two-row module with small Fraction
    coefficients; used by the seeded commutation trials."""
    sigma = (m * k, m * k)
    dim = len(enumerate_rsyt(sigma))
    n = 2 * m * k
    terms = {}
    for _ in range(4):
        total = rng.randint(0, degree)
        exp = [0] * n
        for _ in range(total):
            exp[rng.randrange(n)] += 1
        coeff = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        if coeff:
            key = (tuple(exp), rng.randrange(dim))
            terms[key] = terms.get(key, Fraction(0)) + coeff
    return VectorPoly(sigma, {k_: v for k_, v in terms.items() if v})


@dataclass(frozen=True)
class MuCommutationReport:
    m: int
    k: int
    degree: int
    trials: int
    seed: int
    checks: int

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "degree": self.degree,
            "trials": self.trials,
            "seed": self.seed,
            "checks": self.checks,
            "all_commute": True,
        }


def mu_commutation_check(
    m: int, k: int, degree: int = 2, trials: int = 20, seed: int = 0
) -> MuCommutationReport:
    """Seeded exact verification that the module map commutes with every
    coordinate multiplication, simple reflection, and Dunkl operator."""
    fam = family_context(m, k)
    rng = random.Random(seed)
    n = 2 * m * k
    checks = 0
    for _ in range(trials):
        g = random_source_polynomial(rng, m, k, degree)
        mu_g = mu_map(g, m, k)
        for i in range(1, n + 1):
            e_i = tuple(int(t == i - 1) for t in range(n))
            if mu_map(g.mul_monomial(e_i), m, k) != mu_g.mul_monomial(e_i):
                raise ClosureViolation(f"mu fails to commute with x_{i}")
            checks += 1
        for i in range(1, n):
            w = transposition(n, i, i + 1)
            if mu_map(group_action(w, g), m, k) != group_action(w, mu_g):
                raise ClosureViolation(f"mu fails to commute with s_{i}")
            checks += 1
        for i in range(1, n + 1):
            lhs = mu_map(dunkl(i, g, fam.kappa0), m, k)
            rhs = dunkl(i, mu_g, fam.kappa0)
            if lhs != rhs:
                raise ClosureViolation(f"mu fails to commute with D_{i}")
            checks += 1
    return MuCommutationReport(m, k, degree, trials, seed, checks)


@dataclass(frozen=True)
class ReverseMapReport:
    m: int
    k: int
    kappa0: Fraction  # -1/(m+2)
    components: tuple  # (tableau contents, poly, singular, isotype contents)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "kappa": format_rational(self.kappa0),
            "components": [
                {
                    "tableau": list(contents),
                    "singular": singular,
                    "isotype": list(isotype),
                    "polynomial": poly.to_json(),
                }
                for contents, poly, singular, isotype in self.components
            ],
        }


def reverse_map_qT(m: int, k: int) -> ReverseMapReport:
    """For each stacked tableau T, assemble the two-row-valued polynomial with
    components p_{S,T} * norm(T)^2 / norm(S)^2 and certify empirically that it
    is singular at kappa = -1/(m+2) with isotype given by T itself."""
    fam = family_context(m, k)
    tau_tabs = enumerate_rsyt(fam.tau)
    kappa_neg = Fraction(-1, m + 2)
    components = []
    for t_idx, t_tab in enumerate(tau_tabs):
        norm_t = tableau_norm_squared(t_tab)
        terms = {}
        for s_idx, member in enumerate(fam.members):
            ratio = norm_t / member.source_norm_squared
            for (exp, tab), coeff in member.specialized.terms.items():
                if tab != t_idx:
                    continue
                key = (exp, s_idx)
                value = coeff * member.gamma * ratio
                terms[key] = terms.get(key, Fraction(0)) + value
        q = VectorPoly(fam.sigma, {k_: v for k_, v in terms.items() if v})
        singular = all(
            dunkl(i, q, kappa_neg).is_zero() for i in range(1, 2 * m * k + 1)
        )
        isotype = isotype_of(q)
        components.append(
            (t_tab.content_vector(), q, singular, isotype.content_vector())
        )
        if not singular:
            raise NonzeroDunklImage(
                f"reverse component of {t_tab.rows} is not singular"
            )
        if isotype != t_tab:
            raise NotIsotypic(
                f"reverse component isotype {isotype.rows} != {t_tab.rows}"
            )
    return ReverseMapReport(m, k, kappa_neg, tuple(components))


# ---------------------------------------------------------------------------
# closure of the family span under simple reflections
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClosureReport:
    m: int
    k: int
    kappa0: Fraction
    case_counts: dict
    hinge_labels: tuple  # labels whose pole-freeness was certified separately

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "kappa": format_rational(self.kappa0),
            "case_counts": dict(self.case_counts),
            "hinge_labels": [
                {"beta": list(b), "tableau": [list(r) for r in t.rows]}
                for b, t in self.hinge_labels
            ],
        }


def closure_check(m: int, k: int, n: int = 1) -> ClosureReport:
    """Classify every (source, index) pair by the content gap and verify the
    predicted action of the simple reflection on the family span, including
    the hinge case where the swapped label must first be certified pole-free."""
    fam = family_context(m, k, n)
    sigma_ctx = tau_context(fam.sigma)
    by_source = {member.source.content_vector(): member for member in fam.members}
    counts = {"generic": 0, "same_column": 0, "same_row_brick": 0, "hinge": 0}
    hinges = []
    nvars = 2 * m * k
    for s_idx, member in enumerate(fam.members):
        assert member.pair.beta[-1] == 0  # top entry sits in the first brick
        source = member.source
        spec = member.specialized
        cv = source.content_vector()
        for i in range(1, nvars):
            diff = cv[i - 1] - cv[i]
            w = transposition(nvars, i, i + 1)
            swapped_poly = group_action(w, spec)
            beta = member.pair.beta
            # the rescaled family transforms with the seminormal source-side
            # matrices, uniformly across all cases
            rhs_full = VectorPoly.zero(fam.tau)
            for row, c in sigma_ctx.simple(i)[s_idx]:
                rhs_full = rhs_full + fam.members[row].specialized.scale(
                    c * fam.members[row].gamma
                )
            if swapped_poly.scale(member.gamma) != rhs_full:
                raise ClosureViolation(
                    f"matrix transport fails at source {source.rows}, i={i}"
                )
            if abs(diff) >= 2:
                counts["generic"] += 1
                b = Fraction(1, diff)
                other = by_source[_swap(cv, i)]
                if beta[i - 1] != beta[i]:
                    expected_label = tuple(n * x for x in _swap(beta, i))
                    scalar = 1 - b * b if beta[i - 1] > beta[i] else Fraction(1)
                    assert other.label == expected_label
                    assert other.pair.tableau == member.pair.tableau
                else:
                    j = rank_permutation(member.label)[i - 1]
                    assert other.label == member.label
                    assert other.pair.tableau == Rsyt(
                        member.pair.tableau.swap_entries(j)
                    )
                    scalar = Fraction(1) if b > 0 else 1 - b * b
                lhs = swapped_poly - spec.scale(b)
                if lhs != other.specialized.scale(scalar):
                    raise ClosureViolation(
                        f"generic case fails at source {source.rows}, i={i}"
                    )
            elif diff == -1:
                counts["same_column"] += 1
                if swapped_poly != -spec:
                    raise ClosureViolation(
                        f"same-column case fails at {source.rows}, i={i}"
                    )
            elif diff == 1 and beta[i - 1] == beta[i]:
                counts["same_row_brick"] += 1
                if swapped_poly != spec:
                    raise ClosureViolation(
                        f"same-row case fails at {source.rows}, i={i}"
                    )
            else:
                assert diff == 1 and beta[i - 1] > beta[i]
                counts["hinge"] += 1
                assert b_value(member.label, member.pair.tableau, i).evaluate(
                    fam.kappa0
                ) == 1
                hinge_label = tuple(n * x for x in _swap(beta, i))
                hinge_jack = construct_jack(hinge_label, member.pair.tableau)
                specialize(hinge_jack, fam.kappa0)  # must not pole
                hinges.append((hinge_label, member.pair.tableau))
                if swapped_poly != spec:
                    raise ClosureViolation(
                        f"hinge case fails at {source.rows}, i={i}"
                    )
    return ClosureReport(m, k, fam.kappa0, counts, tuple(hinges))


# ---------------------------------------------------------------------------
# the five-variable example: a singular sum that is not one Jack polynomial
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HookExampleReport:
    kappa0: Fraction
    spectral: tuple
    monomial_count: int
    neither_singular: bool
    neither_invariant: bool
    combination_singular: bool
    combination_invariant: bool
    eigenvalues: tuple

    def to_json(self) -> dict:
        return {
            "kappa": format_rational(self.kappa0),
            "shared_spectral_vector": [format_rational(z) for z in self.spectral],
            "first_label_monomials": self.monomial_count,
            "neither_singular": self.neither_singular,
            "neither_invariant": self.neither_invariant,
            "combination_singular": self.combination_singular,
            "combination_invariant": self.combination_invariant,
            "combination_eigenvalues": [
                format_rational(z) for z in self.eigenvalues
            ],
        }


def example_n5() -> HookExampleReport:
    """Five variables, hook shape (3,1,1): two distinct labels share the
    spectral vector (4,3,2,1,0) at kappa = 1/2, neither is singular alone,
    but their 1:2 combination is singular and invariant with modified
    Cherednik-Dunkl eigenvalue 5 - i."""
    kappa0 = Fraction(1, 2)
    t = rsyt_from_contents((-2, -1, 2, 1, 0))
    t_prime = rsyt_from_contents((-2, 2, 1, -1, 0))
    alpha = (3, 2, 0, 0, 0)
    beta = (1, 1, 2, 1, 0)
    j1 = construct_jack(alpha, t)
    j2 = construct_jack(beta, t_prime)
    p1 = specialize(j1, kappa0)
    p2 = specialize(j2, kappa0)
    z1 = spectral_vector_at(alpha, t, kappa0)
    z2 = spectral_vector_at(beta, t_prime, kappa0)
    assert z1 == z2 == tuple(map(Fraction, (4, 3, 2, 1, 0)))

    def singular(p):
        return all(dunkl(i, p, kappa0).is_zero() for i in range(1, 6))

    def invariant(p):
        return all(
            group_action(transposition(5, i, i + 1), p) == p for i in range(1, 5)
        )

    combo = p1 + p2.scale(Fraction(2))
    eigen = []
    for i in range(1, 6):
        image = cherednik_prime(i, combo, kappa0)
        expected = combo.scale(Fraction(5 - i))
        assert image == expected
        eigen.append(Fraction(5 - i))
    report = HookExampleReport(
        kappa0=kappa0,
        spectral=z1,
        monomial_count=j1.monomial_count(),
        neither_singular=not singular(p1) and not singular(p2),
        neither_invariant=not invariant(p1) and not invariant(p2),
        combination_singular=singular(combo),
        combination_invariant=invariant(combo),
        eigenvalues=tuple(eigen),
    )
    if not (
        report.neither_singular
        and report.neither_invariant
        and report.combination_singular
        and report.combination_invariant
        and report.monomial_count == 100
    ):
        raise AssertionError(f"five-variable example failed: {report}")
    return report
