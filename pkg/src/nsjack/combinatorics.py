"""Partitions, compositions, tableaux and brick combinatorics.

Entries and cells are 1-indexed throughout: a tableau cell is addressed as
``(row, col)`` with ``row, col >= 1``, and the content of the cell holding
entry ``i`` is ``col - row``.  Reverse standard Young tableaux (RSYT) are
fillings with ``N..1`` strictly decreasing along rows and columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache


class NoSuchTableau(ValueError):
    """No RSYT exists with the requested content vector."""


class NotReducible(ValueError):
    """Tableau is not reducible by permissible steps (wrong shape or class)."""


class BadShapeParams(ValueError):
    """Brick parameters out of range (need m >= 1, k >= 2)."""


# ---------------------------------------------------------------------------
# partitions and compositions (plain int tuples)
# ---------------------------------------------------------------------------


def is_partition(parts) -> bool:
    return all(a >= b for a, b in zip(parts, parts[1:])) and all(
        a >= 0 for a in parts
    )


def normalize_partition(parts) -> tuple[int, ...]:
    """Strip trailing zeros; partitions compare equal up to padding."""
    parts = tuple(parts)
    n = len(parts)
    while n > 0 and parts[n - 1] == 0:
        n -= 1
    return parts[:n]


def conjugate_partition(parts) -> tuple[int, ...]:
    parts = normalize_partition(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0]))


def rank_permutation(alpha) -> tuple[int, ...]:
    """One-line permutation r with r(i) = #{j: a_j > a_i} + #{j <= i: a_j = a_i}.

    Applying r to alpha sorts it into nonincreasing order, and r is the
    identity exactly when alpha is already a partition.
    """
    alpha = tuple(alpha)
    return tuple(
        sum(1 for b in alpha if b > a)
        + sum(1 for b in alpha[: i + 1] if b == a)
        for i, a in enumerate(alpha)
    )


def sort_descending(alpha) -> tuple[int, ...]:
    return tuple(sorted(alpha, reverse=True))


def perm_inverse(w) -> tuple[int, ...]:
    inv = [0] * len(w)
    for i, v in enumerate(w):
        inv[v - 1] = i + 1
    return tuple(inv)


def perm_compose(w1, w2) -> tuple[int, ...]:
    """(w1 w2)(i) = w1(w2(i))."""
    return tuple(w1[w2[i] - 1] for i in range(len(w2)))


def perm_apply_to_composition(w, alpha) -> tuple[int, ...]:
    """(w . alpha)_i = alpha_{w^{-1}(i)}, so that (xw)^alpha = x^{w.alpha}."""
    out = [0] * len(alpha)
    for i, a in enumerate(alpha):
        out[w[i] - 1] = a
    return tuple(out)


def transposition(n: int, i: int, j: int) -> tuple[int, ...]:
    w = list(range(1, n + 1))
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return tuple(w)


def descent_word(w) -> tuple[int, ...]:
    """Deterministic word in simple reflections with w = s_{a_1} ... s_{a_r}.

    Repeatedly strips the smallest descent from the right; any word gives the
    same represented group element.
    """
    v = list(w)
    stripped = []
    while True:
        for i in range(len(v) - 1):
            if v[i] > v[i + 1]:
                stripped.append(i + 1)
                v[i], v[i + 1] = v[i + 1], v[i]
                break
        else:
            break
    return tuple(reversed(stripped))


class Comparison(Enum):
    LESS = "less"  # first argument strictly below in the composition order
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def _prefix_leq(alpha, beta) -> bool:
    s, t = 0, 0
    for a, b in zip(alpha, beta):
        s += a
        t += b
        if s > t:
            return False
    return True


def compare_order(alpha, beta) -> Comparison:
    """Compare in the order on compositions refined from dominance.

    alpha < beta iff |alpha| = |beta| and either the sorted rearrangement of
    alpha is strictly dominated by that of beta, or the rearrangements agree
    and alpha itself has weakly smaller prefix sums.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    if alpha == beta:
        return Comparison.EQUAL
    if len(alpha) != len(beta) or sum(alpha) != sum(beta):
        return Comparison.INCOMPARABLE
    ap, bp = sort_descending(alpha), sort_descending(beta)
    if ap == bp:
        if _prefix_leq(alpha, beta):
            return Comparison.LESS
        if _prefix_leq(beta, alpha):
            return Comparison.GREATER
        return Comparison.INCOMPARABLE
    if _prefix_leq(ap, bp):
        return Comparison.LESS
    if _prefix_leq(bp, ap):
        return Comparison.GREATER
    return Comparison.INCOMPARABLE


def dominated_partitions(lam) -> tuple[tuple[int, ...], ...]:
    """All partitions of |lam| with at most len(lam) parts dominated by lam."""
    lam = tuple(lam)
    total, nparts = sum(lam), len(lam)
    out = []

    def rec(prefix, remaining, bound):
        if remaining == 0:
            out.append(tuple(prefix) + (0,) * (nparts - len(prefix)))
            return
        if len(prefix) == nparts:
            return
        pos = len(prefix)
        lam_prefix = sum(lam[: pos + 1])
        for part in range(min(bound, remaining), 0, -1):
            # dominance: prefix sums must stay <= those of lam
            if sum(prefix) + part > lam_prefix:
                continue
            # feasibility: the rest must fit in the remaining slots
            if remaining - part > part * (nparts - pos - 1):
                continue
            prefix.append(part)
            rec(prefix, remaining - part, part)
            prefix.pop()

    if total == 0:
        return ((0,) * nparts,)
    rec([], total, total)
    return tuple(out)


def multiset_permutations(values) -> list[tuple[int, ...]]:
    """Distinct permutations of a multiset, in lexicographic order."""
    values = sorted(values)
    out = []

    def rec(prefix, pool):
        if not pool:
            out.append(tuple(prefix))
            return
        last = None
        for idx, v in enumerate(pool):
            if v == last:
                continue
            last = v
            rec(prefix + [v], pool[:idx] + pool[idx + 1 :])

    rec([], values)
    return out


@lru_cache(maxsize=None)
def _composition_pool(alpha_sorted: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    pool = []
    for mu in dominated_partitions(alpha_sorted):
        pool.extend(multiset_permutations(mu))
    return tuple(pool)


def compositions_strictly_below(alpha) -> tuple[tuple[int, ...], ...]:
    """All compositions gamma of the same degree and length with gamma < alpha."""
    alpha = tuple(alpha)
    return tuple(
        g
        for g in _composition_pool(sort_descending(alpha))
        if compare_order(g, alpha) is Comparison.LESS
    )


# ---------------------------------------------------------------------------
# tableaux
# ---------------------------------------------------------------------------


def _validate_filling(rows):
    shape = tuple(len(r) for r in rows)
    if not is_partition(shape) or (shape and shape[-1] == 0):
        raise ValueError(f"rows do not form a Ferrers diagram: {shape}")
    n = sum(shape)
    seen = sorted(v for r in rows for v in r)
    if seen != list(range(1, n + 1)):
        raise ValueError("filling is not a bijection onto 1..N")
    return shape, n


class _Tableau:
    """Shared plumbing for bijective fillings of a Ferrers diagram."""

    __slots__ = ("rows", "shape", "n", "_cells", "_contents")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        shape, n = _validate_filling(rows)
        self._check(rows)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "n", n)
        cells = {}
        for r, row in enumerate(rows, start=1):
            for c, v in enumerate(row, start=1):
                cells[v] = (r, c)
        object.__setattr__(self, "_cells", cells)
        object.__setattr__(
            self, "_contents", tuple(cells[i][1] - cells[i][0] for i in range(1, n + 1))
        )

    def _check(self, rows):
        raise NotImplementedError

    def __setattr__(self, name, value):
        raise AttributeError("tableaux are immutable")

    def cell(self, entry: int) -> tuple[int, int]:
        """(row, col) of the given entry, 1-indexed."""
        return self._cells[entry]

    def entry(self, row: int, col: int) -> int:
        return self.rows[row - 1][col - 1]

    def content(self, entry: int) -> int:
        return self._contents[entry - 1]

    def content_vector(self) -> tuple[int, ...]:
        return self._contents

    def swap_entries(self, i: int):
        """Rows with entries i and i+1 exchanged (no validity check)."""
        ri, ci = self._cells[i]
        rj, cj = self._cells[i + 1]
        rows = [list(r) for r in self.rows]
        rows[ri - 1][ci - 1], rows[rj - 1][cj - 1] = i + 1, i
        return tuple(tuple(r) for r in rows)

    def __eq__(self, other):
        return type(self) is type(other) and self.rows == other.rows

    def __hash__(self):
        return hash((type(self).__name__, self.rows))

    def __repr__(self):
        return f"{type(self).__name__}({[list(r) for r in self.rows]})"

    def __str__(self):
        width = len(str(self.n))
        return "\n".join(
            " ".join(str(v).rjust(width) for v in row) for row in self.rows
        )


class Rsyt(_Tableau):
    """Reverse standard Young tableau: strictly decreasing rows and columns."""

    def _check(self, rows):
        for row in rows:
            if any(a <= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row not strictly decreasing: {row}")
        for r in range(len(rows) - 1):
            for c in range(len(rows[r + 1])):
                if rows[r][c] <= rows[r + 1][c]:
                    raise ValueError(f"column {c + 1} not strictly decreasing")


class ColumnStrictTableau(_Tableau):
    """Bijective filling with strictly decreasing columns only."""

    def _check(self, rows):
        for r in range(len(rows) - 1):
            for c in range(len(rows[r + 1])):
                if rows[r][c] <= rows[r + 1][c]:
                    raise ValueError(f"column {c + 1} not strictly decreasing")


def inv_statistic(tab: _Tableau) -> int:
    """Number of pairs a < b with row(a) < row(b)."""
    rows = [tab.cell(i)[0] for i in range(1, tab.n + 1)]
    return sum(
        1
        for a in range(tab.n)
        for b in range(a + 1, tab.n)
        if rows[a] < rows[b]
    )


@lru_cache(maxsize=None)
def enumerate_rsyt(shape: tuple[int, ...]) -> tuple[Rsyt, ...]:
    """All RSYT of the given shape, sorted by content vector, descending.

    Removing the cell of entry 1 from an RSYT leaves an RSYT, so fillings are
    built by placing 1, 2, ..., N in turn at each outer corner of the not yet
    peeled part of the diagram.
    """
    shape = normalize_partition(shape)
    if not shape:
        return ()
    n = sum(shape)

    def peel(remaining_shape, low):
        if low > n:
            yield []
            return
        for r in range(len(remaining_shape)):
            if remaining_shape[r] and (
                r == len(remaining_shape) - 1
                or remaining_shape[r] > remaining_shape[r + 1]
            ):
                sub = list(remaining_shape)
                sub[r] -= 1
                for rest in peel(tuple(sub), low + 1):
                    yield [(low, r, remaining_shape[r])] + rest

    tableaux = []
    for placement in peel(shape, 1):
        rows = [[0] * ln for ln in shape]
        for entry, r, c in placement:
            rows[r][c - 1] = entry
        tableaux.append(Rsyt(rows))
    tableaux.sort(key=lambda t: t.content_vector(), reverse=True)
    return tuple(tableaux)


@lru_cache(maxsize=None)
def rsyt_index(shape: tuple[int, ...]) -> dict:
    """Map content vector -> index into enumerate_rsyt(shape)."""
    return {
        t.content_vector(): i for i, t in enumerate(enumerate_rsyt(shape))
    }


def rsyt_from_contents(contents) -> Rsyt:
    """The unique RSYT with the given content vector.

    Entries are inserted from N down to 1, each at the addable cell whose
    content matches; addable cells of a diagram have distinct contents, so the
    placement is forced and failure means no such tableau exists.
    """
    contents = tuple(contents)
    n = len(contents)
    row_lengths: list[int] = []
    positions = {}
    for entry in range(n, 0, -1):
        want = contents[entry - 1]
        placed = False
        for r in range(len(row_lengths) + 1):
            length = row_lengths[r] if r < len(row_lengths) else 0
            if r > 0 and length >= row_lengths[r - 1]:
                continue
            if (length + 1) - (r + 1) == want:
                if r < len(row_lengths):
                    row_lengths[r] += 1
                else:
                    row_lengths.append(1)
                positions[entry] = (r, row_lengths[r])
                placed = True
                break
        if not placed:
            raise NoSuchTableau(
                f"no addable cell of content {want} for entry {entry}"
            )
    rows = [[0] * ln for ln in row_lengths]
    for entry, (r, c) in positions.items():
        rows[r][c - 1] = entry
    return Rsyt(rows)


# ---------------------------------------------------------------------------
# permissible steps and reduction
# ---------------------------------------------------------------------------


def is_permissible_step(tab: _Tableau, i: int) -> bool:
    """Swap of entries i, i+1 with row(i)=2, row(i+1)=1, col(i) < col(i+1)."""
    ri, ci = tab.cell(i)
    rj, cj = tab.cell(i + 1)
    return ri == 2 and rj == 1 and ci < cj


def apply_permissible_step(tab, i: int):
    if not is_permissible_step(tab, i):
        raise ValueError(f"step {i} is not permissible for this tableau")
    return type(tab)(tab.swap_entries(i))


def _row_violation(tab) -> tuple[int, int] | None:
    """The unique adjacent row inversion (row, col), if there is exactly one."""
    bad = [
        (r + 1, c + 1)
        for r, row in enumerate(tab.rows)
        for c in range(len(row) - 1)
        if row[c] < row[c + 1]
    ]
    if len(bad) == 1:
        return bad[0]
    return None


def swapped_inv_max(num_cols: int, j: int, n: int) -> ColumnStrictTableau:
    """The inv-maximal member of the one-swap class: column filling of the
    two-row shape with the 2x2 block at columns n, n+1 rearranged."""
    if not (1 <= n < num_cols) or j not in (1, 2):
        raise BadShapeParams(f"need 1 <= n < {num_cols} and j in {{1,2}}")
    top = [2 * num_cols + 2 - 2 * i for i in range(1, num_cols + 1)]
    bot = [2 * num_cols + 1 - 2 * i for i in range(1, num_cols + 1)]
    v = 2 * num_cols - 2 * n
    if j == 1:
        block = ((v + 1, v + 2), (v, v - 1))
    else:
        block = ((v + 2, v + 1), (v - 1, v))
    top[n - 1], top[n] = block[0]
    bot[n - 1], bot[n] = block[1]
    return ColumnStrictTableau((top, bot))


def reduce_by_permissible_steps(tab) -> list[int]:
    """Indices of permissible steps carrying the tableau to the inv-maximal
    element of its class (the column filling, or its one-swap variant).

    Works on two-row column-strict tableaux: RSYT reduce to the column-by-
    column filling, and one-row-swap tableaux to the corresponding swapped
    filling.  Each returned step raises inv by exactly 1.
    """
    if len(tab.shape) != 2 or tab.shape[0] != tab.shape[1]:
        raise NotReducible(f"need a two-row rectangle, got shape {tab.shape}")
    num_cols = tab.shape[0]
    violation = _row_violation(tab)
    jrow = swap_col = None
    if not isinstance(tab, Rsyt):
        if violation is None:
            try:
                tab = Rsyt(tab.rows)
            except ValueError as exc:
                raise NotReducible("not an RSYT nor one row swap away") from exc
        else:
            jrow, swap_col = violation
            fixed = [list(r) for r in tab.rows]
            fixed[jrow - 1][swap_col - 1], fixed[jrow - 1][swap_col] = (
                fixed[jrow - 1][swap_col],
                fixed[jrow - 1][swap_col - 1],
            )
            try:
                Rsyt(fixed)
            except ValueError as exc:
                raise NotReducible("not an RSYT nor one row swap away") from exc

    steps = []
    current = tab

    def step(i):
        nonlocal current
        before = inv_statistic(current)
        current = apply_permissible_step(current, i)
        assert inv_statistic(current) == before + 1
        steps.append(i)

    # fix columns left to right: raise the bottom entry until it is one below
    # the top.  For the swapped class, stop before the displaced block.
    limit = num_cols - 1 if swap_col is None else swap_col - 1
    for col in range(1, limit + 1):
        while current.entry(2, col) < current.entry(1, col) - 1:
            step(current.entry(2, col))
    # fix columns right to left: lower the top entry until one above the bottom
    if swap_col is not None:
        for col in range(num_cols, swap_col + 1, -1):
            while current.entry(1, col) > current.entry(2, col) + 1:
                step(current.entry(1, col) - 1)
        assert current == swapped_inv_max(num_cols, jrow, swap_col)
    else:
        assert current.rows == max_inv_source_rows(num_cols)
    return steps


# ---------------------------------------------------------------------------
# bricks and distinguished tableaux
# ---------------------------------------------------------------------------


def max_inv_source_rows(num_cols: int) -> tuple[tuple[int, ...], ...]:
    top = tuple(2 * num_cols + 2 - 2 * i for i in range(1, num_cols + 1))
    bot = tuple(2 * num_cols + 1 - 2 * i for i in range(1, num_cols + 1))
    return (top, bot)


def max_inv_source(m: int, k: int) -> Rsyt:
    """Column-by-column filling of the two-row rectangle (mk, mk)."""
    _check_brick_params(m, k)
    return Rsyt(max_inv_source_rows(m * k))


def brick_stack_target(m: int, k: int) -> Rsyt:
    """Stack of k standard 2 x m bricks, each filled column by column,
    of shape (m^(2k))."""
    _check_brick_params(m, k)
    rows = []
    for level in range(k):
        base = 2 * m * (k - level)
        rows.append(tuple(base - 2 * j for j in range(m)))
        rows.append(tuple(base - 1 - 2 * j for j in range(m)))
    return Rsyt(rows)


def layer_composition(m: int, k: int) -> tuple[int, ...]:
    """((k-1)^{2m}, (k-2)^{2m}, ..., 0^{2m}): brick layer of each entry slot."""
    _check_brick_params(m, k)
    return tuple(
        k - 1 - (i // (2 * m)) for i in range(2 * m * k)
    )


def brick_of(row: int, col: int, m: int, shape) -> int:
    """Brick index of a cell: bricks are 2 x m blocks, laid side by side in a
    two-row shape and stacked vertically otherwise."""
    shape = normalize_partition(shape)
    if len(shape) == 2:
        return (col - 1) // m
    return (row - 1) // 2


def _check_brick_params(m: int, k: int):
    if m < 1 or k < 2:
        raise BadShapeParams(f"need m >= 1 and k >= 2, got m={m}, k={k}")


@dataclass(frozen=True)
class DistinguishedTableaux:
    source_max: Rsyt
    target_stack: Rsyt
    layers: tuple[int, ...]
    swapped: dict  # (j, n) -> ColumnStrictTableau, n = m*s for 1 <= s <= k-1


def distinguished_tableaux(m: int, k: int) -> DistinguishedTableaux:
    _check_brick_params(m, k)
    swapped = {
        (j, m * s): swapped_inv_max(m * k, j, m * s)
        for s in range(1, k)
        for j in (1, 2)
    }
    return DistinguishedTableaux(
        source_max=max_inv_source(m, k),
        target_stack=brick_stack_target(m, k),
        layers=layer_composition(m, k),
        swapped=swapped,
    )


def enumerate_one_swap_class(num_cols: int, j: int, n: int) -> tuple:
    """All column-strict tableaux one row-swap (at row j, columns n, n+1)
    away from an RSYT of the two-row rectangle."""
    out = []
    for t in enumerate_rsyt((num_cols, num_cols)):
        rows = [list(r) for r in t.rows]
        rows[j - 1][n - 1], rows[j - 1][n] = rows[j - 1][n], rows[j - 1][n - 1]
        try:
            out.append(ColumnStrictTableau(rows))
        except ValueError:
            continue
    return tuple(out)


# permutations of {1..N} acting on tableaux via entry relabelling are not
# needed; group actions on the module side live in vectorpoly.


def catalan(n: int) -> int:
    num = 1
    for i in range(n):
        num = num * (2 * n - i) // (i + 1)
    return num // (n + 1)
