"""MDS, involutory, and orthogonal checks, plus detection of
semi-involutory and semi-orthogonal structure with diagonal-pair
recovery.

A matrix A is semi-involutory when D1 * A * D2 = A^{-1} for some
nonsingular diagonal matrices, and semi-orthogonal when
D1 * A * D2 = (A^{-1})^T. Witness pairs are only determined up to the
scaling family (lam*D1, lam^{-1}*D2) per connected component of the
ratio graph; detection returns the representative with d2 = 1 at the
smallest column node of each component.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .circulant import shifted_convolution
from .errors import DimensionError, SingularMatrixError, SpaceTooLargeError
from .field import GF2m
from .matrix import Matrix

MDS_HARD_CAP = 16
MDS_WARN_DIM = 12


@dataclass(frozen=True)
class DiagonalPair:
    """The (D1, D2) witness of a semi-property, with the k-th power scalars.

    scalar1/scalar2 hold the common value of d1[i]^k / d2[i]^k when all
    entries agree, else None.
    """

    d1: tuple[int, ...]
    d2: tuple[int, ...]
    scalar1: int | None = None
    scalar2: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "d1", tuple(self.d1))
        object.__setattr__(self, "d2", tuple(self.d2))
        if 0 in self.d1 or 0 in self.d2:
            raise ValueError("diagonal witnesses must be non-singular")


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of all five property checks for one matrix."""

    mds: bool
    mds_witness: tuple[tuple[int, ...], tuple[int, ...]] | None
    involutory: bool
    orthogonal: bool
    semi_involutory: DiagonalPair | None
    semi_orthogonal: DiagonalPair | None


def is_mds(a: Matrix):
    """(True, None) iff every square submatrix is nonsingular.

    On failure returns (False, (rows, cols)) for the first singular
    minor in (size, lexicographic rows, lexicographic cols) order.
    Minor counts grow as sum_s C(k,s)^2, so k >= 16 is refused and
    k > 12 warns.
    """
    if not a.is_square:
        raise DimensionError("MDS check needs a square matrix")
    k = a.rows
    if k >= MDS_HARD_CAP:
        raise SpaceTooLargeError(f"full minor enumeration refused for k >= {MDS_HARD_CAP}")
    if k > MDS_WARN_DIM:
        warnings.warn(f"minor enumeration at k={k} is slow", stacklevel=2)
    for size in range(1, k + 1):
        for rows in combinations(range(k), size):
            for cols in combinations(range(k), size):
                if a.submatrix(rows, cols).determinant() == 0:
                    return False, (rows, cols)
    return True, None


def is_involutory(a: Matrix) -> bool:
    """A @ A = I, decided entrywise with early exit."""
    if not a.is_square:
        return False
    ctx, k, e = a.ctx, a.rows, a.entries
    for i in range(k):
        for j in range(k):
            acc = 0
            for t in range(k):
                if e[i][t] and e[t][j]:
                    acc ^= ctx.mul(e[i][t], e[t][j])
            if acc != (1 if i == j else 0):
                return False
    return True


def is_orthogonal(a: Matrix) -> bool:
    """A @ A^T = I."""
    if not a.is_square:
        return False
    return a @ a.transpose() == Matrix.identity(a.ctx, a.rows)


def ratio_components(a: Matrix) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Connected components of the bipartite graph with an edge per
    nonzero entry, as (row indices, column indices) pairs sorted by
    smallest column."""
    k = a.rows
    row_adj = [[j for j in range(a.cols) if a.entries[i][j]] for i in range(k)]
    col_adj = [[i for i in range(k) if a.entries[i][j]] for j in range(a.cols)]
    seen_rows, seen_cols = set(), set()
    comps = []
    for start in range(a.cols):
        if start in seen_cols:
            continue
        rows, cols = set(), {start}
        queue = deque([("c", start)])
        seen_cols.add(start)
        while queue:
            kind, node = queue.popleft()
            neighbors = col_adj[node] if kind == "c" else row_adj[node]
            for nb in neighbors:
                if kind == "c" and nb not in seen_rows:
                    seen_rows.add(nb)
                    rows.add(nb)
                    queue.append(("r", nb))
                elif kind == "r" and nb not in seen_cols:
                    seen_cols.add(nb)
                    cols.add(nb)
                    queue.append(("c", nb))
        comps.append((tuple(sorted(rows)), tuple(sorted(cols))))
    return comps


def _solve_diagonal_sandwich(a: Matrix, b: Matrix):
    """Diagonals (d1, d2) with d1[i]*A[i,j]*d2[j] = B[i,j] for all i, j.

    The constraint is a multiplicative rank-1 condition on the nonzero
    pattern: propagate values over the ratio graph from a d2 = 1 anchor
    at the smallest column of each component, reject on inconsistent
    back edges, then re-verify the full identity. Returns None when no
    pair exists.
    """
    ctx, k = a.ctx, a.rows
    ae, be = a.entries, b.entries
    for i in range(k):
        for j in range(k):
            if (ae[i][j] == 0) != (be[i][j] == 0):
                return None
    ratio = [
        [ctx.mul(be[i][j], ctx.inv(ae[i][j])) if ae[i][j] else 0 for j in range(k)]
        for i in range(k)
    ]
    d1: list[int | None] = [None] * k
    d2: list[int | None] = [None] * k
    for anchor in range(k):
        if d2[anchor] is not None:
            continue
        d2[anchor] = 1
        queue = deque([("c", anchor)])
        while queue:
            kind, node = queue.popleft()
            if kind == "c":
                for i in range(k):
                    if ratio[i][node]:
                        val = ctx.mul(ratio[i][node], ctx.inv(d2[node]))
                        if d1[i] is None:
                            d1[i] = val
                            queue.append(("r", i))
                        elif d1[i] != val:
                            return None
            else:
                for j in range(k):
                    if ratio[node][j]:
                        val = ctx.mul(ratio[node][j], ctx.inv(d1[node]))
                        if d2[j] is None:
                            d2[j] = val
                            queue.append(("c", j))
                        elif d2[j] != val:
                            return None
    if None in d1 or None in d2:
        return None  # isolated node: a zero row or column
    for i in range(k):
        for j in range(k):
            if ae[i][j] and ctx.mul(d1[i], ctx.mul(ae[i][j], d2[j])) != be[i][j]:
                return None
    return tuple(d1), tuple(d2)


def _detect(a: Matrix, b: Matrix) -> DiagonalPair | None:
    sol = _solve_diagonal_sandwich(a, b)
    if sol is None:
        return None
    d1, d2 = sol
    k = a.rows
    return DiagonalPair(
        d1,
        d2,
        scalar1=diagonal_power_scalar(a.ctx, d1, k),
        scalar2=diagonal_power_scalar(a.ctx, d2, k),
    )


def detect_semi_involutory(a: Matrix) -> DiagonalPair | None:
    """Anchored (D1, D2) with D1 A D2 = A^{-1}, or None.

    Raises SingularMatrixError when A has no inverse at all.
    """
    return _detect(a, a.inverse())


def detect_semi_orthogonal(a: Matrix) -> DiagonalPair | None:
    """Anchored (D1, D2) with D1 A D2 = (A^{-1})^T, or None."""
    return _detect(a, a.inverse().transpose())


def diagonal_power_scalar(ctx: GF2m, d, k: int) -> int | None:
    """The common value of d[i]^k when all k-th powers agree, else None."""
    powers = {ctx.pow(x, k) for x in d}
    if len(powers) == 1:
        return powers.pop()
    return None


def rescale_pair(ctx: GF2m, pair: DiagonalPair, lam: int, k: int) -> DiagonalPair:
    """The orbit member (lam*D1, lam^{-1}*D2)."""
    ilam = ctx.inv(lam)
    d1 = tuple(ctx.mul(lam, x) for x in pair.d1)
    d2 = tuple(ctx.mul(ilam, x) for x in pair.d2)
    return DiagonalPair(
        d1,
        d2,
        scalar1=diagonal_power_scalar(ctx, d1, k),
        scalar2=diagonal_power_scalar(ctx, d2, k),
    )


def scaling_freedom_normalize(ctx: GF2m, pair: DiagonalPair, components) -> DiagonalPair:
    """Rescale so d2 = 1 at the smallest column node of each component.

    components is the (rows, cols) list from ratio_components() of the
    matrix the pair witnesses; detection output is already in this form.
    """
    k = len(pair.d1)
    d1, d2 = list(pair.d1), list(pair.d2)
    for rows, cols in components:
        anchor = min(cols)
        lam = d2[anchor]
        ilam = ctx.inv(lam)
        for i in rows:
            d1[i] = ctx.mul(d1[i], lam)
        for j in cols:
            d2[j] = ctx.mul(d2[j], ilam)
    return DiagonalPair(
        tuple(d1),
        tuple(d2),
        scalar1=diagonal_power_scalar(ctx, d1, k),
        scalar2=diagonal_power_scalar(ctx, d2, k),
    )


def left_circulant_involutory_conditions(ctx: GF2m, row) -> bool:
    """Involutory test for left-circulant matrices from the first row alone.

    True iff the row sums to 1 and, with g = k-1, the convolution
    sum over g*i + j = l (mod k) vanishes for l = 1..floor((k-1)/2).
    Equivalent to is_involutory(build_left_circulant(ctx, row)).
    """
    row = tuple(row)
    k = len(row)
    total = 0
    for c in row:
        total ^= c
    if total != 1:
        return False
    if k == 1:
        return True
    conv = shifted_convolution(ctx, row, k - 1)
    return all(conv[l] == 0 for l in range(1, (k - 1) // 2 + 1))


def involutory_g_filter(g: int, k: int) -> bool:
    """False (prune) iff g^2 != 1 (mod k), when no g-circulant of order k
    can be involutory; True only means "not excluded"."""
    return g * g % k == 1 % k


def full_report(a: Matrix) -> PropertyReport:
    """Run all five property checks on one square matrix."""
    mds, witness = is_mds(a)
    try:
        inv = a.inverse()
    except SingularMatrixError:
        return PropertyReport(mds, witness, False, False, None, None)
    return PropertyReport(
        mds=mds,
        mds_witness=witness,
        involutory=is_involutory(a),
        orthogonal=is_orthogonal(a),
        semi_involutory=_detect(a, inv),
        semi_orthogonal=_detect(a, inv.transpose()),
    )
