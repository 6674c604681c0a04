"""Dense exact-arithmetic matrices over a GF2m context, plus permutations.

Matrices are immutable values; every operation returns a fresh matrix.
Determinant and inverse share one Gaussian elimination code path with
first-nonzero pivoting (row swaps carry no sign in characteristic 2).
"""

from __future__ import annotations

from .errors import DimensionError, SingularMatrixError
from .field import GF2m

MAX_DIM = 64


class Matrix:
    """A rows x cols matrix of int-encoded GF(2^m) elements, row-major."""

    __slots__ = ("ctx", "rows", "cols", "entries")

    def __init__(self, ctx: GF2m, entries):
        rows = tuple(tuple(r) for r in entries)
        if not rows or not rows[0]:
            raise DimensionError("matrix must have at least one row and column")
        cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise DimensionError("ragged rows")
        if len(rows) > MAX_DIM or cols > MAX_DIM:
            raise DimensionError(f"dimensions capped at {MAX_DIM}")
        for r in rows:
            for e in r:
                if not 0 <= e < ctx.q:
                    raise ValueError(f"entry {e:#x} not reduced in GF(2^{ctx.m})")
        self.ctx = ctx
        self.rows = len(rows)
        self.cols = cols
        self.entries = rows

    @classmethod
    def identity(cls, ctx: GF2m, k: int) -> "Matrix":
        return cls(ctx, [[1 if i == j else 0 for j in range(k)] for i in range(k)])

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and other.ctx == self.ctx
            and other.entries == self.entries
        )

    def __hash__(self):
        return hash((self.ctx, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(self.ctx.format_hex(e) for e in r) for r in self.entries)
        return f"Matrix({self.rows}x{self.cols}, [{body}])"

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- ring operations

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(
            self.ctx,
            [[a ^ b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)],
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.ctx != self.ctx:
            raise DimensionError("operands live in different fields")
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        mul = self.ctx.mul
        bt = list(zip(*other.entries))
        out = []
        for arow in self.entries:
            orow = []
            for bcol in bt:
                acc = 0
                for a, b in zip(arow, bcol):
                    if a and b:
                        acc ^= mul(a, b)
                orow.append(acc)
            out.append(orow)
        return Matrix(self.ctx, out)

    def scale(self, c: int) -> "Matrix":
        mul = self.ctx.mul
        return Matrix(self.ctx, [[mul(c, e) for e in r] for r in self.entries])

    def transpose(self) -> "Matrix":
        return Matrix(self.ctx, list(zip(*self.entries)))

    def _check_same_shape(self, other: "Matrix"):
        if other.ctx != self.ctx or (other.rows, other.cols) != (self.rows, self.cols):
            raise DimensionError("shape or field mismatch")

    # -- elimination-based operations (one shared forward pass)

    def _forward_eliminate(self, rows: list[list[int]]) -> int:
        """In-place row echelon with first-nonzero pivoting; returns the
        determinant of the leading square block. Row swaps carry no sign
        in characteristic 2."""
        ctx = self.ctx
        k = self.rows
        det = 1
        for col in range(k):
            pivot = next((r for r in range(col, k) if rows[r][col]), None)
            if pivot is None:
                return 0
            if pivot != col:
                rows[col], rows[pivot] = rows[pivot], rows[col]
            det = ctx.mul(det, rows[col][col])
            inv_p = ctx.inv(rows[col][col])
            for r in range(col + 1, k):
                if rows[r][col]:
                    f = ctx.mul(rows[r][col], inv_p)
                    rows[r] = [x ^ ctx.mul(f, y) for x, y in zip(rows[r], rows[col])]
        return det

    def determinant(self) -> int:
        """Exact determinant by Gaussian elimination."""
        if not self.is_square:
            raise DimensionError("determinant needs a square matrix")
        return self._forward_eliminate([list(r) for r in self.entries])

    def inverse(self) -> "Matrix":
        """Gauss-Jordan on [A | I]: the shared forward pass, then back
        substitution."""
        if not self.is_square:
            raise DimensionError("inverse needs a square matrix")
        ctx = self.ctx
        k = self.rows
        aug = [list(r) + [1 if i == j else 0 for j in range(k)] for i, r in enumerate(self.entries)]
        if self._forward_eliminate(aug) == 0:
            raise SingularMatrixError("matrix is singular")
        for col in range(k - 1, -1, -1):
            inv_p = ctx.inv(aug[col][col])
            aug[col] = [ctx.mul(inv_p, x) for x in aug[col]]
            for r in range(col):
                if aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x ^ ctx.mul(f, y) for x, y in zip(aug[r], aug[col])]
        return Matrix(ctx, [r[k:] for r in aug])

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        """The minor selected by strictly increasing row and column index lists."""
        for name, idx, bound in (("row", row_idx, self.rows), ("col", col_idx, self.cols)):
            if not idx:
                raise DimensionError(f"empty {name} index set")
            if any(i < 0 or i >= bound for i in idx):
                raise DimensionError(f"{name} index out of range: {list(idx)}")
            if any(a >= b for a, b in zip(idx, idx[1:])):
                raise DimensionError(f"{name} indices must be strictly increasing: {list(idx)}")
        return Matrix(self.ctx, [[self.entries[i][j] for j in col_idx] for i in row_idx])


class Permutation:
    """A bijection on {0..k-1}; images[i] = sigma(i).

    Matrix convention: to_matrix(p)[i, p(i)] = 1, so matrix products
    compose left to right: to_matrix(p) @ to_matrix(q) encodes
    "apply p, then q".
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        k = len(images)
        if sorted(images) != list(range(k)):
            raise ValueError(f"not a bijection on 0..{k - 1}: {list(images)}")
        self.images = images

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(range(k))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __eq__(self, other):
        return isinstance(other, Permutation) and other.images == self.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def compose(self, other: "Permutation") -> "Permutation":
        """Apply self first, then other."""
        if other.size != self.size:
            raise DimensionError("size mismatch")
        return Permutation(other.images[i] for i in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, img in enumerate(self.images):
            inv[img] = i
        return Permutation(inv)

    def __pow__(self, e: int) -> "Permutation":
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        out = Permutation.identity(self.size)
        while e:
            if e & 1:
                out = out.compose(base)
            base = base.compose(base)
            e >>= 1
        return out

    def orbit(self, start: int) -> list[int]:
        """The cycle through start: start, sigma(start), sigma^2(start), ..."""
        out = [start]
        cur = self.images[start]
        while cur != start:
            out.append(cur)
            cur = self.images[cur]
        return out

    def is_k_cycle(self) -> bool:
        """True iff the permutation is one cycle covering all k points."""
        return len(self.orbit(0)) == self.size

    def to_matrix(self, ctx: GF2m) -> Matrix:
        k = self.size
        return Matrix(ctx, [[1 if j == self.images[i] else 0 for j in range(k)] for i in range(k)])
