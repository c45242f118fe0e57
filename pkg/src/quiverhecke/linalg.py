"""Exact linear algebra over the rationals.

Everything in the workbench that touches a matrix goes through this module:
dense matrices with Fraction entries, row echelon bookkeeping, kernels and
solvers.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class Matrix:
    """Dense matrix over Q.  Rows are lists of Fractions."""

    __slots__ = ("m", "n", "rows")

    def __init__(self, rows, copy: bool = True):
        if copy:
            self.rows = [[frac(x) for x in row] for row in rows]
        else:
            self.rows = rows
        self.m = len(self.rows)
        self.n = len(self.rows[0]) if self.rows else 0
        for row in self.rows:
            if len(row) != self.n:
                raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, m: int, n: int) -> "Matrix":
        return cls([[ZERO] * n for _ in range(m)], copy=False)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        rows = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = ONE
        return cls(rows, copy=False)

    def copy(self) -> "Matrix":
        return Matrix([row[:] for row in self.rows], copy=False)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __setitem__(self, ij, value):
        i, j = ij
        self.rows[i][j] = frac(value)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("shape mismatch")
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
            copy=False,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("shape mismatch")
        return Matrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
            copy=False,
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.rows], copy=False)

    def scale(self, c) -> "Matrix":
        c = frac(c)
        return Matrix([[c * a for a in row] for row in self.rows], copy=False)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.n != other.m:
                raise ValueError("shape mismatch in product")
            ot = other.rows
            out = []
            for row in self.rows:
                new = [ZERO] * other.n
                for k, a in enumerate(row):
                    if a:
                        ork = ot[k]
                        for j in range(other.n):
                            if ork[j]:
                                new[j] += a * ork[j]
                out.append(new)
            return Matrix(out, copy=False)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def apply(self, vec: list[Fraction]) -> list[Fraction]:
        """Matrix times column vector."""
        if len(vec) != self.n:
            raise ValueError("shape mismatch")
        return [
            sum((a * v for a, v in zip(row, vec) if a), ZERO) for row in self.rows
        ]

    def transpose(self) -> "Matrix":
        return Matrix(
            [[self.rows[i][j] for i in range(self.m)] for j in range(self.n)],
            copy=False,
        )

    def is_zero(self) -> bool:
        return all(not a for row in self.rows for a in row)

    def trace(self) -> Fraction:
        if self.m != self.n:
            raise ValueError("trace of non-square matrix")
        return sum((self.rows[i][i] for i in range(self.m)), ZERO)

    def col(self, j: int) -> list[Fraction]:
        return [self.rows[i][j] for i in range(self.m)]

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.m != other.m:
            raise ValueError("shape mismatch")
        return Matrix(
            [r1 + r2 for r1, r2 in zip(self.rows, other.rows)], copy=False
        )

    def flatten(self) -> list[Fraction]:
        return [a for row in self.rows for a in row]

    @classmethod
    def from_flat(cls, flat, m: int, n: int) -> "Matrix":
        return cls([list(flat[i * n : (i + 1) * n]) for i in range(m)])

    def rank(self) -> int:
        sub = Subspace(self.n)
        for row in self.rows:
            sub.add(row)
        return sub.dim

    def nullspace(self) -> list[list[Fraction]]:
        """Basis of the right kernel {v : A v = 0}."""
        rows = [row[:] for row in self.rows]
        pivots = _rref_inplace(rows)
        pivot_cols = set(pivots)
        basis = []
        for j in range(self.n):
            if j in pivot_cols:
                continue
            v = [ZERO] * self.n
            v[j] = ONE
            for r, pc in enumerate(pivots):
                v[pc] = -rows[r][j]
            basis.append(v)
        return basis

    def solve(self, b: list[Fraction]):
        """One solution of A x = b, or None."""
        rows = [row[:] + [frac(x)] for row, x in zip(self.rows, b)]
        pivots = _rref_inplace(rows)
        x = [ZERO] * self.n
        for r, pc in enumerate(pivots):
            if pc == self.n:
                return None
            x[pc] = rows[r][self.n]
        return x

    def inverse(self):
        if self.m != self.n:
            return None
        rows = [row[:] + irow[:] for row, irow in zip(self.rows, Matrix.identity(self.n).rows)]
        pivots = _rref_inplace(rows)
        if pivots != list(range(self.n)):
            return None
        return Matrix([row[self.n :] for row in rows], copy=False)

    def det(self) -> Fraction:
        if self.m != self.n:
            raise ValueError("det of non-square matrix")
        rows = [row[:] for row in self.rows]
        n = self.n
        d = ONE
        for c in range(n):
            piv = next((r for r in range(c, n) if rows[r][c]), None)
            if piv is None:
                return ZERO
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                d = -d
            d *= rows[c][c]
            inv = ONE / rows[c][c]
            for r in range(c + 1, n):
                if rows[r][c]:
                    f = rows[r][c] * inv
                    for j in range(c, n):
                        rows[r][j] -= f * rows[c][j]
        return d

    def __repr__(self):
        return "Matrix(" + ", ".join(str([str(a) for a in row]) for row in self.rows) + ")"


def _rref_inplace(rows) -> list[int]:
    """Row-reduce in place; returns pivot column of each nonzero row."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ONE / rows[r][c]
        if inv != 1:
            rows[r] = [a * inv for a in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rowr = rows[r]
                rows[i] = [a - f * b for a, b in zip(rows[i], rowr)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    del rows[r:]
    return pivots


class Subspace:
    """A subspace of Q^n kept in reduced row echelon form.

    Supports incremental insertion, membership and canonical reduction
    modulo the subspace; this is the workhorse for spans, ideals and
    quotient coordinates.
    """

    def __init__(self, ambient: int):
        self.ambient = ambient
        self.rows: list[list[Fraction]] = []
        self.pivot_of_row: list[int] = []
        self.row_of_pivot: dict[int, int] = {}

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec) -> list[Fraction]:
        """Canonical representative of vec modulo the subspace."""
        v = [frac(x) for x in vec]
        for pc, r in self.row_of_pivot.items():
            if v[pc]:
                f = v[pc]
                row = self.rows[r]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def contains(self, vec) -> bool:
        return all(not a for a in self.reduce(vec))

    def add(self, vec) -> bool:
        """Insert vec; True iff the dimension grew."""
        v = self.reduce(vec)
        pc = next((j for j, a in enumerate(v) if a), None)
        if pc is None:
            return False
        inv = ONE / v[pc]
        if inv != 1:
            v = [a * inv for a in v]
        for r, row in enumerate(self.rows):
            if row[pc]:
                f = row[pc]
                self.rows[r] = [a - f * b for a, b in zip(row, v)]
        self.rows.append(v)
        self.pivot_of_row.append(pc)
        self.row_of_pivot[pc] = len(self.rows) - 1
        return True

    def add_all(self, vecs) -> None:
        for v in vecs:
            self.add(v)

    def basis(self) -> list[list[Fraction]]:
        return [row[:] for row in self.rows]

    def coords(self, vec):
        """Coordinates of vec in the echelon basis, or None if outside."""
        v = [frac(x) for x in vec]
        out = [ZERO] * self.dim
        for pc, r in self.row_of_pivot.items():
            if v[pc]:
                f = v[pc]
                out[r] = f
                row = self.rows[r]
                v = [a - f * b for a, b in zip(v, row)]
        if any(v):
            return None
        return out

    def nonpivot_columns(self) -> list[int]:
        return [j for j in range(self.ambient) if j not in self.row_of_pivot]

    def quotient_coords(self, vec) -> list[Fraction]:
        """Coordinates of vec in Q^n / subspace (non-pivot columns)."""
        v = self.reduce(vec)
        return [v[j] for j in self.nonpivot_columns()]


def intersect_subspaces(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the kernel of stacked coordinates."""
    if a.ambient != b.ambient:
        raise ValueError("ambient mismatch")
    ab = a.basis()
    bb = b.basis()
    if not ab or not bb:
        return Subspace(a.ambient)
    # solve x*A = y*B, i.e. (x, y) in kernel of [A^T | -B^T]
    rows = []
    for i in range(a.ambient):
        rows.append([r[i] for r in ab] + [-r[i] for r in bb])
    out = Subspace(a.ambient)
    for sol in Matrix(rows, copy=False).nullspace():
        vec = [ZERO] * a.ambient
        for c, row in zip(sol[: len(ab)], ab):
            if c:
                vec = [x + c * y for x, y in zip(vec, row)]
        out.add(vec)
    return out


def solve_many(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the solution space of a homogeneous system given by rows."""
    if not rows:
        return [r for r in Matrix.identity(ncols).rows]
    return Matrix(rows).nullspace()


def vec_is_zero(v) -> bool:
    return all(not a for a in v)


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, v):
    c = frac(c)
    return [c * a for a in v]
