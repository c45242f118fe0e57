"""Young diagrams, residues, standard tableaux and block dimension counts.

The central combinatorial quantity is K(shape, word): the number of standard
tableaux of the given shape whose residue sequence equals the word.  Summing
products of these numbers over partitions gives the graded dimensions of the
finite quiver Hecke algebras, including the total n! count.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .cartan import Weight, fundamental_weight, pair_h

Shape = tuple[int, ...]


def check_shape(shape) -> Shape:
    shape = tuple(int(p) for p in shape)
    if any(p <= 0 for p in shape):
        raise ValueError(f"parts must be positive: {shape}")
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {shape}")
    return shape


def size(shape) -> int:
    return sum(shape)


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Shape, ...]:
    """All partitions of n, in lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Shape] = []

    def rec(remaining: int, maxpart: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for p in range(1, min(maxpart, remaining) + 1):
            rec(remaining - p, p, prefix + (p,))

    rec(n, n, ())
    return tuple(sorted(out))


def residue(ell: int, i: int, j: int) -> int:
    """Residue of the cell in row i, column j (1-indexed): (j - i) mod (ell+1)."""
    if i < 1 or j < 1:
        raise ValueError("cells are 1-indexed")
    return (j - i) % (ell + 1)


def cells(shape) -> list[tuple[int, int]]:
    return [(r + 1, c + 1) for r, p in enumerate(shape) for c in range(p)]


def content_vector(ell: int, shape) -> tuple[int, ...]:
    """Multiset of cell residues, as a vector over I = {0..ell}."""
    out = [0] * (ell + 1)
    for i, j in cells(check_shape(shape)):
        out[residue(ell, i, j)] += 1
    return tuple(out)


def weight_of(ell: int, shape) -> Weight:
    """Lambda_0 minus the sum of alpha_{res(cell)} over the diagram."""
    return fundamental_weight(ell) - Weight(0, content_vector(ell, shape))


class StandardTableau:
    """Standard filling of a Young diagram by 1..n."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        seen = sorted(x for row in self.rows for x in row)
        if seen != list(range(1, len(seen) + 1)):
            raise ValueError("entries must be exactly 1..n")
        for row in self.rows:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise ValueError("rows must increase")
        for r in range(len(self.rows) - 1):
            upper, lower = self.rows[r], self.rows[r + 1]
            if len(lower) > len(upper):
                raise ValueError("shape must be a partition")
            if any(lower[c] <= upper[c] for c in range(len(lower))):
                raise ValueError("columns must increase")

    @property
    def shape(self) -> Shape:
        return tuple(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def cell_of(self, k: int) -> tuple[int, int]:
        for r, row in enumerate(self.rows):
            for c, x in enumerate(row):
                if x == k:
                    return (r + 1, c + 1)
        raise ValueError(f"entry {k} not present")

    def residue_sequence(self, ell: int) -> tuple[int, ...]:
        pos = {}
        for r, row in enumerate(self.rows):
            for c, x in enumerate(row):
                pos[x] = (r + 1, c + 1)
        return tuple(residue(ell, *pos[k]) for k in range(1, self.n + 1))

    def swap(self, k: int):
        """Exchange entries k and k+1; None when the result is not standard."""
        rows = [list(r) for r in self.rows]
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                if x == k:
                    row[c] = k + 1
                elif x == k + 1:
                    row[c] = k
        try:
            return StandardTableau(rows)
        except ValueError:
            return None

    def __eq__(self, other):
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"StandardTableau({[list(r) for r in self.rows]})"


@lru_cache(maxsize=None)
def standard_tableaux(shape: Shape) -> tuple[StandardTableau, ...]:
    """All standard tableaux of the given shape, by recursive cell filling."""
    shape = check_shape(shape) if shape else ()
    n = size(shape)
    out: list[StandardTableau] = []

    def rec(filled: list[list[int]], k: int):
        if k > n:
            out.append(StandardTableau(filled))
            return
        for r in range(len(shape)):
            c = len(filled[r])
            if c >= shape[r]:
                continue
            if r > 0 and len(filled[r - 1]) <= c:
                continue
            filled[r].append(k)
            rec(filled, k + 1)
            filled[r].pop()

    rec([[] for _ in shape], 1)
    return tuple(out)


def hook_length_count(shape) -> int:
    """Number of standard tableaux via the hook length formula (oracle)."""
    shape = check_shape(shape) if shape else ()
    n = size(shape)
    collen = [0] * (shape[0] if shape else 0)
    for p in shape:
        for c in range(p):
            collen[c] += 1
    denom = 1
    for r, p in enumerate(shape):
        for c in range(p):
            denom *= (p - c) + (collen[c] - r) - 1
    return math.factorial(n) // denom


@lru_cache(maxsize=None)
def k_number(ell: int, shape: Shape, nu: tuple[int, ...]) -> int:
    """K(shape, nu): standard tableaux of this shape with residue word nu."""
    shape = check_shape(shape) if shape else ()
    if size(shape) != len(nu):
        raise ValueError("word length must equal the number of cells")
    if not shape:
        return 1
    # remove the last entry: it sits in a removable cell of matching residue
    total = 0
    target = nu[-1]
    for r, p in enumerate(shape):
        if r + 1 < len(shape) and shape[r + 1] == p:
            continue
        if residue(ell, r + 1, p) != target:
            continue
        smaller = list(shape)
        smaller[r] -= 1
        if smaller[r] == 0:
            smaller.pop()
        total += k_number(ell, tuple(smaller), nu[:-1])
    return total


def residue_sequence(ell: int, tableau: StandardTableau) -> tuple[int, ...]:
    return tableau.residue_sequence(ell)


def dim_idempotent_hom(ell: int, nu1, nu2) -> int:
    """dim e(nu1) R(n) e(nu2) = sum over partitions of K(.,nu1) K(.,nu2)."""
    nu1 = tuple(int(i) for i in nu1)
    nu2 = tuple(int(i) for i in nu2)
    if len(nu1) != len(nu2):
        raise ValueError("words must have equal length")
    n = len(nu1)
    total = 0
    for shape in partitions(n):
        a = k_number(ell, shape, nu1)
        if a:
            total += a * k_number(ell, shape, nu2)
    return total


def dim_block(ell: int, beta) -> int:
    """Dimension of the block at content beta: sum of |ST(shape)|^2."""
    beta = tuple(int(b) for b in beta)
    if len(beta) != ell + 1:
        raise ValueError("content vector must have length ell+1")
    n = sum(beta)
    total = 0
    for shape in partitions(n):
        if content_vector(ell, shape) == beta:
            total += hook_length_count(shape) ** 2
    return total


def dim_full(ell: int, n: int) -> int:
    """Total dimension at rank n: the block sum, hard-checked against n!."""
    total = sum(hook_length_count(shape) ** 2 for shape in partitions(n))
    if total != math.factorial(n):
        raise AssertionError(f"block dimension sum {total} != {n}!")
    by_blocks = 0
    seen = set()
    for shape in partitions(n):
        beta = content_vector(ell, shape)
        if beta not in seen:
            seen.add(beta)
            by_blocks += dim_block(ell, beta)
    if by_blocks != total:
        raise AssertionError("per-block dimensions do not add up to n!")
    return total


def addable_cells(ell: int, shape, i: int) -> list[tuple[int, int]]:
    shape = check_shape(shape) if shape else ()
    out = []
    for r in range(len(shape) + 1):
        col = (shape[r] if r < len(shape) else 0) + 1
        if r > 0 and shape[r - 1] < col:
            continue
        if residue(ell, r + 1, col) == i:
            out.append((r + 1, col))
    return out


def removable_cells(ell: int, shape, i: int) -> list[tuple[int, int]]:
    shape = check_shape(shape) if shape else ()
    out = []
    for r, p in enumerate(shape):
        if r + 1 < len(shape) and shape[r + 1] == p:
            continue
        if residue(ell, r + 1, p) == i:
            out.append((r + 1, p))
    return out


def fock_f(ell: int, i: int, shape) -> list[Shape]:
    """All diagrams obtained by adding one box of residue i."""
    shape = check_shape(shape) if shape else ()
    out = []
    for r, _ in addable_cells(ell, shape, i):
        new = list(shape) + ([0] if r - 1 == len(shape) else [])
        new[r - 1] += 1
        out.append(tuple(new))
    return sorted(out)


def fock_e(ell: int, i: int, shape) -> list[Shape]:
    """All diagrams obtained by removing one box of residue i."""
    shape = check_shape(shape) if shape else ()
    out = []
    for r, _ in removable_cells(ell, shape, i):
        new = list(shape)
        new[r - 1] -= 1
        if new[r - 1] == 0:
            new.pop()
        out.append(tuple(new))
    return sorted(out)


def fock_commutator_defect(ell: int, i: int, shape) -> int:
    """|addable boxes| - |removable boxes| - <h_i, wt(shape)>; zero by theory."""
    lhs = len(addable_cells(ell, shape, i)) - len(removable_cells(ell, shape, i))
    return lhs - pair_h(i, weight_of(ell, shape))


def hook_shape(ell: int, i: int) -> Shape:
    """The hook (i, 1^(ell-i)) of size ell, content delta - alpha_i."""
    if not 1 <= i <= ell:
        raise IndexError(f"hook index {i} out of range for rank {ell}")
    return check_shape((i,) + (1,) * (ell - i))


def block_contents(ell: int, n: int) -> list[tuple[int, ...]]:
    """All contents beta with |beta| = n that support a partition."""
    seen = []
    for shape in partitions(n):
        beta = content_vector(ell, shape)
        if beta not in seen:
            seen.append(beta)
    return sorted(seen)


def delta_content(ell: int, k: int = 1) -> tuple[int, ...]:
    """Content vector of k*delta."""
    return tuple(k for _ in range(ell + 1))
