"""Cyclotomic quiver Hecke algebras of affine type A at the fundamental weight.

This module holds the normalized presentation (deformation parameter lam),
a relation verifier for explicit matrix representations, a catalog of small
modules in ranks <= 5 built from exact matrices, restriction functors, the
matrix-algebra closure with its radical, and module isomorphism testing.

Conventions: modules are left modules, operators act on column vectors, and
x*y means "apply y, then x".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import Matrix, Subspace, frac, vec_is_zero
from .polys import Poly
from .tableaux import hook_shape, residue_sequence, standard_tableaux


class ShapeMismatchError(ValueError):
    pass


class InternalPolynomialError(RuntimeError):
    """A deformation polynomial failed an exact divisibility it must satisfy."""


@dataclass(frozen=True)
class KLRPresentation:
    """Rank data for R^{Lambda_0}(n) of type A^(1)_ell with parameter lam.

    An optional symmetric scaling matrix C (all entries nonzero) twists the
    deformation polynomials to C_ij^2 * Q_ij(C_ii u, C_jj v); this realizes
    the standard one-parameter normalization argument.
    """

    ell: int
    n: int
    lam: Fraction
    scaling: tuple[tuple[Fraction, ...], ...] | None = None

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("ell must be >= 1")
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if self.scaling is not None:
            c = self.scaling
            k = self.ell + 1
            if len(c) != k or any(len(row) != k for row in c):
                raise ValueError("scaling matrix has wrong size")
            for i in range(k):
                for j in range(k):
                    if c[i][j] != c[j][i]:
                        raise ValueError("scaling matrix must be symmetric")
                    if c[i][j] == 0:
                        raise ValueError("scaling matrix entries must be nonzero")

    def rescaled(self, c_matrix) -> "KLRPresentation":
        c = tuple(tuple(frac(x) for x in row) for row in c_matrix)
        return KLRPresentation(self.ell, self.n, self.lam, c)


def presentation(ell: int, n: int, lam) -> KLRPresentation:
    return KLRPresentation(ell, n, frac(lam))


def _base_q_poly(ell: int, lam: Fraction, i: int, j: int) -> Poly:
    if not (0 <= i <= ell and 0 <= j <= ell):
        raise IndexError("residue out of range")
    u, v = Poly.var(2, 0), Poly.var(2, 1)
    if i == j:
        return Poly.zero(2)
    if ell == 1:
        return u * u + lam * (u * v) + v * v
    d = (j - i) % (ell + 1)
    if d == 1:
        return u + lam * v if i == ell else u + v
    if d == ell:
        # mirror of the previous case: Q_ij(u,v) = Q_ji(v,u)
        return lam * u + v if j == ell else u + v
    return Poly.const(2, 1)


def q_poly(pres: KLRPresentation, i: int, j: int) -> Poly:
    """The deformation polynomial Q_{i,j}(u, v) of the presentation."""
    q = _base_q_poly(pres.ell, pres.lam, i, j)
    if pres.scaling is not None:
        c = pres.scaling
        q = (c[i][j] ** 2) * q.substitute_scaled((c[i][i], c[j][j]))
    return q


def braid_correction(pres: KLRPresentation, i: int, j: int) -> Poly:
    """(Q_ij(u,v) - Q_ij(w,v)) / (u - w), a polynomial in u, v, w."""
    q3 = q_poly(pres, i, j).extend(3)
    # swap u into the w slot for the second copy
    shifted = Poly(3, {(0, e[1], e[0]): c for e, c in q3.terms.items()})
    numerator = q3 - shifted
    u, w = Poly.var(3, 0), Poly.var(3, 2)
    quotient = numerator.divide_exact(u - w)
    if quotient is None:
        raise InternalPolynomialError(f"Q_{i}{j} is not symmetric-divisible by u - w")
    return quotient


def swap_word(word: tuple[int, ...], k: int) -> tuple[int, ...]:
    """Apply the transposition s_k (1-indexed) to a residue word."""
    w = list(word)
    w[k - 1], w[k] = w[k], w[k - 1]
    return tuple(w)


@dataclass
class MatrixRep:
    """Exact matrix assignment for the generators at fixed (ell, n, lam).

    `idempotents` stores only the nonzero e(word) projectors; their sum must
    be the identity.  `x` has n entries, `psi` has n-1.
    """

    pres: KLRPresentation
    dim: int
    idempotents: dict[tuple[int, ...], Matrix]
    x: list[Matrix]
    psi: list[Matrix]
    basis_names: list[str] = field(default_factory=list)

    def __post_init__(self):
        if len(self.x) != self.pres.n or len(self.psi) != max(self.pres.n - 1, 0):
            raise ShapeMismatchError("generator counts do not match the rank")
        for word in self.idempotents:
            if len(word) != self.pres.n or any(not 0 <= a <= self.pres.ell for a in word):
                raise ShapeMismatchError(f"bad residue word {word}")
        if not self.basis_names:
            self.basis_names = [f"b{i + 1}" for i in range(self.dim)]

    def idempotent(self, word) -> Matrix:
        word = tuple(word)
        return self.idempotents.get(word, Matrix.zeros(self.dim, self.dim))

    def words(self) -> list[tuple[int, ...]]:
        return sorted(self.idempotents)

    def zero(self) -> Matrix:
        return Matrix.zeros(self.dim, self.dim)

    def to_json(self) -> dict:
        def render(mat: Matrix):
            return [[str(a) for a in row] for row in mat.rows]

        idem = {}
        for word, mat in sorted(self.idempotents.items()):
            bits = [mat[i, i] for i in range(self.dim)]
            if Matrix([[b if r == c else 0 for c, b in enumerate(bits)] for r in range(self.dim)]) != mat:
                raise ValueError("only diagonal idempotent projectors serialize")
            idem["".join(str(a) for a in word)] = [int(b) for b in bits]
        return {
            "ell": self.pres.ell,
            "n": self.pres.n,
            "lambda": str(self.pres.lam),
            "dim": self.dim,
            "idempotents": idem,
            "x": [render(m) for m in self.x],
            "psi": [render(m) for m in self.psi],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MatrixRep":
        pres = presentation(int(data["ell"]), int(data["n"]), data["lambda"])
        dim = int(data["dim"])
        idem = {}
        for key, bits in data["idempotents"].items():
            word = tuple(int(ch) for ch in key)
            mat = Matrix.zeros(dim, dim)
            for i, b in enumerate(bits):
                mat[i, i] = b
            idem[word] = mat
        x = [Matrix(rows) for rows in data["x"]]
        psi = [Matrix(rows) for rows in data["psi"]]
        return cls(pres, dim, idem, x, psi)


@dataclass
class RelationFailure:
    family: str
    word: tuple[int, ...] | None
    indices: tuple[int, ...]
    residual: Matrix

    def describe(self, names=None) -> str:
        where = "".join(str(a) for a in self.word) if self.word else "-"
        cols = []
        if names:
            for j in range(self.residual.n):
                col = self.residual.col(j)
                if not vec_is_zero(col):
                    image = " + ".join(
                        f"({c})*{names[i]}" for i, c in enumerate(col) if c
                    )
                    cols.append(f"{names[j]} -> {image}")
        detail = ("; " + "; ".join(cols)) if cols else ""
        return f"{self.family} at e({where}) indices {self.indices}{detail}"


@dataclass
class RelationReport:
    failures: list[RelationFailure]
    checked: int

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        if self.passed:
            return f"PASS ({self.checked} relation instances)"
        lines = [f"FAIL ({len(self.failures)} of {self.checked} relation instances)"]
        lines += ["  " + f.family + str(f.indices) + " at " + ("".join(map(str, f.word)) if f.word else "-") for f in self.failures[:10]]
        return "\n".join(lines)


def verify_rep(pres: KLRPresentation, rep: MatrixRep) -> RelationReport:
    """Check every defining relation family on the matrix assignment."""
    if (rep.pres.ell, rep.pres.n) != (pres.ell, pres.n):
        raise ShapeMismatchError("representation shape does not match the presentation")
    n, d = pres.n, rep.dim
    failures: list[RelationFailure] = []
    checked = 0
    ident = Matrix.identity(d)
    words = rep.words()

    def record(family, word, indices, residual):
        nonlocal checked
        checked += 1
        if not residual.is_zero():
            failures.append(RelationFailure(family, word, indices, residual))

    # idempotents: orthogonality and completeness
    total = Matrix.zeros(d, d)
    for w1 in words:
        e1 = rep.idempotent(w1)
        total = total + e1
        for w2 in words:
            e2 = rep.idempotent(w2)
            expected = e1 if w1 == w2 else Matrix.zeros(d, d)
            record("idempotent_product", w1, (words.index(w2),), e1 * e2 - expected)
    record("idempotent_sum", None, (), total - ident)

    # x e(w) = e(w) x and x_k x_l = x_l x_k
    for k in range(n):
        for w in words:
            e = rep.idempotent(w)
            record("x_idempotent", w, (k + 1,), rep.x[k] * e - e * rep.x[k])
        for l in range(k + 1, n):
            record("x_commute", None, (k + 1, l + 1), rep.x[k] * rep.x[l] - rep.x[l] * rep.x[k])

    # psi_l e(w) = e(s_l w) psi_l
    for l in range(n - 1):
        for w in words:
            e = rep.idempotent(w)
            es = rep.idempotent(swap_word(w, l + 1))
            record("psi_idempotent", w, (l + 1,), rep.psi[l] * e - es * rep.psi[l])

    # distant psi commute
    for k in range(n - 1):
        for l in range(k + 2, n - 1):
            record("psi_distant", None, (k + 1, l + 1), rep.psi[k] * rep.psi[l] - rep.psi[l] * rep.psi[k])

    # psi_k^2 e(w) = Q_{w_k, w_{k+1}}(x_k, x_{k+1}) e(w)
    for k in range(n - 1):
        for w in words:
            e = rep.idempotent(w)
            q = q_poly(pres, w[k], w[k + 1]).eval_matrices([rep.x[k], rep.x[k + 1]], d)
            record("psi_square", w, (k + 1,), rep.psi[k] * rep.psi[k] * e - q * e)

    # (psi_k x_l - x_{s_k(l)} psi_k) e(w)
    for k in range(1, n):
        for l in range(1, n + 1):
            sl = l
            if l == k:
                sl = k + 1
            elif l == k + 1:
                sl = k
            for w in words:
                e = rep.idempotent(w)
                lhs = rep.psi[k - 1] * rep.x[l - 1] - rep.x[sl - 1] * rep.psi[k - 1]
                rhs = Matrix.zeros(d, d)
                if w[k - 1] == w[k]:
                    if l == k:
                        rhs = -ident
                    elif l == k + 1:
                        rhs = ident
                record("psi_x", w, (k, l), (lhs - rhs) * e)

    # braid deviation
    for k in range(1, n - 1):
        a, b, c = rep.psi[k], rep.psi[k - 1], rep.psi[k]
        lhs = a * b * c - rep.psi[k - 1] * rep.psi[k] * rep.psi[k - 1]
        for w in words:
            e = rep.idempotent(w)
            rhs = Matrix.zeros(d, d)
            if w[k - 1] == w[k + 1]:
                corr = braid_correction(pres, w[k - 1], w[k])
                rhs = corr.eval_matrices([rep.x[k - 1], rep.x[k], rep.x[k + 1]], d)
            record("braid", w, (k,), (lhs - rhs) * e)

    # cyclotomic relation at Lambda_0: x_1^{<h_{w_1}, Lambda_0>} e(w) = 0
    for w in words:
        e = rep.idempotent(w)
        power = 1 if w[0] == 0 else 0
        lhs = e
        for _ in range(power):
            lhs = rep.x[0] * lhs
        record("cyclotomic", w, (), lhs)

    return RelationReport(failures, checked)


def rescale_rep(rep: MatrixRep, c_matrix) -> MatrixRep:
    """x_k e(w) -> c_{w_k w_k}^{-1} x_k e(w);  psi_k e(w) -> c_{w_k w_{k+1}} psi_k e(w)."""
    c = [[frac(x) for x in row] for row in c_matrix]
    for row in c:
        for entry in row:
            if entry == 0:
                raise ValueError("scaling matrix entries must be nonzero")
    n, d = rep.pres.n, rep.dim
    new_x = []
    for k in range(n):
        acc = Matrix.zeros(d, d)
        for w, e in rep.idempotents.items():
            acc = acc + (rep.x[k] * e).scale(1 / c[w[k]][w[k]])
        new_x.append(acc)
    new_psi = []
    for k in range(n - 1):
        acc = Matrix.zeros(d, d)
        for w, e in rep.idempotents.items():
            acc = acc + (rep.psi[k] * e).scale(c[w[k]][w[k + 1]])
        new_psi.append(acc)
    return MatrixRep(
        rep.pres.rescaled(c), d, dict(rep.idempotents), new_x, new_psi, list(rep.basis_names)
    )


# ---------------------------------------------------------------------------
# module catalog
# ---------------------------------------------------------------------------


def _entry_matrix(d: int, entries: dict[tuple[int, int], object]) -> Matrix:
    m = Matrix.zeros(d, d)
    for (i, j), c in entries.items():
        m[i, j] = frac(c)
    return m


def _diag_projector(d: int, ones: list[int]) -> Matrix:
    m = Matrix.zeros(d, d)
    for i in ones:
        m[i, i] = 1
    return m


def build_L(ell: int, i: int, lam=0) -> MatrixRep:
    """Simple module at content delta - alpha_i, spanned by the standard
    tableaux of the hook (i, 1^(ell-i)); polynomial generators act by zero
    and the intertwiners permute tableaux when the swap stays standard."""
    shape = hook_shape(ell, i)
    tabs = list(standard_tableaux(shape))
    d = len(tabs)
    pres = presentation(ell, ell, lam)
    index = {t: a for a, t in enumerate(tabs)}
    idems: dict[tuple[int, ...], Matrix] = {}
    for a, t in enumerate(tabs):
        word = residue_sequence(ell, t)
        idems.setdefault(word, Matrix.zeros(d, d))[a, a] = 1
    x = [Matrix.zeros(d, d) for _ in range(ell)]
    psi = []
    for k in range(1, ell):
        m = Matrix.zeros(d, d)
        for a, t in enumerate(tabs):
            s = t.swap(k)
            if s is not None:
                m[index[s], a] = 1
        psi.append(m)
    names = [f"T{a + 1}" for a in range(d)]
    return MatrixRep(pres, d, idems, x, psi, names)


def build_S(ell: int, i: int, lam=0) -> MatrixRep:
    """Extension of build_L(ell, i) to rank ell+1: the new generators act by
    zero and the residue words gain a final letter i."""
    base = build_L(ell, i, lam)
    d = base.dim
    pres = presentation(ell, ell + 1, lam)
    idems = {word + (i,): mat for word, mat in base.idempotents.items()}
    x = base.x + [Matrix.zeros(d, d)]
    psi = base.psi + [Matrix.zeros(d, d)]
    return MatrixRep(pres, d, idems, x, psi, list(base.basis_names))


def build_M0(lam=0) -> MatrixRep:
    """2-dimensional simple at rank 3, content (1,2): the full 2x2 matrix
    algebra realization (basis v1, v2)."""
    d = 2
    pres = presentation(1, 3, lam)
    idems = {(0, 1, 1): Matrix.identity(d)}
    x = [Matrix.zeros(d, d), _entry_matrix(d, {(0, 1): 1}), _entry_matrix(d, {(0, 1): -1})]
    psi = [Matrix.zeros(d, d), _entry_matrix(d, {(1, 0): -1})]
    return MatrixRep(pres, d, idems, x, psi, ["v1", "v2"])


def build_M1hat(lam=0) -> MatrixRep:
    """Uniserial length-2 module at rank 3, content (2,1) (basis w1, w2)."""
    lam = frac(lam)
    d = 2
    pres = presentation(1, 3, lam)
    idems = {(0, 1, 0): Matrix.identity(d)}
    x = [Matrix.zeros(d, d), _entry_matrix(d, {(0, 1): 1}), _entry_matrix(d, {(0, 1): -lam})]
    psi = [Matrix.zeros(d, d), Matrix.zeros(d, d)]
    return MatrixRep(pres, d, idems, x, psi, ["w1", "w2"])


def build_M1(lam=0) -> MatrixRep:
    """Simple quotient of build_M1hat: one-dimensional at word 010."""
    pres = presentation(1, 3, lam)
    return MatrixRep(pres, 1, {(0, 1, 0): Matrix.identity(1)}, [Matrix.zeros(1, 1)] * 3, [Matrix.zeros(1, 1)] * 2, ["w"])


def build_N0(lam=0) -> MatrixRep:
    """build_M0 extended to rank 4 by zero action of x_4 and psi_3."""
    base = build_M0(lam)
    d = base.dim
    pres = presentation(1, 4, lam)
    idems = {(0, 1, 1, 0): Matrix.identity(d)}
    x = base.x + [Matrix.zeros(d, d)]
    psi = base.psi + [Matrix.zeros(d, d)]
    return MatrixRep(pres, d, idems, x, psi, list(base.basis_names))


def build_N1hat(lam=0) -> MatrixRep:
    """build_M1hat extended to rank 4; x_4 sends w2 to (lam^2 - 1) w1."""
    lam = frac(lam)
    base = build_M1hat(lam)
    d = base.dim
    pres = presentation(1, 4, lam)
    idems = {(0, 1, 0, 1): Matrix.identity(d)}
    x = base.x + [_entry_matrix(d, {(0, 1): lam * lam - 1})]
    psi = base.psi + [Matrix.zeros(d, d)]
    return MatrixRep(pres, d, idems, x, psi, list(base.basis_names))


def build_N1(lam=0) -> MatrixRep:
    """Simple quotient of build_N1hat: one-dimensional at word 0101."""
    pres = presentation(1, 4, lam)
    return MatrixRep(pres, 1, {(0, 1, 0, 1): Matrix.identity(1)}, [Matrix.zeros(1, 1)] * 4, [Matrix.zeros(1, 1)] * 3, ["w"])


def build_T0(lam=0) -> MatrixRep:
    """Glued extension of build_N0 by build_N1hat through psi_3 (v_i -> w_i).

    Only consistent when lam = 0; for other parameters the verifier exhibits
    the failing psi_3 x_3 - x_4 psi_3 instance.  Basis (v1, v2, w1, w2).
    """
    lam = frac(lam)
    d = 4
    pres = presentation(1, 4, lam)
    idems = {
        (0, 1, 1, 0): _diag_projector(d, [0, 1]),
        (0, 1, 0, 1): _diag_projector(d, [2, 3]),
    }
    x = [
        Matrix.zeros(d, d),
        _entry_matrix(d, {(0, 1): 1, (2, 3): 1}),
        _entry_matrix(d, {(0, 1): -1, (2, 3): -lam}),
        _entry_matrix(d, {(2, 3): lam * lam - 1}),
    ]
    psi = [
        Matrix.zeros(d, d),
        _entry_matrix(d, {(1, 0): -1}),
        _entry_matrix(d, {(2, 0): 1, (3, 1): 1}),
    ]
    return MatrixRep(pres, d, idems, x, psi, ["v1", "v2", "w1", "w2"])


def build_T1(lam=0) -> MatrixRep:
    """Length-3 extension with socle a second copy of build_N0.

    Basis (v1, v2, w, t1, t2); x_4 maps v_i to t_i, psi_3 maps v2 to -lam*w
    and w to t1.
    """
    lam = frac(lam)
    d = 5
    pres = presentation(1, 4, lam)
    idems = {
        (0, 1, 1, 0): _diag_projector(d, [0, 1, 3, 4]),
        (0, 1, 0, 1): _diag_projector(d, [2]),
    }
    x = [
        Matrix.zeros(d, d),
        _entry_matrix(d, {(0, 1): 1, (3, 4): 1}),
        _entry_matrix(d, {(0, 1): -1, (3, 4): -1}),
        _entry_matrix(d, {(3, 0): 1, (4, 1): 1}),
    ]
    psi = [
        Matrix.zeros(d, d),
        _entry_matrix(d, {(1, 0): -1, (4, 3): -1}),
        _entry_matrix(d, {(2, 1): -lam, (3, 2): 1}),
    ]
    return MatrixRep(pres, d, idems, x, psi, ["v1", "v2", "w", "t1", "t2"])


def build_T1hat(lam=0) -> MatrixRep:
    """build_T1 extended by a sixth vector u on top (word 0101)."""
    lam = frac(lam)
    d = 6
    pres = presentation(1, 4, lam)
    idems = {
        (0, 1, 1, 0): _diag_projector(d, [0, 1, 3, 4]),
        (0, 1, 0, 1): _diag_projector(d, [2, 5]),
    }
    x = [
        Matrix.zeros(d, d),
        _entry_matrix(d, {(0, 1): 1, (3, 4): 1, (2, 5): 1}),
        _entry_matrix(d, {(0, 1): -1, (3, 4): -1, (2, 5): -lam}),
        _entry_matrix(d, {(3, 0): 1, (4, 1): 1, (2, 5): -1}),
    ]
    psi = [
        Matrix.zeros(d, d),
        _entry_matrix(d, {(1, 0): -1, (4, 3): -1}),
        _entry_matrix(d, {(2, 1): -lam, (3, 2): 1, (0, 5): -lam, (4, 5): 1}),
    ]
    return MatrixRep(pres, d, idems, x, psi, ["v1", "v2", "w", "t1", "t2", "u"])


def build_V(lam=0) -> MatrixRep:
    """Rank-5 extension of build_T1hat, content 2*delta + alpha_0.

    Basis (v1, v2, w, t1, t2, u); the new generators act by
    x_5 v_k = -t_k, x_5 u = lam*w, psi_4 t_k = -v_k.
    """
    lam = frac(lam)
    base = build_T1hat(lam)
    d = 6
    pres = presentation(1, 5, lam)
    idems = {
        (0, 1, 1, 0, 0): _diag_projector(d, [0, 1, 3, 4]),
        (0, 1, 0, 1, 0): _diag_projector(d, [2, 5]),
    }
    x = base.x + [_entry_matrix(d, {(3, 0): -1, (4, 1): -1, (2, 5): lam})]
    psi = base.psi + [_entry_matrix(d, {(0, 3): -1, (1, 4): -1})]
    return MatrixRep(pres, d, idems, x, psi, list(base.basis_names))


def restrict_to_span(rep: MatrixRep, indices: list[int]) -> MatrixRep:
    """Restrict to the coordinate subspace spanned by the given basis indices.

    The subspace must be invariant under every generator.
    """
    d = len(indices)
    lookup = {b: a for a, b in enumerate(indices)}

    def cut(mat: Matrix) -> Matrix:
        out = Matrix.zeros(d, d)
        for a, col in enumerate(indices):
            for r in range(rep.dim):
                val = mat[r, col]
                if val:
                    if r not in lookup:
                        raise ValueError("span is not invariant")
                    out[lookup[r], a] = val
        return out

    idems = {}
    for word, e in rep.idempotents.items():
        m = cut(e)
        if not m.is_zero():
            idems[word] = m
    return MatrixRep(
        rep.pres,
        d,
        idems,
        [cut(m) for m in rep.x],
        [cut(m) for m in rep.psi],
        [rep.basis_names[i] for i in indices],
    )


def build_O0(lam=0) -> MatrixRep:
    """Simple submodule of build_V: 4-dimensional when lam = 0 (v's and t's),
    5-dimensional otherwise (w joins)."""
    lam = frac(lam)
    v = build_V(lam)
    if lam == 0:
        return restrict_to_span(v, [0, 1, 3, 4])
    return restrict_to_span(v, [0, 1, 2, 3, 4])


def build_U(lam=0) -> MatrixRep:
    """The 5-dimensional submodule (v1, v2, w, t1, t2) of build_V."""
    return restrict_to_span(build_V(lam), [0, 1, 2, 3, 4])


def build_O1(lam=0) -> MatrixRep:
    """One-dimensional quotient of build_V by build_U (word 01010)."""
    pres = presentation(1, 5, lam)
    return MatrixRep(pres, 1, {(0, 1, 0, 1, 0): Matrix.identity(1)}, [Matrix.zeros(1, 1)] * 5, [Matrix.zeros(1, 1)] * 4, ["u"])


def build_O1hat(lam=0) -> MatrixRep:
    """build_N1hat extended to rank 5; x_5 sends w2 to (2*lam - lam^3) w1."""
    lam = frac(lam)
    base = build_N1hat(lam)
    d = base.dim
    pres = presentation(1, 5, lam)
    idems = {(0, 1, 0, 1, 0): Matrix.identity(d)}
    x = base.x + [_entry_matrix(d, {(0, 1): 2 * lam - lam**3})]
    psi = base.psi + [Matrix.zeros(d, d)]
    return MatrixRep(pres, d, idems, x, psi, list(base.basis_names))


ZOO_BUILDERS = {
    "M0": build_M0,
    "M1": build_M1,
    "M1hat": build_M1hat,
    "N0": build_N0,
    "N1": build_N1,
    "N1hat": build_N1hat,
    "T0": build_T0,
    "T1": build_T1,
    "T1hat": build_T1hat,
    "V": build_V,
    "U": build_U,
    "O0": build_O0,
    "O1": build_O1,
    "O1hat": build_O1hat,
}


def build_zoo(name: str, lam=0, ell: int | None = None, i: int | None = None) -> MatrixRep:
    if name in ("L", "S"):
        if ell is None or i is None:
            raise ValueError(f"zoo module {name} needs ell and i")
        return (build_L if name == "L" else build_S)(ell, i, lam)
    if name not in ZOO_BUILDERS:
        raise KeyError(f"unknown zoo module {name!r}")
    return ZOO_BUILDERS[name](lam)


# ---------------------------------------------------------------------------
# restriction and structure analysis
# ---------------------------------------------------------------------------


def restrict_E(rep: MatrixRep, i: int) -> MatrixRep:
    """Restriction functor: the part whose residue word ends in i, as a
    representation of rank n-1."""
    if rep.pres.n < 1:
        raise ValueError("cannot restrict a rank-0 representation")
    keep = [w for w in rep.words() if w[-1] == i]
    cols: list[list[Fraction]] = []
    sub = Subspace(rep.dim)
    for w in keep:
        e = rep.idempotents[w]
        for j in range(rep.dim):
            col = e.col(j)
            if not vec_is_zero(col) and sub.add(col):
                cols.append(col)
    basis = sub.basis()
    d = len(basis)
    pres = presentation(rep.pres.ell, rep.pres.n - 1, rep.pres.lam)
    if d == 0:
        return MatrixRep(pres, 0, {}, [Matrix.zeros(0, 0)] * pres.n, [Matrix.zeros(0, 0)] * max(pres.n - 1, 0), [])
    bmat = Matrix(basis).transpose()  # columns are the subspace basis

    def coords(vec) -> list[Fraction]:
        c = sub.coords(vec)
        if c is None:
            raise ValueError("subspace is not invariant under the restricted action")
        return c

    def cut(mat: Matrix) -> Matrix:
        image = mat * bmat
        return Matrix([coords(image.col(j)) for j in range(d)]).transpose()

    idems = {}
    for w in keep:
        m = cut(rep.idempotents[w])
        if not m.is_zero():
            idems[w[:-1]] = m
    x = [cut(rep.x[k]) for k in range(pres.n)]
    psi = [cut(rep.psi[k]) for k in range(max(pres.n - 1, 0))]
    return MatrixRep(pres, d, idems, x, psi)


def epsilon(rep: MatrixRep, i: int) -> int:
    """Largest k with the k-fold restriction at residue i nonzero."""
    count = 0
    current = rep
    while current.pres.n >= 1:
        current = restrict_E(current, i)
        if current.dim == 0:
            return count
        count += 1
    return count


def generator_matrices(rep: MatrixRep) -> list[Matrix]:
    return list(rep.idempotents.values()) + list(rep.x) + list(rep.psi)


def algebra_closure(rep: MatrixRep) -> list[Matrix]:
    """Basis of the unital subalgebra of End generated by the assignment."""
    d = rep.dim
    if d == 0:
        return []
    gens = [Matrix.identity(d)] + generator_matrices(rep)
    span = Subspace(d * d)
    basis: list[Matrix] = []
    frontier: list[Matrix] = []
    for g in gens:
        if span.add(g.flatten()):
            basis.append(g)
            frontier.append(g)
    while frontier:
        new_frontier = []
        for b in frontier:
            for g in gens[1:]:
                prod = b * g
                if span.add(prod.flatten()):
                    basis.append(prod)
                    new_frontier.append(prod)
        frontier = new_frontier
    return basis


def is_absolutely_irreducible(rep: MatrixRep) -> bool:
    """Burnside test: the closure fills all of End."""
    if rep.dim == 0:
        return False
    return len(algebra_closure(rep)) == rep.dim * rep.dim


def closure_radical(closure: list[Matrix]) -> list[Matrix]:
    """Radical of a matrix algebra via the trace form, with a nilpotency check.

    In characteristic zero the radical of a subalgebra of End(V) is the
    kernel of (a, b) -> trace(ab) on the algebra.
    """
    if not closure:
        return []
    dim = len(closure)
    gram = Matrix(
        [[(closure[i] * closure[j]).trace() for j in range(dim)] for i in range(dim)]
    )
    radical = []
    for coeffs in gram.nullspace():
        acc = Matrix.zeros(closure[0].m, closure[0].n)
        for c, b in zip(coeffs, closure):
            if c:
                acc = acc + b.scale(c)
        radical.append(acc)
    # nilpotency oracle: span of products shrinks to zero
    power = radical
    steps = 0
    while power:
        steps += 1
        if steps > dim + 1:
            raise AssertionError("trace-form radical is not nilpotent")
        span = Subspace(closure[0].m * closure[0].n)
        nxt = []
        for a in power:
            for b in radical:
                p = a * b
                if span.add(p.flatten()):
                    nxt.append(p)
        power = nxt
    return radical


def _module_filtration(rep: MatrixRep, radical: list[Matrix]) -> list[list[list[Fraction]]]:
    """Bases of M, JM, J^2 M, ... as column spans."""
    layers = []
    current = [col for col in Matrix.identity(rep.dim).rows]
    while current:
        layers.append(current)
        span = Subspace(rep.dim)
        for j in radical:
            for v in current:
                span.add(j.apply(v))
        current = span.basis()
    layers.append([])
    return layers


def _word_profile(rep: MatrixRep, vectors: list[list[Fraction]], inside: Subspace | None = None):
    """Dimensions of the e(word) pieces of span(vectors) modulo `inside`."""
    profile = {}
    for word in rep.words():
        e = rep.idempotents[word]
        span = Subspace(rep.dim)
        if inside is not None:
            for row in inside.basis():
                span.add(row)
        base = span.dim
        for v in vectors:
            span.add(e.apply(v))
        profile[word] = span.dim - base
    return profile


def radical_layers(rep: MatrixRep, simples: list[tuple[str, MatrixRep]] | None = None):
    """Radical filtration layers of the module underlying the representation.

    Each layer is reported by dimension and by its e(word) profile; when a
    list of named simple modules is supplied, the profile is resolved into
    multiplicities.
    """
    closure = algebra_closure(rep)
    radical = closure_radical(closure)
    chains = _module_filtration(rep, radical)
    layers = []
    for k in range(len(chains) - 1):
        upper, lower = chains[k], chains[k + 1]
        inside = Subspace(rep.dim)
        for v in lower:
            inside.add(v)
        profile = _word_profile(rep, upper, inside)
        entry = {
            "dim": len(upper) - len(lower),
            "profile": {w: c for w, c in profile.items() if c},
        }
        if simples is not None:
            entry["composition"] = _resolve_composition(entry["profile"], rep, simples)
        layers.append(entry)
    return layers


def _resolve_composition(profile, rep: MatrixRep, simples):
    words = sorted({w for _, s in simples for w in s.words()} | set(profile))
    columns = []
    for _, s in simples:
        sprof = {w: s.idempotent(w).trace() for w in s.words()}
        columns.append([frac(sprof.get(w, 0)) for w in words])
    target = [frac(profile.get(w, 0)) for w in words]
    mat = Matrix(columns).transpose()
    sol = mat.solve(target)
    if sol is None:
        raise ValueError("layer profile is not a combination of the given simples")
    out = {}
    for (name, _), c in zip(simples, sol):
        if c:
            if c.denominator != 1 or c < 0:
                raise ValueError("non-integral multiplicity in layer decomposition")
            out[name] = int(c)
    return out


def socle_of_rep(rep: MatrixRep):
    """Subspace killed by the radical of the closure algebra, with profile."""
    closure = algebra_closure(rep)
    radical = closure_radical(closure)
    if not radical:
        base = [row for row in Matrix.identity(rep.dim).rows]
        return base, _word_profile(rep, base)
    stacked = Matrix([row for j in radical for row in j.rows])
    basis = stacked.nullspace()
    return basis, _word_profile(rep, basis)


def dual_rep(rep: MatrixRep) -> MatrixRep:
    """Dual module for the anti-involution fixing the generators: transpose."""
    return MatrixRep(
        rep.pres,
        rep.dim,
        {w: e.transpose() for w, e in rep.idempotents.items()},
        [m.transpose() for m in rep.x],
        [m.transpose() for m in rep.psi],
        list(rep.basis_names),
    )


def intertwiner_space(rep_a: MatrixRep, rep_b: MatrixRep) -> list[Matrix]:
    """Basis of {f : f . a = b . f for every generator pair}."""
    if (rep_a.pres.ell, rep_a.pres.n, rep_a.pres.lam) != (rep_b.pres.ell, rep_b.pres.n, rep_b.pres.lam):
        raise ShapeMismatchError("representations live over different presentations")
    da, db = rep_a.dim, rep_b.dim
    if da == 0 or db == 0:
        return []
    words = sorted(set(rep_a.words()) | set(rep_b.words()))
    pairs = [(rep_a.idempotent(w), rep_b.idempotent(w)) for w in words]
    pairs += list(zip(rep_a.x, rep_b.x))
    pairs += list(zip(rep_a.psi, rep_b.psi))
    rows = []
    for ga, gb in pairs:
        # f ga - gb f = 0, row per matrix entry of the (db x da) unknown f
        for r in range(db):
            for c in range(da):
                row = [Fraction(0)] * (da * db)
                for k in range(da):
                    row[r * da + k] += ga[k, c]
                for k in range(db):
                    row[k * da + c] -= gb[r, k]
                rows.append(row)
    sols = Matrix(rows).nullspace() if rows else []
    return [Matrix.from_flat(s, db, da) for s in sols]


def find_invertible(space: list[Matrix], grid_limit: int = 2_000_000):
    """An invertible element of a matrix space, or None (complete search).

    The determinant of a generic combination is a polynomial of degree at
    most d in each coordinate, so scanning a (d+1)-point grid per coordinate
    decides vanishing exactly.
    """
    if not space:
        return None
    d = space[0].m
    if space[0].m != space[0].n:
        return None
    for b in space:
        if b.det() != 0:
            return b
    r = len(space)
    points = d + 1
    total = points**r
    if total > grid_limit:
        raise RuntimeError(f"invertibility grid of size {total} exceeds the search limit")
    counters = [0] * r
    while True:
        acc = Matrix.zeros(d, d)
        for t, b in zip(counters, space):
            if t:
                acc = acc + b.scale(t)
        if acc.det() != 0:
            return acc
        pos = 0
        while pos < r:
            counters[pos] += 1
            if counters[pos] < points:
                break
            counters[pos] = 0
            pos += 1
        if pos == r:
            return None


def modules_isomorphic(rep_a: MatrixRep, rep_b: MatrixRep):
    """An invertible intertwiner between the representations, or None."""
    if rep_a.dim != rep_b.dim:
        return None
    if rep_a.dim == 0:
        return Matrix.zeros(0, 0)
    for w in set(rep_a.words()) | set(rep_b.words()):
        if rep_a.idempotent(w).trace() != rep_b.idempotent(w).trace():
            return None
    space = intertwiner_space(rep_a, rep_b)
    if not space:
        return None
    return find_invertible(space)
