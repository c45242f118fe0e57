"""Finite-dimensional quotient algebras and their structural analysis.

FDAlgebra wraps the completed rewrite system: a basis of normal-form paths
graded by (source, target), structure constants, and the usual invariants
(radical, center, socles, Cartan matrix).  On top of that sit trace forms,
the special/stably biserial tests, quiver extraction with the wild-quiver
witness, and primitive idempotent lifting for basic-algebra extraction.
"""

from __future__ import annotations

from fractions import Fraction

from ..linalg import Matrix, Subspace, frac, vec_is_zero
from .presentations import Arrow, Presentation, Quiver
from .rewrite import RewriteSystem, _mono_key

Vec = list[Fraction]


class FDAlgebra:
    """Quotient of a path algebra with a finite normal-form basis."""

    def __init__(self, pres: Presentation, system: RewriteSystem, basis):
        self.pres = pres
        self.system = system
        self.basis = list(basis)
        self.dim = len(self.basis)
        self.index = {m: i for i, m in enumerate(self.basis)}
        self.src = [system.vertices[m[0]] for m in self.basis]
        self.tgt = [system.vertices[system.mono_tgt(m)] for m in self.basis]
        self.vertices = [
            v for i, v in enumerate(system.vertices) if i not in system.dead
        ]
        self.arrows = [
            a
            for a in pres.quiver.arrows
            if a.src in self.vertices and a.tgt in self.vertices
            and not vec_is_zero(self.path_vec((a.name,)))
        ]
        self._mult_cache: dict[tuple[int, int], tuple] = {}
        self._left_mats: list[Matrix] | None = None
        self._radical: Subspace | None = None
        self._op: FDAlgebra | None = None

    # -- elements -----------------------------------------------------------

    def zero(self) -> Vec:
        return [Fraction(0)] * self.dim

    def poly_to_vec(self, poly) -> Vec:
        out = self.zero()
        for mono, c in poly.items():
            out[self.index[mono]] += c
        return out

    def path_vec(self, path) -> Vec:
        """Normal form of a path (tuple of arrow names, or ("e", vertex))."""
        mono = self.system.path_to_mono(tuple(path))
        return self.poly_to_vec(self.system.normal_form_mono(mono))

    def vertex_idempotent(self, v: str) -> Vec:
        return self.path_vec(("e", v))

    def unit(self) -> Vec:
        out = self.zero()
        for v in self.vertices:
            out[self.index[(self.system.vindex[v], ())]] = Fraction(1)
        return out

    def _mult_basis(self, i: int, j: int):
        key = (i, j)
        if key not in self._mult_cache:
            a, b = self.basis[i], self.basis[j]
            prod = self.system.concat(a, b)
            if prod is None:
                self._mult_cache[key] = ()
            else:
                nf = self.system.normal_form_mono(prod)
                self._mult_cache[key] = tuple(
                    (self.index[m], c) for m, c in sorted(nf.items(), key=lambda t: _mono_key(t[0]))
                )
        return self._mult_cache[key]

    def mult(self, u: Vec, v: Vec) -> Vec:
        out = self.zero()
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                for k, c in self._mult_basis(i, j):
                    out[k] += a * b * c
        return out

    def left_mult_matrix(self, u: Vec) -> Matrix:
        cols = []
        for j in range(self.dim):
            ej = self.zero()
            ej[j] = Fraction(1)
            cols.append(self.mult(u, ej))
        return Matrix(cols).transpose()

    def right_mult_matrix(self, u: Vec) -> Matrix:
        cols = []
        for j in range(self.dim):
            ej = self.zero()
            ej[j] = Fraction(1)
            cols.append(self.mult(ej, u))
        return Matrix(cols).transpose()

    def _basis_left_mats(self) -> list[Matrix]:
        if self._left_mats is None:
            mats = []
            for i in range(self.dim):
                ei = self.zero()
                ei[i] = Fraction(1)
                mats.append(self.left_mult_matrix(ei))
            self._left_mats = mats
        return self._left_mats

    def basis_word(self, i: int) -> list[str]:
        """Arrow names of the i-th basis monomial, in this algebra's product order."""
        _, word = self.basis[i]
        return [self.system.arrow_names[a] for a in word]

    def describe_vec(self, u: Vec) -> str:
        parts = []
        for i, c in enumerate(u):
            if c:
                path = self.system.mono_to_path(self.basis[i])
                name = ".".join(path) if path[0] != "e" else f"e_{path[1]}"
                parts.append(name if c == 1 else f"({c})*{name}")
        return " + ".join(parts) if parts else "0"

    # -- gradings -----------------------------------------------------------

    def graded_dims(self) -> dict[tuple[str, str], int]:
        out: dict[tuple[str, str], int] = {}
        for i in range(self.dim):
            key = (self.src[i], self.tgt[i])
            out[key] = out.get(key, 0) + 1
        return out

    def block_indices(self, src: str | None = None, tgt: str | None = None):
        return [
            i
            for i in range(self.dim)
            if (src is None or self.src[i] == src) and (tgt is None or self.tgt[i] == tgt)
        ]

    # -- structure ----------------------------------------------------------

    def radical(self) -> Subspace:
        """Jacobson radical via the regular trace form, nilpotency asserted."""
        if self._radical is None:
            mats = self._basis_left_mats()
            gram = Matrix(
                [[(mats[i] * mats[j]).trace() for j in range(self.dim)] for i in range(self.dim)]
            )
            rad = Subspace(self.dim)
            for v in gram.nullspace():
                rad.add(v)
            self._assert_nilpotent(rad.basis())
            self._radical = rad
        return self._radical

    def _assert_nilpotent(self, gens: list[Vec]) -> None:
        power = list(gens)
        steps = 0
        while power:
            steps += 1
            if steps > self.dim + 1:
                raise AssertionError("trace-form radical is not nilpotent")
            span = Subspace(self.dim)
            for u in power:
                for g in gens:
                    span.add(self.mult(u, g))
            power = span.basis()

    def radical_powers(self) -> list[Subspace]:
        """J, J^2, ... down to zero."""
        out = []
        current = self.radical()
        while current.dim:
            out.append(current)
            gens = self.radical().basis()
            span = Subspace(self.dim)
            for u in current.basis():
                for g in gens:
                    span.add(self.mult(u, g))
            current = span
        return out

    def center_basis(self) -> list[Vec]:
        gens = [self.vertex_idempotent(v) for v in self.vertices]
        gens += [self.path_vec((a.name,)) for a in self.arrows]
        rows = []
        for g in gens:
            diff = self.left_mult_matrix(g) - self.right_mult_matrix(g)
            rows.extend(diff.rows)
        return Matrix(rows).nullspace() if rows else []

    def socle_left(self) -> Subspace:
        """{x : J x = 0}."""
        return self._annihilator(left=True)

    def socle_right(self) -> Subspace:
        return self._annihilator(left=False)

    def socle(self) -> Subspace:
        """Two-sided annihilator of the radical."""
        rows = []
        for g in self.radical().basis():
            rows.extend(self.left_mult_matrix(g).rows)
            rows.extend(self.right_mult_matrix(g).rows)
        return self._nullspace_subspace(rows)

    def _annihilator(self, left: bool) -> Subspace:
        rows = []
        for g in self.radical().basis():
            mat = self.left_mult_matrix(g) if left else self.right_mult_matrix(g)
            rows.extend(mat.rows)
        return self._nullspace_subspace(rows)

    def _nullspace_subspace(self, rows) -> Subspace:
        out = Subspace(self.dim)
        if not rows:
            for i in range(self.dim):
                e = self.zero()
                e[i] = Fraction(1)
                out.add(e)
            return out
        for v in Matrix(rows).nullspace():
            out.add(v)
        return out

    def cartan_matrix_of(self) -> dict[tuple[str, str], int]:
        return self.graded_dims()

    def is_basic(self) -> bool:
        return self.dim - self.radical().dim == len(self.vertices)

    def is_self_injective(self) -> bool:
        """Socle criterion for basic algebras: simple socles, distinct tops."""
        if not self.is_basic():
            raise ValueError("self-injectivity test implemented for basic algebras")
        from .modules import projective_module, socle_vertices

        seen = []
        for v in self.vertices:
            soc = socle_vertices(projective_module(self, v))
            if len(soc) != 1:
                return False
            seen.append(soc[0])
        return sorted(seen) == sorted(self.vertices)

    # -- opposite算 algebra --------------------------------------------------

    def op(self) -> "FDAlgebra":
        if self._op is None:
            self._op = _OppositeAlgebra(self)
            self._op._op = self
        return self._op


class _OppositeAlgebra(FDAlgebra):
    """Opposite algebra view: same basis indices, reversed products."""

    def __init__(self, base: FDAlgebra):
        self.pres = base.pres
        self.system = base.system
        self.base = base
        self.basis = base.basis
        self.dim = base.dim
        self.index = base.index
        self.src = list(base.tgt)
        self.tgt = list(base.src)
        self.vertices = list(base.vertices)
        self.arrows = [Arrow(a.name, a.tgt, a.src) for a in base.arrows]
        self._left_mats = None
        self._radical = None
        self._op = None

    def path_vec(self, path) -> Vec:
        if path and path[0] == "e":
            return self.base.path_vec(path)
        return self.base.path_vec(tuple(reversed(tuple(path))))

    def vertex_idempotent(self, v: str) -> Vec:
        return self.base.vertex_idempotent(v)

    def unit(self) -> Vec:
        return self.base.unit()

    def mult(self, u: Vec, v: Vec) -> Vec:
        return self.base.mult(v, u)

    def _mult_basis(self, i: int, j: int):
        return self.base._mult_basis(j, i)

    def basis_word(self, i: int) -> list[str]:
        return list(reversed(self.base.basis_word(i)))


def normalize(pres: Presentation) -> FDAlgebra:
    """Complete the rewriting system and return the quotient algebra.

    Raises HorizonExceededError when the quotient cannot be certified
    finite-dimensional within pres.max_len.
    """
    system = RewriteSystem(pres)
    system.complete()
    basis = system.irreducible_monomials()
    return FDAlgebra(pres, system, basis)


# ---------------------------------------------------------------------------
# trace forms and symmetry
# ---------------------------------------------------------------------------


class TraceForm:
    """Linear functional on the algebra, stored by values on the basis."""

    def __init__(self, algebra: FDAlgebra, values: Vec):
        self.algebra = algebra
        self.values = [frac(v) for v in values]

    def of(self, u: Vec) -> Fraction:
        return sum((c * v for c, v in zip(u, self.values) if c), Fraction(0))

    def is_symmetric(self) -> bool:
        A = self.algebra
        for i in range(A.dim):
            ei = A.zero()
            ei[i] = Fraction(1)
            for j in range(i + 1, A.dim):
                ej = A.zero()
                ej[j] = Fraction(1)
                if self.of(A.mult(ei, ej)) != self.of(A.mult(ej, ei)):
                    return False
        return True

    def gram_matrix(self) -> Matrix:
        A = self.algebra
        mats = A._basis_left_mats()
        rows = []
        for i in range(A.dim):
            row = []
            for j in range(A.dim):
                prod = [mats[i][k, j] for k in range(A.dim)]  # e_i * e_j
                row.append(self.of(prod))
            rows.append(row)
        return Matrix(rows)

    def is_nondegenerate(self) -> bool:
        return self.gram_matrix().rank() == self.algebra.dim


def trace_from_spec(algebra: FDAlgebra, spec: dict) -> TraceForm:
    """Trace with the given values on the listed paths, zero elsewhere.

    Each listed path must normalize to a single basis monomial (possibly
    scaled); the value is attached to that monomial.
    """
    values = algebra.zero()
    for path, value in spec.items():
        vec = algebra.path_vec(path)
        support = [i for i, c in enumerate(vec) if c]
        if len(support) != 1:
            raise ValueError(f"trace path {path} does not normalize to one basis element")
        i = support[0]
        values[i] += frac(value) / vec[i]
    return TraceForm(algebra, values)


def trace_space(algebra: FDAlgebra) -> list[Vec]:
    """All functionals with f(xy) = f(yx): the dual of A/[A,A]."""
    rows = []
    for i in range(algebra.dim):
        ei = algebra.zero()
        ei[i] = Fraction(1)
        for j in range(algebra.dim):
            ej = algebra.zero()
            ej[j] = Fraction(1)
            comm = [a - b for a, b in zip(algebra.mult(ei, ej), algebra.mult(ej, ei))]
            if not vec_is_zero(comm):
                rows.append(comm)
    return Matrix(rows).nullspace() if rows else [r for r in Matrix.identity(algebra.dim).rows]


def is_symmetric(algebra: FDAlgebra, trace: TraceForm | None = None, search_points: int = 200):
    """Verify or find a nondegenerate symmetric trace form.

    With a supplied form, symmetry and nondegeneracy are checked exactly.
    Without one, the space of trace functionals is searched on a
    deterministic sequence of integer points; the degenerate locus is a
    proper closed subvariety, so a symmetric algebra is found quickly, while
    obvious obstructions (non-basic quotients aside, a failing socle
    criterion) certify None.
    """
    if trace is not None:
        if trace.is_symmetric() and trace.is_nondegenerate():
            return trace
        return None
    space = trace_space(algebra)
    if not space:
        return None
    if algebra.is_basic() and not algebra.is_self_injective():
        return None
    seed = 9973
    for step in range(search_points):
        coeffs = []
        for _ in range(len(space)):
            seed = (seed * 1103515245 + 12345) % (2**31)
            coeffs.append(Fraction(seed % (7 + step) - (3 + step // 2)))
        vec = [Fraction(0)] * algebra.dim
        for c, row in zip(coeffs, space):
            if c:
                vec = [a + c * b for a, b in zip(vec, row)]
        candidate = TraceForm(algebra, vec)
        if candidate.is_symmetric() and candidate.is_nondegenerate():
            return candidate
    return None


# ---------------------------------------------------------------------------
# biseriality
# ---------------------------------------------------------------------------


def is_special_biserial(algebra: FDAlgebra):
    """Special biserial test with witnesses.

    Conditions: at most two arrows in and out of each vertex; for each arrow
    a at most one arrow b with ab nonzero and at most one c with ca nonzero.
    """
    witnesses = []
    for v in algebra.vertices:
        outs = [a for a in algebra.arrows if a.src == v]
        ins = [a for a in algebra.arrows if a.tgt == v]
        if len(outs) > 2:
            witnesses.append(("too_many_outgoing", v, tuple(a.name for a in outs)))
        if len(ins) > 2:
            witnesses.append(("too_many_incoming", v, tuple(a.name for a in ins)))
    for a in algebra.arrows:
        succ = [
            b.name
            for b in algebra.arrows
            if b.src == a.tgt and not vec_is_zero(algebra.path_vec((a.name, b.name)))
        ]
        if len(succ) > 1:
            witnesses.append(("two_successors", a.name, tuple(succ)))
        pred = [
            b.name
            for b in algebra.arrows
            if b.tgt == a.src and not vec_is_zero(algebra.path_vec((b.name, a.name)))
        ]
        if len(pred) > 1:
            witnesses.append(("two_predecessors", a.name, tuple(pred)))
    return (not witnesses), witnesses


def is_stably_biserial(algebra: FDAlgebra):
    """Stably biserial test: the successor conditions only hold modulo
    a*Rad(A)*b + Soc(A), and the algebra must be self-injective."""
    witnesses = []
    if algebra.is_basic() and not algebra.is_self_injective():
        witnesses.append(("not_self_injective",))
    soc = algebra.socle()
    if algebra.socle_left().basis() != algebra.socle_right().basis():
        witnesses.append(("one_sided_socles_differ",))
    for v in algebra.vertices:
        outs = [a for a in algebra.arrows if a.src == v]
        ins = [a for a in algebra.arrows if a.tgt == v]
        if len(outs) > 2:
            witnesses.append(("too_many_outgoing", v, tuple(a.name for a in outs)))
        if len(ins) > 2:
            witnesses.append(("too_many_incoming", v, tuple(a.name for a in ins)))
    rad_basis = algebra.radical().basis()
    for a in algebra.arrows:
        avec = algebra.path_vec((a.name,))
        succ = []
        for b in algebra.arrows:
            if b.src != a.tgt:
                continue
            bvec = algebra.path_vec((b.name,))
            ab = algebra.mult(avec, bvec)
            sub = Subspace(algebra.dim)
            for row in soc.basis():
                sub.add(row)
            for r in rad_basis:
                sub.add(algebra.mult(avec, algebra.mult(r, bvec)))
            if not sub.contains(ab):
                succ.append(b.name)
        if len(succ) > 1:
            witnesses.append(("two_stable_successors", a.name, tuple(succ)))
        pred = []
        for b in algebra.arrows:
            if b.tgt != a.src:
                continue
            bvec = algebra.path_vec((b.name,))
            ba = algebra.mult(bvec, avec)
            sub = Subspace(algebra.dim)
            for row in soc.basis():
                sub.add(row)
            for r in rad_basis:
                sub.add(algebra.mult(bvec, algebra.mult(r, avec)))
            if not sub.contains(ba):
                pred.append(b.name)
        if len(pred) > 1:
            witnesses.append(("two_stable_predecessors", a.name, tuple(pred)))
    return (not witnesses), witnesses


# ---------------------------------------------------------------------------
# quiver extraction and the wild-quiver witness
# ---------------------------------------------------------------------------


def quiver_of_algebra(algebra: FDAlgebra) -> Quiver:
    """Ext-quiver via dim e_i (J/J^2) e_j for a basic algebra."""
    if not algebra.is_basic():
        raise ValueError("quiver extraction requires a basic algebra")
    rad = algebra.radical()
    rad2 = Subspace(algebra.dim)
    gens = rad.basis()
    for u in gens:
        for g in gens:
            rad2.add(algebra.mult(u, g))
    arrows = []
    for i_v in algebra.vertices:
        for j_v in algebra.vertices:
            ei = algebra.vertex_idempotent(i_v)
            ej = algebra.vertex_idempotent(j_v)
            span = Subspace(algebra.dim)
            for row in rad2.basis():
                span.add(row)
            base = span.dim
            for u in gens:
                span.add(algebra.mult(ei, algebra.mult(u, ej)))
            count = span.dim - base
            for k in range(count):
                arrows.append((f"q_{i_v}_{j_v}_{k}", i_v, j_v))
    return Quiver(list(algebra.vertices), arrows)


def wild_configuration_witness(quiver: Quiver):
    """A vertex carrying at least two loops plus one further incident arrow."""
    for v in quiver.vertices:
        loops = quiver.loops_at(v)
        others = [
            a
            for a in quiver.arrows
            if (a.src == v or a.tgt == v) and not (a.src == v and a.tgt == v)
        ]
        if len(loops) >= 2 and (others or len(loops) >= 3):
            return {
                "vertex": v,
                "loops": tuple(a.name for a in loops),
                "extra": tuple(a.name for a in others) or tuple(a.name for a in loops[2:]),
            }
    return None


# ---------------------------------------------------------------------------
# idempotent truncation and basic algebras
# ---------------------------------------------------------------------------


class TruncatedAlgebra:
    """e A e for an idempotent e, with its own echelon basis."""

    def __init__(self, parent: FDAlgebra, idem: Vec, label: str = ""):
        self.parent = parent
        self.idem = idem
        self.label = label
        span = Subspace(parent.dim)
        for j in range(parent.dim):
            ej = parent.zero()
            ej[j] = Fraction(1)
            span.add(parent.mult(idem, parent.mult(ej, idem)))
        self.space = span
        self.dim = span.dim

    def coords(self, u: Vec) -> Vec:
        c = self.space.coords(u)
        if c is None:
            raise ValueError("element outside the truncation")
        return c

    def element(self, coords: Vec) -> Vec:
        out = self.parent.zero()
        for c, row in zip(coords, self.space.basis()):
            if c:
                out = [a + c * b for a, b in zip(out, row)]
        return out

    def mult(self, u: Vec, v: Vec) -> Vec:
        return self.coords(self.parent.mult(self.element(u), self.element(v)))

    def unit(self) -> Vec:
        return self.coords(self.idem)

    def left_mult_matrix(self, u: Vec) -> Matrix:
        cols = []
        for j in range(self.dim):
            ej = [Fraction(0)] * self.dim
            ej[j] = Fraction(1)
            cols.append(self.mult(u, ej))
        return Matrix(cols).transpose()


def algebra_radical_generic(dim: int, mult, unit: Vec) -> list[Vec]:
    """Radical of an abstract algebra by the regular trace form."""
    mats = []
    for i in range(dim):
        ei = [Fraction(0)] * dim
        ei[i] = Fraction(1)
        cols = []
        for j in range(dim):
            ej = [Fraction(0)] * dim
            ej[j] = Fraction(1)
            cols.append(mult(ei, ej))
        mats.append(Matrix(cols).transpose())
    gram = Matrix([[(mats[i] * mats[j]).trace() for j in range(dim)] for i in range(dim)])
    return gram.nullspace()


def lift_idempotent(algebra: FDAlgebra, candidate: Vec) -> Vec:
    """Newton iteration e -> 3e^2 - 2e^3 until exactly idempotent."""
    e = list(candidate)
    for _ in range(algebra.dim + 2):
        e2 = algebra.mult(e, e)
        if e2 == e:
            return e
        e3 = algebra.mult(e2, e)
        e = [3 * a - 2 * b for a, b in zip(e2, e3)]
    raise AssertionError("idempotent lifting did not converge")


def _rational_eigen_split(dim: int, mat: Matrix, spaces: list[list[Vec]]) -> list[list[Vec]]:
    """Refine a list of invariant subspaces into eigenspaces of mat."""
    out = []
    for vectors in spaces:
        if len(vectors) == 1:
            out.append(vectors)
            continue
        sub = Subspace(dim)
        for v in vectors:
            sub.add(v)
        basis = sub.basis()
        coord_cols = []
        for row in basis:
            c = sub.coords(mat.apply(row))
            if c is None:
                raise ValueError("subspace is not invariant under the central action")
            coord_cols.append(c)
        action = Matrix(coord_cols).transpose()
        eigvals = _rational_eigenvalues(action)
        if eigvals is None:
            raise ValueError("semisimple quotient is not split over Q")
        pieces = []
        for lam in eigvals:
            shifted = action - Matrix.identity(len(basis)).scale(lam)
            vecs = []
            for k in shifted.nullspace():
                vec = [Fraction(0)] * dim
                for c, row in zip(k, basis):
                    if c:
                        vec = [a + c * r for a, r in zip(vec, row)]
                vecs.append(vec)
            if vecs:
                pieces.append(vecs)
        if sum(len(p) for p in pieces) != len(basis):
            raise ValueError("semisimple quotient is not split over Q")
        out.extend(pieces)
    return out


def _rational_eigenvalues(mat: Matrix):
    """All eigenvalues, provided every one is rational (else None)."""
    n = mat.m
    # minimal polynomial by Krylov on the full space
    span = Subspace(n * n)
    powers = [Matrix.identity(n)]
    span.add(powers[0].flatten())
    while True:
        nxt = powers[-1] * mat
        if not span.add(nxt.flatten()):
            break
        powers.append(nxt)
    # solve sum c_k mat^k + mat^d = 0
    d = len(powers)
    rows = []
    for pos in range(n * n):
        rows.append([p.flatten()[pos] for p in powers] + [ (powers[-1] * mat).flatten()[pos] ])
    sol = Matrix([r[:-1] for r in rows]).solve([-r[-1] for r in rows])
    if sol is None:
        return None
    coeffs = [*sol, Fraction(1)]  # monic minimal polynomial
    roots = []
    poly = coeffs
    while len(poly) > 1:
        root = _rational_root(poly)
        if root is None:
            return None
        roots.append(root)
        poly = _deflate(poly, root)
    return sorted(set(roots))


def _rational_root(coeffs: list[Fraction]):
    """A rational root of the polynomial sum c_k t^k, or None."""
    from math import gcd

    scale = 1
    for c in coeffs:
        scale = scale * c.denominator // gcd(scale, c.denominator)
    ints = [int(c * scale) for c in coeffs]
    while ints and ints[-1] == 0:
        ints.pop()
    if not ints:
        return Fraction(0)
    if ints[0] == 0:
        return Fraction(0)
    lead, const = abs(ints[-1]), abs(ints[0])

    def divisors(n):
        out = []
        d = 1
        while d * d <= n:
            if n % d == 0:
                out += [d, n // d]
            d += 1
        return sorted(set(out))

    for p in divisors(const):
        for q in divisors(lead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if sum(c * cand**k for k, c in enumerate(coeffs)) == 0:
                    return cand
    return None


def _deflate(coeffs: list[Fraction], root: Fraction) -> list[Fraction]:
    """Synthetic division by (t - root); the root must be exact."""
    quotient = [Fraction(0)] * (len(coeffs) - 1)
    acc = coeffs[-1]
    for k in range(len(coeffs) - 2, -1, -1):
        quotient[k] = acc
        acc = coeffs[k] + acc * root
    if acc != 0:
        raise AssertionError("deflation by a non-root")
    return quotient


def primitive_idempotents(algebra: FDAlgebra) -> list[Vec]:
    """One lifted primitive idempotent per isomorphism class of simples.

    Works for algebras whose semisimple quotient is split over Q: the center
    of A/J is decomposed by rational eigenvalues, a rank-one idempotent is
    found in each matrix block, and everything is lifted orthogonally.
    """
    rad = algebra.radical()
    quot_cols = rad.nonpivot_columns()
    qdim = len(quot_cols)

    def to_quot(u: Vec) -> Vec:
        return rad.quotient_coords(u)

    lifts = []
    for j in quot_cols:
        e = algebra.zero()
        e[j] = Fraction(1)
        lifts.append(e)

    def from_quot(u: Vec) -> Vec:
        out = algebra.zero()
        for c, lift in zip(u, lifts):
            if c:
                out = [a + c * b for a, b in zip(out, lift)]
        return out

    def qmult(u: Vec, v: Vec) -> Vec:
        return to_quot(algebra.mult(from_quot(u), from_quot(v)))

    # center of the quotient: x with x * e_j = e_j * x for all j
    sys_rows = []
    for i in range(qdim):
        ei = [Fraction(0)] * qdim
        ei[i] = Fraction(1)
        left = Matrix([qmult(_unit_vec(qdim, j), ei) for j in range(qdim)]).transpose()
        right = Matrix([qmult(ei, _unit_vec(qdim, j)) for j in range(qdim)]).transpose()
        sys_rows.extend((left - right).rows)
    center = Matrix(sys_rows).nullspace()

    # split the quotient center into one-dimensional eigenpieces
    spaces = [center]
    for z in center:
        zmat = Matrix([qmult(z, _unit_vec(qdim, j)) for j in range(qdim)]).transpose()
        # restrict z's action to the center: works since center is closed
        spaces = _rational_eigen_split(qdim, zmat, spaces)
        if all(len(s) == 1 for s in spaces):
            break
    central_idems = []
    unit_q = to_quot(algebra.unit())
    for piece in spaces:
        # the piece is spanned by a scalar multiple of a central idempotent
        z = piece[0]
        zz = qmult(z, z)
        # solve zz = c z
        scale = None
        for a, b in zip(zz, z):
            if b:
                scale = a / b
                break
        if scale is None or scale == 0:
            raise ValueError("central element is nilpotent; quotient not split")
        central_idems.append([a / scale for a in z])
    # confirm the partition of unity
    total = [Fraction(0)] * qdim
    for c in central_idems:
        total = [a + b for a, b in zip(total, c)]
    if total != unit_q:
        raise ValueError("central idempotents do not sum to one")

    # rank-one idempotent inside each block
    block_idems = []
    for c in central_idems:
        block = Subspace(qdim)
        for j in range(qdim):
            block.add(qmult(c, qmult(_unit_vec(qdim, j), c)))
        bdim = block.dim
        n2 = _integer_sqrt(bdim)
        if n2 * n2 != bdim:
            raise ValueError("block dimension is not a square; not split")
        if n2 == 1:
            block_idems.append(c)
            continue
        # minimal left ideal: pick a generator with smallest block * w
        best = None
        for j in range(bdim):
            w = block.basis()[j]
            ideal = Subspace(qdim)
            for k in range(bdim):
                ideal.add(qmult(block.basis()[k], w))
            if ideal.dim and (best is None or ideal.dim < best[0]):
                best = (ideal.dim, ideal)
                if ideal.dim == n2:
                    break
        ideal = best[1]
        if ideal.dim != n2:
            raise ValueError("could not locate a minimal left ideal")
        # represent the block on the ideal and pull back a rank-one projector
        cols = ideal.basis()
        rep_rows = []
        for k in range(bdim):
            bk = block.basis()[k]
            mat = Matrix([ideal.coords(qmult(bk, col)) for col in cols]).transpose()
            rep_rows.append(mat.flatten())
        target = Matrix.zeros(n2, n2)
        target[0, 0] = Fraction(1)
        sol = Matrix(rep_rows).transpose().solve(target.flatten())
        if sol is None:
            raise ValueError("block does not act as a full matrix algebra")
        e = [Fraction(0)] * qdim
        for coeff, bk in zip(sol, [block.basis()[k] for k in range(bdim)]):
            if coeff:
                e = [a + coeff * b for a, b in zip(e, bk)]
        block_idems.append(e)

    # orthogonal lifting
    lifted: list[Vec] = []
    for ebar in block_idems:
        cand = from_quot(ebar)
        if lifted:
            f = algebra.unit()
            for e in lifted:
                f = [a - b for a, b in zip(f, e)]
            cand = algebra.mult(f, algebra.mult(cand, f))
        e = lift_idempotent(algebra, cand)
        lifted.append(e)
    return lifted


def _unit_vec(n: int, j: int) -> Vec:
    v = [Fraction(0)] * n
    v[j] = Fraction(1)
    return v


def _integer_sqrt(n: int) -> int:
    r = int(n**0.5)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


def basic_algebra_data(algebra: FDAlgebra) -> dict:
    """Structural invariants of the basic algebra f A f.

    Returns dimension, Cartan matrix (graded by the chosen primitive
    idempotents), center dimension, and the radical layer profiles of the
    projectives f A e_i.
    """
    idems = primitive_idempotents(algebra)
    f = algebra.zero()
    for e in idems:
        f = [a + b for a, b in zip(f, e)]
    trunc = TruncatedAlgebra(algebra, f)
    cartan = {}
    for i, ei in enumerate(idems):
        for j, ej in enumerate(idems):
            span = Subspace(algebra.dim)
            for k in range(algebra.dim):
                ek = algebra.zero()
                ek[k] = Fraction(1)
                span.add(algebra.mult(ei, algebra.mult(ek, ej)))
            cartan[(i, j)] = span.dim
    # center of the truncation
    rows = []
    for j in range(trunc.dim):
        ej = _unit_vec(trunc.dim, j)
        left = Matrix([trunc.mult(_unit_vec(trunc.dim, k), ej) for k in range(trunc.dim)]).transpose()
        right = Matrix([trunc.mult(ej, _unit_vec(trunc.dim, k)) for k in range(trunc.dim)]).transpose()
        rows.extend((left - right).rows)
    center_dim = len(Matrix(rows).nullspace()) if rows else trunc.dim

    rad_vecs = algebra_radical_generic(trunc.dim, trunc.mult, trunc.unit())
    layer_profiles = []
    for i, ei in enumerate(idems):
        # projective (fAf) e_i inside the truncation
        proj = Subspace(trunc.dim)
        ei_t = trunc.coords(ei)
        for k in range(trunc.dim):
            proj.add(trunc.mult(_unit_vec(trunc.dim, k), ei_t))
        chain = [proj]
        while chain[-1].dim:
            nxt = Subspace(trunc.dim)
            for r in rad_vecs:
                for u in chain[-1].basis():
                    nxt.add(trunc.mult(r, u))
            chain.append(nxt)
        profile = []
        for a, b in zip(chain, chain[1:]):
            layer = {}
            for j, ej in enumerate(idems):
                ej_t = trunc.coords(ej)
                upper = Subspace(trunc.dim)
                for u in b.basis():
                    upper.add(u)
                base = upper.dim
                for u in a.basis():
                    upper.add(trunc.mult(ej_t, u))
                if upper.dim - base:
                    layer[j] = upper.dim - base
            profile.append(layer)
        layer_profiles.append(profile)
    return {
        "dim": trunc.dim,
        "n_simples": len(idems),
        "cartan": cartan,
        "center_dim": center_dim,
        "projective_layers": layer_profiles,
    }
