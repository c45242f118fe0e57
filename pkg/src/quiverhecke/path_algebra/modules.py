"""Finite-dimensional left modules over a quotient path algebra.

A module stores one rational matrix per arrow.  With the left-to-right
composition convention the arrow a: i -> j acts from the j-component to the
i-component, so e_i M is the set of elements supported at source vertex i.

The homological toolkit (projective covers, syzygies, transpose, the
Auslander-Reiten translate and its inverse, Ext^1, stable Hom, induction)
lives here; covers and everything downstream of them require the algebra to
be basic, which every catalog algebra is.
"""

from __future__ import annotations

from fractions import Fraction

from ..linalg import Matrix, Subspace, vec_is_zero
from .algebra import FDAlgebra

Vec = list[Fraction]


class AModule:
    def __init__(self, algebra: FDAlgebra, vdims: dict[str, int], arrow_mats: dict[str, Matrix]):
        self.algebra = algebra
        self.vdims = {v: int(vdims.get(v, 0)) for v in algebra.vertices}
        self.offsets = {}
        pos = 0
        for v in algebra.vertices:
            self.offsets[v] = pos
            pos += self.vdims[v]
        self.dim = pos
        self.mats: dict[str, Matrix] = {}
        for a in algebra.arrows:
            mat = arrow_mats.get(a.name)
            if mat is None:
                mat = Matrix.zeros(self.dim, self.dim)
            if (mat.m, mat.n) != (self.dim, self.dim):
                raise ValueError(f"arrow matrix for {a.name} has wrong shape")
            self._check_block(a, mat)
            self.mats[a.name] = mat
        self._act_cache: dict[int, Matrix] = {}

    def _check_block(self, arrow, mat: Matrix) -> None:
        # arrow i -> j may only map the j-component into the i-component
        rs, cs = self.offsets[arrow.src], self.offsets[arrow.tgt]
        rn, cn = self.vdims[arrow.src], self.vdims[arrow.tgt]
        for r in range(self.dim):
            for c in range(self.dim):
                if mat[r, c] and not (rs <= r < rs + rn and cs <= c < cs + cn):
                    raise ValueError(f"arrow {arrow.name} acts outside its block")

    def vertex_projector(self, v: str) -> Matrix:
        out = Matrix.zeros(self.dim, self.dim)
        for k in range(self.offsets[v], self.offsets[v] + self.vdims[v]):
            out[k, k] = 1
        return out

    def act_basis(self, i: int) -> Matrix:
        """Action of the i-th algebra basis monomial."""
        if i not in self._act_cache:
            names = self.algebra.basis_word(i)
            if not names:
                mat = self.vertex_projector(self.algebra.src[i])
            else:
                mat = self.mats[names[0]]
                for name in names[1:]:
                    mat = mat * self.mats[name]
            self._act_cache[i] = mat
        return self._act_cache[i]

    def act(self, u: Vec) -> Matrix:
        out = Matrix.zeros(self.dim, self.dim)
        for i, c in enumerate(u):
            if c:
                out = out + self.act_basis(i).scale(c)
        return out

    def vertex_of_index(self, k: int) -> str:
        for v in self.algebra.vertices:
            if self.offsets[v] <= k < self.offsets[v] + self.vdims[v]:
                return v
        raise IndexError(k)

    def check_relations(self) -> bool:
        """Relations of the presentation annihilate the module."""
        system = self.algebra.system
        for rel in self.algebra.pres.relations:
            acc = Matrix.zeros(self.dim, self.dim)
            for coeff, path in rel:
                if path and path[0] == "e":
                    term = self.vertex_projector(path[1]) if path[1] in self.vdims else Matrix.zeros(self.dim, self.dim)
                else:
                    term = None
                    for name in path:
                        if name not in self.mats:
                            term = Matrix.zeros(self.dim, self.dim)
                            break
                        step = self.mats[name]
                        term = step if term is None else term * step
                acc = acc + term.scale(coeff)
            if not acc.is_zero():
                return False
        del system
        return True

    def graded_dims(self) -> dict[str, int]:
        return {v: d for v, d in self.vdims.items() if d}

    def __repr__(self):
        return f"AModule(dim={self.dim}, {self.graded_dims()})"


def zero_module(algebra: FDAlgebra) -> AModule:
    return AModule(algebra, {}, {})


def simple_module(algebra: FDAlgebra, v: str) -> AModule:
    if not algebra.is_basic():
        raise ValueError("vertex simples require a basic algebra")
    return AModule(algebra, {v: 1}, {})


def projective_module(algebra: FDAlgebra, v: str) -> AModule:
    """P_v = A e_v with the left multiplication action."""
    ids = algebra.block_indices(tgt=v)
    lookup = {b: k for k, b in enumerate(ids)}
    vdims: dict[str, int] = {}
    order: list[int] = []
    for w in algebra.vertices:
        for b in ids:
            if algebra.src[b] == w:
                vdims[w] = vdims.get(w, 0) + 1
                order.append(b)
    pos = {b: k for k, b in enumerate(order)}
    dim = len(ids)
    mats = {}
    for a in algebra.arrows:
        mat = Matrix.zeros(dim, dim)
        avec = algebra.path_vec((a.name,))
        for b in ids:
            eb = algebra.zero()
            eb[b] = Fraction(1)
            image = algebra.mult(avec, eb)
            for i, c in enumerate(image):
                if c:
                    mat[pos[i], pos[b]] = c
        mats[a.name] = mat
    module = AModule(algebra, vdims, mats)
    module.basis_algebra_indices = order  # which algebra basis element each coordinate is
    del lookup
    return module


def projective_generator_index(module: AModule, v: str) -> int:
    """Coordinate of the generator e_v inside projective_module(A, v)."""
    order = module.basis_algebra_indices
    A = module.algebra
    for k, b in enumerate(order):
        src, word = A.basis[b]
        if not word and A.system.vertices[src] == v:
            return k
    raise ValueError("generator not found")


def submodule(module: AModule, vectors: list[Vec]) -> tuple[AModule, Matrix]:
    """Submodule generated by the vectors; returns (sub, inclusion)."""
    A = module.algebra
    span = Subspace(module.dim)
    frontier = []
    for vec in vectors:
        for v in A.vertices:
            proj = module.vertex_projector(v).apply(vec)
            if span.add(proj):
                frontier.append(proj)
    while frontier:
        nxt = []
        for u in frontier:
            for a in A.arrows:
                image = module.mats[a.name].apply(u)
                if span.add(image):
                    nxt.append(image)
        frontier = nxt
    # graded echelon basis
    per_vertex: dict[str, list[Vec]] = {v: [] for v in A.vertices}
    for row in span.basis():
        for v in A.vertices:
            proj = module.vertex_projector(v).apply(row)
            if not vec_is_zero(proj):
                sub = Subspace(module.dim)
                for existing in per_vertex[v]:
                    sub.add(existing)
                if sub.add(proj):
                    per_vertex[v].append(proj)
    columns: list[Vec] = []
    vdims = {}
    for v in A.vertices:
        vdims[v] = len(per_vertex[v])
        columns.extend(per_vertex[v])
    inclusion = Matrix(columns).transpose() if columns else Matrix.zeros(module.dim, 0)
    inc_space = Subspace(module.dim)
    for c in columns:
        inc_space.add(c)
    mats = {}
    sdim = len(columns)
    for a in A.arrows:
        mat = Matrix.zeros(sdim, sdim)
        for j, col in enumerate(columns):
            image = module.mats[a.name].apply(col)
            coords = _coords_in_columns(columns, image)
            for i, c in enumerate(coords):
                if c:
                    mat[i, j] = c
        mats[a.name] = mat
    sub = AModule(A, vdims, mats)
    return sub, inclusion


def _coords_in_columns(columns: list[Vec], target: Vec) -> Vec:
    if not columns:
        if vec_is_zero(target):
            return []
        raise ValueError("vector outside span")
    sol = Matrix(columns).transpose().solve(target)
    if sol is None:
        raise ValueError("vector outside span")
    return sol


def quotient_module(module: AModule, sub_vectors: list[Vec]) -> tuple[AModule, Matrix]:
    """Quotient by the submodule generated by the vectors; returns (quotient, projection)."""
    A = module.algebra
    sub, inclusion = submodule(module, sub_vectors)
    sub_space = Subspace(module.dim)
    for j in range(inclusion.n):
        sub_space.add(inclusion.col(j))
    # quotient coordinates per vertex block to keep the grading
    reps: list[int] = []
    vdims = {}
    keep = [j for j in sub_space.nonpivot_columns()]
    for v in A.vertices:
        lo, hi = module.offsets[v], module.offsets[v] + module.vdims[v]
        mine = [j for j in keep if lo <= j < hi]
        vdims[v] = len(mine)
        reps.extend(mine)
    qdim = len(reps)
    proj_rows = []
    for k in range(module.dim):
        e = [Fraction(0)] * module.dim
        e[k] = Fraction(1)
        reduced = sub_space.reduce(e)
        proj_rows.append([reduced[j] for j in reps])
    projection = Matrix(proj_rows).transpose()  # qdim x dim
    mats = {}
    for a in A.arrows:
        mat = Matrix.zeros(qdim, qdim)
        for jpos, j in enumerate(reps):
            e = [Fraction(0)] * module.dim
            e[j] = Fraction(1)
            image = projection.apply(module.mats[a.name].apply(e))
            for i, c in enumerate(image):
                if c:
                    mat[i, jpos] = c
        mats[a.name] = mat
    quot = AModule(A, vdims, mats)
    return quot, projection


def element_in_projective(proj: AModule, algebra_vec: Vec) -> Vec:
    """Coordinates of an algebra element inside A e_v (it must lie there)."""
    out = [Fraction(0)] * proj.dim
    pos = {b: k for k, b in enumerate(proj.basis_algebra_indices)}
    for i, c in enumerate(algebra_vec):
        if c:
            if i not in pos:
                raise ValueError("element lies outside the projective")
            out[pos[i]] = c
    return out


def quotient_of_projective(algebra: FDAlgebra, v: str, gen_paths) -> AModule:
    """A e_v modulo the left ideal generated by the given paths."""
    proj = projective_module(algebra, v)
    vecs = [element_in_projective(proj, algebra.path_vec(tuple(p))) for p in gen_paths]
    quot, _ = quotient_module(proj, vecs)
    return quot


def projective_mod_socle(algebra: FDAlgebra, v: str) -> AModule:
    proj = projective_module(algebra, v)
    quot, _ = quotient_module(proj, socle_subspace(proj).basis())
    return quot


def radical_of_projective(algebra: FDAlgebra, v: str) -> AModule:
    proj = projective_module(algebra, v)
    sub, _ = submodule(proj, _radical_subspace(proj).basis())
    return sub


def top_vertices(module: AModule) -> dict[str, int]:
    """Vertex multiplicities of M / rad(A) M."""
    A = module.algebra
    radm = _radical_subspace(module)
    out = {}
    for v in A.vertices:
        span = Subspace(module.dim)
        for row in radm.basis():
            span.add(row)
        base = span.dim
        for k in range(module.offsets[v], module.offsets[v] + module.vdims[v]):
            e = [Fraction(0)] * module.dim
            e[k] = Fraction(1)
            span.add(e)
        if span.dim - base:
            out[v] = span.dim - base
    return out


def _radical_subspace(module: AModule) -> Subspace:
    A = module.algebra
    span = Subspace(module.dim)
    for g in A.radical().basis():
        mat = module.act(g)
        for j in range(module.dim):
            span.add(mat.col(j))
    return span


def radical_series(module: AModule) -> list[dict[str, int]]:
    """Vertex profile of each radical layer rad^k M / rad^{k+1} M."""
    A = module.algebra
    rad_elems = A.radical().basis()
    chain = []
    current = Subspace(module.dim)
    for k in range(module.dim):
        e = [Fraction(0)] * module.dim
        e[k] = Fraction(1)
        current.add(e)
    while current.dim:
        chain.append(current)
        nxt = Subspace(module.dim)
        for g in rad_elems:
            mat = module.act(g)
            for u in current.basis():
                nxt.add(mat.apply(u))
        current = nxt
    chain.append(current)
    layers = []
    for a, b in zip(chain, chain[1:]):
        profile = {}
        for v in module.algebra.vertices:
            span = Subspace(module.dim)
            for row in b.basis():
                span.add(row)
            base = span.dim
            proj = module.vertex_projector(v)
            for u in a.basis():
                span.add(proj.apply(u))
            if span.dim - base:
                profile[v] = span.dim - base
        layers.append(profile)
    return layers


def socle_subspace(module: AModule) -> Subspace:
    A = module.algebra
    rows = []
    for g in A.radical().basis():
        rows.extend(module.act(g).rows)
    out = Subspace(module.dim)
    if not rows:
        for k in range(module.dim):
            e = [Fraction(0)] * module.dim
            e[k] = Fraction(1)
            out.add(e)
        return out
    for v in Matrix(rows).nullspace():
        out.add(v)
    return out


def socle_vertices(module: AModule) -> list[str]:
    soc = socle_subspace(module)
    out = []
    for v in module.algebra.vertices:
        proj = module.vertex_projector(v)
        span = Subspace(module.dim)
        for u in soc.basis():
            span.add(proj.apply(u))
        out.extend([v] * span.dim)
    return out


# ---------------------------------------------------------------------------
# hom spaces
# ---------------------------------------------------------------------------


def hom_space(m: AModule, n: AModule) -> list[Matrix]:
    """Basis of Hom_A(M, N) as graded matrices f with f m(a) = n(a) f."""
    if m.algebra is not n.algebra:
        raise ValueError("modules live over different algebras")
    if m.dim == 0 or n.dim == 0:
        return []
    # unknowns: per-vertex blocks
    slots = []
    for v in m.algebra.vertices:
        for r in range(n.vdims[v]):
            for c in range(m.vdims[v]):
                slots.append((v, n.offsets[v] + r, m.offsets[v] + c))
    where = {(r, c): k for k, (v, r, c) in enumerate(slots)}
    rows = []
    for a in m.algebra.arrows:
        ma, na = m.mats[a.name], n.mats[a.name]
        # f . ma - na . f = 0 on the (src-block rows) x (tgt-block cols)
        for r in range(n.offsets[a.src], n.offsets[a.src] + n.vdims[a.src]):
            for c in range(m.offsets[a.tgt], m.offsets[a.tgt] + m.vdims[a.tgt]):
                row = [Fraction(0)] * len(slots)
                for k in range(m.dim):
                    if ma[k, c] and (r, k) in where:
                        row[where[(r, k)]] += ma[k, c]
                for k in range(n.dim):
                    if na[r, k] and (k, c) in where:
                        row[where[(k, c)]] -= na[r, k]
                if any(row):
                    rows.append(row)
    sols = Matrix(rows).nullspace() if rows else [r for r in Matrix.identity(len(slots)).rows]
    out = []
    for sol in sols:
        f = Matrix.zeros(n.dim, m.dim)
        for k, (v, r, c) in enumerate(slots):
            if sol[k]:
                f[r, c] = sol[k]
        out.append(f)
    return out


def direct_sum(algebra: FDAlgebra, pieces: list[AModule]) -> AModule:
    """Direct sum with vertex-grouped coordinates; embeddings are recorded."""
    if not pieces:
        out = zero_module(algebra)
        out.summand_embeddings = []
        return out
    vdims = {v: sum(p.vdims[v] for p in pieces) for v in algebra.vertices}
    out = AModule(algebra, vdims, {})
    maps = []
    used = {v: 0 for v in algebra.vertices}
    for p in pieces:
        emb = Matrix.zeros(out.dim, p.dim)
        for v in algebra.vertices:
            for k in range(p.vdims[v]):
                emb[out.offsets[v] + used[v] + k, p.offsets[v] + k] = 1
            used[v] += p.vdims[v]
        maps.append(emb)
    mats = {}
    for a in algebra.arrows:
        mat = Matrix.zeros(out.dim, out.dim)
        for p, emb in zip(pieces, maps):
            mat = mat + emb * p.mats[a.name] * emb.transpose()
        mats[a.name] = mat
    result = AModule(algebra, vdims, mats)
    result.summand_embeddings = maps
    return result


class ProjectiveSum:
    """A direct sum of projectives A e_v with coordinate bookkeeping."""

    def __init__(self, algebra: FDAlgebra, verts: list[str]):
        self.algebra = algebra
        self.verts = list(verts)
        self.pieces = [projective_module(algebra, v) for v in self.verts]
        self.module = direct_sum(algebra, self.pieces)
        self.embeddings = self.module.summand_embeddings

    def global_index(self, k: int, local: int) -> int:
        emb = self.embeddings[k]
        return next(i for i in range(emb.m) if emb[i, local])

    def generator_index(self, k: int) -> int:
        return self.global_index(k, projective_generator_index(self.pieces[k], self.verts[k]))

    def component_element(self, k: int, vec: Vec) -> Vec:
        """Piece-k component of a global vector, as an algebra element."""
        piece = self.pieces[k]
        emb = self.embeddings[k]
        elem = self.algebra.zero()
        for local, bidx in enumerate(piece.basis_algebra_indices):
            elem[bidx] = vec[self.global_index(k, local)]
        del emb
        return elem


def projective_cover(module: AModule):
    """Minimal cover P -> M via the top; needs a basic algebra.

    Returns (ProjectiveSum, cover_matrix) where the cover matrix has shape
    dim(M) x dim(P) in the sum's own coordinates.  Cached per module.
    """
    if getattr(module, "_cover_cache", None) is not None:
        return module._cover_cache
    A = module.algebra
    if not A.is_basic():
        raise ValueError("projective covers require a basic algebra")
    radm = _radical_subspace(module)
    summands: list[str] = []
    lifts: list[Vec] = []
    span = Subspace(module.dim)
    for row in radm.basis():
        span.add(row)
    for v in A.vertices:
        for k in range(module.offsets[v], module.offsets[v] + module.vdims[v]):
            e = [Fraction(0)] * module.dim
            e[k] = Fraction(1)
            if span.add(e):
                summands.append(v)
                lifts.append(e)
    ps = ProjectiveSum(A, summands)
    pmat = Matrix.zeros(module.dim, ps.module.dim)
    for k, (piece, lift) in enumerate(zip(ps.pieces, lifts)):
        for local, bidx in enumerate(piece.basis_algebra_indices):
            eb = A.zero()
            eb[bidx] = Fraction(1)
            col = module.act(eb).apply(lift)
            g = ps.global_index(k, local)
            for r, c in enumerate(col):
                if c:
                    pmat[r, g] = c
    if summands and Matrix([pmat.col(j) for j in range(pmat.n)]).rank() != module.dim:
        raise AssertionError("projective cover failed to surject")
    module._cover_cache = (ps, pmat)
    return ps, pmat


def syzygy(module: AModule):
    """Kernel of the minimal projective cover, as a module with inclusion
    into the cover."""
    ps, pmat = projective_cover(module)
    kernel = pmat.nullspace()
    sub, inclusion = submodule(ps.module, kernel)
    return sub, ps.module, inclusion


def is_projective(module: AModule) -> bool:
    if module.dim == 0:
        return True
    sub, _, _ = syzygy(module)
    return sub.dim == 0


def factors_through_projective_space(m: AModule, n: AModule) -> Subspace:
    """Subspace of Hom(M, N) of maps factoring through a projective."""
    ps, pmat = projective_cover(n)
    lift_maps = hom_space(m, ps.module)
    ambient = n.dim * m.dim
    span = Subspace(ambient)
    for g in lift_maps:
        span.add((pmat * g).flatten())
    return span


def stable_hom(m: AModule, n: AModule):
    """(dimension, basis) of Hom(M, N) modulo projective factorizations."""
    homs = hom_space(m, n)
    if not homs:
        return 0, []
    span = factors_through_projective_space(m, n)
    reps = []
    base = Subspace(m.dim * n.dim)
    for row in span.basis():
        base.add(row)
    for f in homs:
        if base.add(f.flatten()):
            reps.append(f)
    return len(reps), reps


def factors_through_projective(m: AModule, n: AModule, f: Matrix) -> bool:
    span = factors_through_projective_space(m, n)
    return span.contains(f.flatten())


def ext1(m: AModule, n: AModule) -> int:
    """dim Ext^1(M, N) = dim coker(Hom(P, N) -> Hom(Omega M, N))."""
    if m.dim == 0 or n.dim == 0:
        return 0
    omega, cover, inclusion = syzygy(m)
    if omega.dim == 0:
        return 0
    cover_homs = hom_space(cover, n)
    omega_homs = hom_space(omega, n)
    restricted = Subspace(n.dim * omega.dim)
    for g in cover_homs:
        restricted.add((g * inclusion).flatten())
    total = Subspace(n.dim * omega.dim)
    for row in restricted.basis():
        total.add(row)
    extra = 0
    for f in omega_homs:
        if total.add(f.flatten()):
            extra += 1
    return extra


def ext1_via_two_step(m: AModule, n: AModule) -> int:
    """Ext^1 from the complex Hom(P0, N) -> Hom(P1, N) -> Hom(P2, N)."""
    if m.dim == 0 or n.dim == 0:
        return 0
    omega1, p0, inc1 = syzygy(m)
    if omega1.dim == 0:
        return 0
    ps1, cover1_mat = projective_cover(omega1)
    p1 = ps1.module
    d1 = inc1 * cover1_mat  # P1 -> P0
    omega2, _, inc2 = syzygy(omega1)
    hom_p0 = hom_space(p0, n)
    hom_p1 = hom_space(p1, n)
    if omega2.dim:
        ps2, cover2_mat = projective_cover(omega2)
        d2 = inc2 * cover2_mat  # P2 -> P1
        kernel_reps = []
        if hom_p1:
            coeff_rows = [(g * d2).flatten() for g in hom_p1]
            for sol in Matrix(coeff_rows).transpose().nullspace():
                acc = Matrix.zeros(n.dim, p1.dim)
                for c, g in zip(sol, hom_p1):
                    if c:
                        acc = acc + g.scale(c)
                kernel_reps.append(acc)
        del ps2
    else:
        kernel_reps = hom_p1
    total = Subspace(n.dim * p1.dim)
    for g in hom_p0:
        total.add((g * d1).flatten())
    extra = 0
    for f in kernel_reps:
        if total.add(f.flatten()):
            extra += 1
    return extra


# ---------------------------------------------------------------------------
# duality, transpose, AR translate
# ---------------------------------------------------------------------------


def dual_module(module: AModule) -> AModule:
    """D(M) over the opposite algebra: transpose every arrow matrix."""
    op = module.algebra.op()
    return AModule(op, dict(module.vdims), {name: mat.transpose() for name, mat in module.mats.items()})


def transpose_module(module: AModule) -> AModule:
    """Tr(M) over the opposite algebra, from a minimal projective presentation.

    With the presentation P1 -> P0 -> M -> 0, write the differential as a
    matrix of algebra elements u_lk in e_{j_l} A e_{i_k}; applying
    Hom(-, A) turns it into left multiplication by u between the opposite
    projectives, and Tr(M) is the cokernel.
    """
    A = module.algebra
    op = A.op()
    if module.dim == 0 or is_projective(module):
        return zero_module(op)
    ps0, p0mat = projective_cover(module)
    kernel = p0mat.nullspace()
    omega, inc = submodule(ps0.module, kernel)
    ps1, cover1_mat = projective_cover(omega)
    d1 = inc * cover1_mat  # P1 -> P0 in the sums' own coordinates
    u: dict[tuple[int, int], Vec] = {}
    for l in range(len(ps1.verts)):
        col = d1.col(ps1.generator_index(l))
        for k in range(len(ps0.verts)):
            u[(l, k)] = ps0.component_element(k, col)
    # over the opposite algebra: (+)_k (Aop) e_{i_k} -> (+)_l (Aop) e_{j_l}
    src = ProjectiveSum(op, ps0.verts)
    tgt = ProjectiveSum(op, ps1.verts)
    if src.module.dim == 0:
        return tgt.module
    fmat = Matrix.zeros(tgt.module.dim, src.module.dim)
    for k, piece in enumerate(src.pieces):
        for col_local, bidx in enumerate(piece.basis_algebra_indices):
            vvec = A.zero()
            vvec[bidx] = Fraction(1)
            gcol = src.global_index(k, col_local)
            for l, tpiece in enumerate(tgt.pieces):
                image = A.mult(u[(l, k)], vvec)
                for row_local, tb in enumerate(tpiece.basis_algebra_indices):
                    if image[tb]:
                        fmat[tgt.global_index(l, row_local), gcol] = image[tb]
    cols = [fmat.col(j) for j in range(fmat.n)]
    quot, _ = quotient_module(tgt.module, cols)
    return quot


def ar_translate(module: AModule) -> AModule:
    """tau(M) = D Tr(M); zero exactly for projective modules."""
    tr = transpose_module(module)
    return dual_module(tr)


def ar_translate_inverse(module: AModule) -> AModule:
    """tau^{-1}(M) = Tr D(M)."""
    d = dual_module(module)
    tr = transpose_module(d)
    return tr  # Tr over (A^op)^op = A


def cosyzygy(module: AModule) -> AModule:
    """Omega^{-1}(M) = D Omega D(M): cokernel of the injective envelope."""
    d = dual_module(module)
    om, _, _ = syzygy(d)
    return dual_module(om)


def modules_isomorphic(m: AModule, n: AModule):
    """Invertible A-homomorphism, or None; complete over Q."""
    from ..klr import find_invertible

    if m.dim != n.dim or m.graded_dims() != n.graded_dims():
        return None
    if m.dim == 0:
        return Matrix.zeros(0, 0)
    space = hom_space(m, n)
    if not space:
        return None
    return find_invertible(space)


def is_indecomposable(module: AModule) -> bool:
    """Local endomorphism algebra test via the trace-form radical."""
    if module.dim == 0:
        return False
    ends = hom_space(module, module)
    gram = Matrix([[ (a * b).trace() for b in ends] for a in ends])
    return len(ends) - len(gram.nullspace()) == 1


# ---------------------------------------------------------------------------
# induction
# ---------------------------------------------------------------------------


def induce(a_big: FDAlgebra, a_small: FDAlgebra, generator_image, vertex_image, module: AModule) -> AModule:
    """A_big e (x)_{A_small} M for an embedding of A_small into e A_big e.

    generator_image: arrow name of A_small -> element (Vec) of A_big;
    vertex_image: vertex of A_small -> element (Vec) of A_big (idempotent
    images; zero vectors are allowed and kill the corresponding part).
    """
    # E = span of A_big * (images of small vertex idempotents)
    target_idems = [vertex_image(v) for v in a_small.vertices]
    espan = Subspace(a_big.dim)
    for e in target_idems:
        if vec_is_zero(e):
            continue
        for k in range(a_big.dim):
            ek = a_big.zero()
            ek[k] = Fraction(1)
            espan.add(a_big.mult(ek, e))
    ebasis = espan.basis()
    edim = len(ebasis)
    mdim = module.dim
    if edim == 0 or mdim == 0:
        return zero_module(a_big)
    amb = edim * mdim

    def tensor_index(i: int, j: int) -> int:
        return i * mdim + j

    # balancing relations: (b * phi(a)) (x) m  -  b (x) (a m)
    relations = Subspace(amb)
    small_gens: list[tuple[Vec, Matrix]] = []
    for v in a_small.vertices:
        small_gens.append((vertex_image(v), module.vertex_projector(v)))
    for a in a_small.arrows:
        small_gens.append((generator_image(a.name), module.mats[a.name]))
    for gvec, gmat in small_gens:
        right_ops = [espan.coords(a_big.mult(b, gvec)) for b in ebasis]
        for i, b in enumerate(ebasis):
            rc = right_ops[i]
            if rc is None:
                raise ValueError("span is not stable under the right action")
            for j in range(mdim):
                row = [Fraction(0)] * amb
                for i2, c in enumerate(rc):
                    if c:
                        row[tensor_index(i2, j)] += c
                for j2 in range(mdim):
                    if gmat[j2, j]:
                        row[tensor_index(i, j2)] -= gmat[j2, j]
                relations.add(row)
    keep = relations.nonpivot_columns()
    pos = {j: k for k, j in enumerate(keep)}
    qdim = len(keep)

    def project(vec: Vec) -> Vec:
        reduced = relations.reduce(vec)
        return [reduced[j] for j in keep]

    # vertex grading of the quotient: group representative coordinates after
    # re-echelonizing with respect to the big idempotents
    # build actions of the big algebra generators on the quotient
    def big_action(avec: Vec) -> Matrix:
        left = [espan.coords(a_big.mult(avec, b)) for b in ebasis]
        mat = Matrix.zeros(qdim, qdim)
        for j in keep:
            i, jm = divmod(j, mdim)
            lc = left[i]
            vec = [Fraction(0)] * amb
            for i2, c in enumerate(lc):
                if c:
                    vec[tensor_index(i2, jm)] += c
            image = project(vec)
            for r, c in enumerate(image):
                if c:
                    mat[r, pos[j]] = c
        return mat

    idem_mats = {v: big_action(a_big.vertex_idempotent(v)) for v in a_big.vertices}
    # simultaneous eigenbasis of the orthogonal idempotents = graded basis
    columns: list[Vec] = []
    vdims = {}
    for v in a_big.vertices:
        mat = idem_mats[v]
        span = Subspace(qdim)
        for j in range(qdim):
            span.add(mat.col(j))
        vdims[v] = span.dim
        columns.extend(span.basis())
    if sum(vdims.values()) != qdim:
        raise AssertionError("idempotent images do not split the induced module")
    change = Matrix(columns).transpose()  # qdim x qdim, new basis columns
    inv = change.inverse()
    mats = {}
    for a in a_big.arrows:
        raw = big_action(a_big.path_vec((a.name,)))
        mats[a.name] = inv * raw * change
    return AModule(a_big, vdims, mats)


def module_from_matrix_rep(algebra: FDAlgebra, rep) -> AModule:
    """View a KLR matrix representation as a module over the normalized
    algebra of the same rank (vertices are residue words as strings)."""
    word_of = {v: v for v in algebra.vertices}
    # new graded basis: columns of the idempotent projectors
    columns: list = []
    vdims = {v: 0 for v in algebra.vertices}
    for v in algebra.vertices:
        word = tuple(int(ch) for ch in v)
        proj = rep.idempotent(word)
        span = Subspace(rep.dim)
        for j in range(rep.dim):
            span.add(proj.col(j))
        vdims[v] = span.dim
        columns.extend(span.basis())
    total = sum(vdims.values())
    if total != rep.dim:
        raise ValueError("representation has weight outside the algebra's vertices")
    change = Matrix(columns).transpose()
    inv = change.inverse()
    mats = {}
    for a in algebra.arrows:
        kind, index, word = _parse_klr_arrow(a.name)
        gen = rep.x[index - 1] if kind == "x" else rep.psi[index - 1]
        wt = tuple(int(ch) for ch in word)
        raw = gen * rep.idempotent(wt)
        mats[a.name] = inv * raw * change
    del word_of
    return AModule(algebra, vdims, mats)


def _parse_klr_arrow(name: str) -> tuple[str, int, str]:
    kind, rest = name.split("_", 1)
    index, word = rest.split("@")
    return kind, int(index), word
