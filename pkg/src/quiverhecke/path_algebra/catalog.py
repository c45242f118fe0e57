"""Catalog of bounded quiver presentations used throughout the workbench.

Two groups: the eight families of two-point symmetric special biserial
algebras (with their defining trace values on the socle paths), and the
presentations arising from finite quiver Hecke algebras in affine type A,
either as explicit small basic algebras or generated generically from the
defining relations at a chosen rational parameter.
"""

from __future__ import annotations

from fractions import Fraction

from ..cartan import InvalidRankError
from ..klr import braid_correction, presentation as klr_presentation, q_poly, swap_word
from ..linalg import frac
from .presentations import Presentation, Quiver, equality, monomials, power


class InvalidExponentError(ValueError):
    pass


def _need(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidExponentError(message)


def family_1(m: int):
    """Symmetric Nakayama algebra on two vertices: (ab)^m a = (ba)^m b = 0."""
    _need(m >= 1, "family (1) needs m >= 1")
    quiver = Quiver(["0", "1"], [("alpha", "0", "1"), ("beta", "1", "0")])
    ab, ba = ("alpha", "beta"), ("beta", "alpha")
    rels = monomials(power(ab, m) + ("alpha",), power(ba, m) + ("beta",))
    trace = {power(ab, m): Fraction(1), power(ba, m): Fraction(1)}
    return Presentation(quiver, rels, name=f"family1({m})", trace_spec=trace)


def family_2a(p: int, q: int):
    """Loop at vertex 0: bc = ca = 0, c^p = (ab)^q."""
    _need(p >= 2 and q >= 1, "family (2a) needs p >= 2, q >= 1")
    quiver = Quiver(
        ["0", "1"],
        [("alpha", "0", "1"), ("beta", "1", "0"), ("gamma", "0", "0")],
    )
    rels = monomials(("beta", "gamma"), ("gamma", "alpha"))
    rels.append(equality(power(("gamma",), p), power(("alpha", "beta"), q)))
    trace = {
        power(("alpha", "beta"), q): Fraction(1),
        power(("beta", "alpha"), q): Fraction(1),
    }
    return Presentation(quiver, rels, name=f"family2a({p},{q})", trace_spec=trace)


def family_2b(m: int):
    """Loop at vertex 0: ba = c^2 = 0, (cab)^m = (abc)^m."""
    _need(m >= 1, "family (2b) needs m >= 1")
    quiver = Quiver(
        ["0", "1"],
        [("alpha", "0", "1"), ("beta", "1", "0"), ("gamma", "0", "0")],
    )
    rels = monomials(("beta", "alpha"), ("gamma", "gamma"))
    rels.append(
        equality(power(("gamma", "alpha", "beta"), m), power(("alpha", "beta", "gamma"), m))
    )
    trace = {
        power(("gamma", "alpha", "beta"), m): Fraction(1),
        power(("beta", "gamma", "alpha"), m): Fraction(1),
    }
    return Presentation(quiver, rels, name=f"family2b({m})", trace_spec=trace)


def family_3a(p: int, q: int):
    """Two arrows each way: ab' = b'a = a'b = ba' = 0, (ab)^p = (a'b')^q."""
    _need(p >= 1 and q >= 1, "family (3a) needs p, q >= 1")
    quiver = Quiver(
        ["0", "1"],
        [
            ("alpha", "0", "1"),
            ("alphap", "0", "1"),
            ("beta", "1", "0"),
            ("betap", "1", "0"),
        ],
    )
    rels = monomials(
        ("alpha", "betap"), ("betap", "alpha"), ("alphap", "beta"), ("beta", "alphap")
    )
    rels.append(equality(power(("alpha", "beta"), p), power(("alphap", "betap"), q)))
    rels.append(equality(power(("beta", "alpha"), p), power(("betap", "alphap"), q)))
    trace = {
        power(("alpha", "beta"), p): Fraction(1),
        power(("beta", "alpha"), p): Fraction(1),
    }
    return Presentation(quiver, rels, name=f"family3a({p},{q})", trace_spec=trace)


def family_3b(m: int):
    """Two arrows each way, alternating cycles of length four."""
    _need(m >= 1, "family (3b) needs m >= 1")
    quiver = Quiver(
        ["0", "1"],
        [
            ("alpha", "0", "1"),
            ("alphap", "0", "1"),
            ("beta", "1", "0"),
            ("betap", "1", "0"),
        ],
    )
    rels = monomials(
        ("alpha", "betap"), ("beta", "alpha"), ("alphap", "beta"), ("betap", "alphap")
    )
    c0 = ("alpha", "beta", "alphap", "betap")
    c0p = ("alphap", "betap", "alpha", "beta")
    c1 = ("beta", "alphap", "betap", "alpha")
    c1p = ("betap", "alpha", "beta", "alphap")
    rels.append(equality(power(c0, m), power(c0p, m)))
    rels.append(equality(power(c1, m), power(c1p, m)))
    trace = {power(c0, m): Fraction(1), power(c1, m): Fraction(1)}
    return Presentation(quiver, rels, name=f"family3b({m})", trace_spec=trace)


def family_4a(p: int, q: int, r: int):
    """Loops at both vertices: bc = ca = ad = db = 0, (ab)^p = c^q, (ba)^p = d^r."""
    _need(p >= 1 and q >= 2 and r >= 2, "family (4a) needs p >= 1 and q, r >= 2")
    quiver = Quiver(
        ["0", "1"],
        [
            ("alpha", "0", "1"),
            ("beta", "1", "0"),
            ("gamma", "0", "0"),
            ("delta", "1", "1"),
        ],
    )
    rels = monomials(("beta", "gamma"), ("gamma", "alpha"), ("alpha", "delta"), ("delta", "beta"))
    rels.append(equality(power(("alpha", "beta"), p), power(("gamma",), q)))
    rels.append(equality(power(("beta", "alpha"), p), power(("delta",), r)))
    trace = {power(("gamma",), q): Fraction(1), power(("delta",), r): Fraction(1)}
    return Presentation(quiver, rels, name=f"family4a({p},{q},{r})", trace_spec=trace)


def family_4b(p: int, q: int):
    """Loops at both vertices: ba = c^2 = ad = db = 0, (cab)^p = (abc)^p, (bca)^p = d^q."""
    _need(p >= 1 and q >= 2, "family (4b) needs p >= 1 and q >= 2")
    quiver = Quiver(
        ["0", "1"],
        [
            ("alpha", "0", "1"),
            ("beta", "1", "0"),
            ("gamma", "0", "0"),
            ("delta", "1", "1"),
        ],
    )
    rels = monomials(
        ("beta", "alpha"), ("gamma", "gamma"), ("alpha", "delta"), ("delta", "beta")
    )
    rels.append(
        equality(power(("gamma", "alpha", "beta"), p), power(("alpha", "beta", "gamma"), p))
    )
    rels.append(equality(power(("beta", "gamma", "alpha"), p), power(("delta",), q)))
    trace = {
        power(("alpha", "beta", "gamma"), p): Fraction(1),
        power(("delta",), q): Fraction(1),
    }
    return Presentation(quiver, rels, name=f"family4b({p},{q})", trace_spec=trace)


def family_4c(m: int):
    """Loops at both vertices, zero two-cycles, alternating four-cycles."""
    _need(m >= 1, "family (4c) needs m >= 1")
    quiver = Quiver(
        ["0", "1"],
        [
            ("alpha", "0", "1"),
            ("beta", "1", "0"),
            ("gamma", "0", "0"),
            ("delta", "1", "1"),
        ],
    )
    rels = monomials(
        ("alpha", "beta"), ("beta", "alpha"), ("gamma", "gamma"), ("delta", "delta")
    )
    c1 = ("beta", "gamma", "alpha", "delta")
    c1p = ("delta", "beta", "gamma", "alpha")
    c0 = ("gamma", "alpha", "delta", "beta")
    c0p = ("alpha", "delta", "beta", "gamma")
    rels.append(equality(power(c1, m), power(c1p, m)))
    rels.append(equality(power(c0, m), power(c0p, m)))
    trace = {power(c0, m): Fraction(1), power(c1, m): Fraction(1)}
    return Presentation(quiver, rels, name=f"family4c({m})", trace_spec=trace)


def basic_R2delta(lam_is_zero: bool):
    """Basic algebra of the rank-4 principal block at level one.

    For nonzero parameter: two vertices, arrows both ways, a loop at vertex 1
    with alpha*gamma = gamma*beta = 0 and (beta*alpha)^2 = gamma^2.  For zero
    parameter: loops at both vertices with the longer relation set.
    """
    if lam_is_zero:
        quiver = Quiver(
            ["0", "1"],
            [
                ("alpha", "0", "1"),
                ("beta", "1", "0"),
                ("gamma", "0", "0"),
                ("delta", "1", "1"),
            ],
        )
        rels = monomials(
            ("alpha", "beta"), ("beta", "gamma"), ("gamma", "alpha"), ("delta", "delta")
        )
        rels.append(equality(("gamma", "gamma"), ("alpha", "delta", "beta")))
        rels.append(equality(("beta", "alpha", "delta"), ("delta", "beta", "alpha")))
        trace = {("gamma", "gamma"): Fraction(1), ("beta", "alpha", "delta"): Fraction(1)}
        return Presentation(quiver, rels, name="basic-2delta(lam=0)", trace_spec=trace)
    quiver = Quiver(
        ["0", "1"],
        [("alpha", "0", "1"), ("beta", "1", "0"), ("gamma", "1", "1")],
    )
    rels = monomials(("alpha", "gamma"), ("gamma", "beta"))
    rels.append(equality(power(("beta", "alpha"), 2), ("gamma", "gamma")))
    trace = {
        power(("alpha", "beta"), 2): Fraction(1),
        power(("beta", "alpha"), 2): Fraction(1),
    }
    return Presentation(quiver, rels, name="basic-2delta(lam!=0)", trace_spec=trace)


def appendix_example():
    """Two-point symmetric algebra that is stably biserial but not special
    biserial: gamma^2 = gamma*alpha*beta = alpha*beta*gamma,
    beta*gamma*alpha = beta*alpha, alpha*beta*alpha = beta*alpha*beta = 0."""
    quiver = Quiver(
        ["1", "2"],
        [("alpha", "1", "2"), ("beta", "2", "1"), ("gamma", "1", "1")],
    )
    rels = monomials(("alpha", "beta", "alpha"), ("beta", "alpha", "beta"))
    rels.append(equality(("gamma", "gamma"), ("gamma", "alpha", "beta")))
    rels.append(equality(("gamma", "gamma"), ("alpha", "beta", "gamma")))
    rels.append(equality(("beta", "gamma", "alpha"), ("beta", "alpha")))
    trace = {
        ("e", "1"): Fraction(1),
        ("e", "2"): Fraction(1),
        ("alpha", "beta"): Fraction(1),
        ("beta", "alpha"): Fraction(1),
        ("gamma", "gamma"): Fraction(1),
    }
    return Presentation(quiver, rels, name="appendix-example", trace_spec=trace)


def double_loop_crossing(a=0, b=0):
    """Idempotent truncation shape with two loops at each of two vertices and
    a crossing pair of arrows: pq = xy, qp = zw, all mixed products zero."""
    a, b = frac(a), frac(b)
    quiver = Quiver(
        ["1", "2"],
        [
            ("x", "1", "1"),
            ("y", "1", "1"),
            ("z", "2", "2"),
            ("w", "2", "2"),
            ("p", "1", "2"),
            ("q", "2", "1"),
        ],
    )
    rels = monomials(
        ("x", "x"),
        ("z", "z"),
        ("x", "p"), ("y", "p"), ("p", "z"), ("p", "w"),
        ("z", "q"), ("w", "q"), ("q", "x"), ("q", "y"),
    )
    rels.append(equality(("y", "y"), ("x", "y"), a))
    rels.append(equality(("x", "y"), ("y", "x")))
    rels.append(equality(("w", "w"), ("z", "w"), b))
    rels.append(equality(("z", "w"), ("w", "z")))
    rels.append(equality(("p", "q"), ("x", "y")))
    rels.append(equality(("q", "p"), ("z", "w")))
    trace = {("x", "y"): Fraction(1), ("z", "w"): Fraction(1)}
    return Presentation(quiver, rels, name=f"double-loop-crossing({a},{b})", trace_spec=trace)


def linear_a2():
    """Path algebra of the A2 quiver (not self-injective; no relations)."""
    quiver = Quiver(["1", "2"], [("alpha", "1", "2")])
    return Presentation(quiver, [], name="A2")


CATALOG = {
    "1": (family_1, 1),
    "2a": (family_2a, 2),
    "2b": (family_2b, 1),
    "3a": (family_3a, 2),
    "3b": (family_3b, 1),
    "4a": (family_4a, 3),
    "4b": (family_4b, 2),
    "4c": (family_4c, 1),
}


def catalog_presentation(name: str, exps=(), lam=None) -> Presentation:
    """Look up a catalog presentation by CLI name."""
    if name in CATALOG:
        fn, arity = CATALOG[name]
        if len(exps) != arity:
            raise InvalidExponentError(f"family {name} takes {arity} exponent(s)")
        return fn(*exps)
    if name == "basic-2delta":
        if lam is None:
            raise ValueError("basic-2delta needs a parameter value")
        return basic_R2delta(frac(lam) == 0)
    if name == "appendix-example":
        return appendix_example()
    if name == "double-loop-crossing":
        vals = list(exps) + [0, 0]
        return double_loop_crossing(vals[0], vals[1])
    if name == "a2":
        return linear_a2()
    raise KeyError(f"unknown catalog algebra {name!r}")


def exponent_tuples(name: str, bound: int):
    """All legal exponent tuples for the family with entries <= bound."""
    fn, arity = CATALOG[name]
    out = []

    def rec(prefix):
        if len(prefix) == arity:
            try:
                fn(*prefix)
            except InvalidExponentError:
                return
            out.append(tuple(prefix))
            return
        for e in range(1, bound + 1):
            rec(prefix + [e])

    rec([])
    return out


# ---------------------------------------------------------------------------
# quiver Hecke algebras as bounded quiver presentations
# ---------------------------------------------------------------------------


def _word_str(word: tuple[int, ...]) -> str:
    return "".join(str(a) for a in word)


def klr_as_presentation(ell: int, n: int, lam, max_len: int = 40) -> Presentation:
    """R^{Lambda_0}(n) as a bounded quiver presentation.

    Vertices are the residue words starting with 0 (the cyclotomic relation
    kills all others); each vertex carries loops x_1..x_n and arrows
    psi_k from the transposed word.  All defining relations are spelled out
    per vertex and handed to the rewriting engine, which discovers the dead
    words on its own.
    """
    if ell < 1:
        raise InvalidRankError("ell must be >= 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    pres = klr_presentation(ell, n, lam)
    words = []

    def grow(prefix):
        if len(prefix) == n:
            words.append(tuple(prefix))
            return
        for i in range(ell + 1):
            grow(prefix + [i])

    grow([0])
    vertex = {w: _word_str(w) for w in words}
    alive = set(words)

    arrows = []
    for w in words:
        for k in range(1, n + 1):
            arrows.append((f"x_{k}@{vertex[w]}", vertex[w], vertex[w]))
        for k in range(1, n):
            src = swap_word(w, k)
            if src in alive:
                arrows.append((f"psi_{k}@{vertex[w]}", vertex[src], vertex[w]))
    quiver = Quiver(sorted({v for v in vertex.values()}), arrows)
    have = {a[0] for a in arrows}

    def x_path(k: int, w) -> tuple[str, ...] | None:
        return (f"x_{k}@{vertex[w]}",)

    def psi_path(k: int, w) -> tuple[str, ...] | None:
        name = f"psi_{k}@{vertex[w]}"
        return (name,) if name in have else None

    def word_path(gens, w):
        """Path for the product gens applied to e(w); None when it passes a
        dead word (the arrow is absent, so the product is zero)."""
        path: list[str] = []
        current = w
        for kind, k in reversed(gens):
            if kind == "x":
                step = x_path(k, current)
            else:
                step = psi_path(k, current)
                if step is None:
                    return None
                current = swap_word(current, k)
            path = list(step) + path
        return tuple(path) if path else ("e", vertex[w])

    def poly_terms(poly2, vars_to_gens, w):
        """Expand a polynomial in the x generators at e(w) into path terms."""
        out = []
        for exp, coeff in poly2.terms.items():
            gens = []
            for var_index, e in enumerate(exp):
                gens.extend([("x", vars_to_gens[var_index])] * e)
            path = word_path(gens, w)
            if path is not None:
                out.append((coeff, path))
        return out

    relations = []
    for w in words:
        wname = vertex[w]
        # commuting polynomial generators
        for k in range(1, n + 1):
            for l in range(k + 1, n + 1):
                t1 = word_path([("x", k), ("x", l)], w)
                t2 = word_path([("x", l), ("x", k)], w)
                relations.append([(Fraction(1), t1), (Fraction(-1), t2)])
        # distant intertwiners commute
        for k in range(1, n):
            for l in range(k + 2, n):
                terms = []
                p1 = word_path([("psi", k), ("psi", l)], w)
                p2 = word_path([("psi", l), ("psi", k)], w)
                if p1 is not None:
                    terms.append((Fraction(1), p1))
                if p2 is not None:
                    terms.append((Fraction(-1), p2))
                if terms:
                    relations.append(terms)
        # squared intertwiner
        for k in range(1, n):
            terms = []
            sq = word_path([("psi", k), ("psi", k)], w)
            if sq is not None:
                terms.append((Fraction(1), sq))
            q = q_poly(pres, w[k - 1], w[k])
            for coeff, path in poly_terms(q, {0: k, 1: k + 1}, w):
                terms.append((-coeff, path))
            if terms:
                relations.append(terms)
        # mixed relation
        for k in range(1, n):
            for l in range(1, n + 1):
                sl = k + 1 if l == k else (k if l == k + 1 else l)
                terms = []
                t1 = word_path([("psi", k), ("x", l)], w)
                t2 = word_path([("x", sl), ("psi", k)], w)
                if t1 is not None:
                    terms.append((Fraction(1), t1))
                if t2 is not None:
                    terms.append((Fraction(-1), t2))
                if w[k - 1] == w[k]:
                    if l == k:
                        terms.append((Fraction(1), ("e", wname)))
                    elif l == k + 1:
                        terms.append((Fraction(-1), ("e", wname)))
                if terms:
                    relations.append(terms)
        # braid deviation
        for k in range(1, n - 1):
            terms = []
            b1 = word_path([("psi", k + 1), ("psi", k), ("psi", k + 1)], w)
            b2 = word_path([("psi", k), ("psi", k + 1), ("psi", k)], w)
            if b1 is not None:
                terms.append((Fraction(1), b1))
            if b2 is not None:
                terms.append((Fraction(-1), b2))
            if w[k - 1] == w[k + 1]:
                corr = braid_correction(pres, w[k - 1], w[k])
                for coeff, path in poly_terms(corr, {0: k, 1: k + 1, 2: k + 2}, w):
                    terms.append((-coeff, path))
            if terms:
                relations.append(terms)
        # cyclotomic relation: the first letter is 0 by construction
        relations.append([(Fraction(1), word_path([("x", 1)], w))])
    return Presentation(quiver, relations, max_len=max_len, name=f"klr(ell={ell},n={n},lam={pres.lam})")
