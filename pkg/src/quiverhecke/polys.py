"""Small multivariate polynomials over Q with a fixed number of variables.

Used for the deformation polynomials Q_{i,j}(u, v) and the degree-three
correction terms appearing in the braid-type relation.  Monomials are
exponent tuples; coefficients are Fractions.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import Matrix, frac


class Poly:
    """Polynomial in `nvars` commuting variables over Q."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], Fraction] | None = None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for exp, c in terms.items():
                c = frac(c)
                if c:
                    self.terms[tuple(exp)] = c

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, c) -> "Poly":
        return cls(nvars, {(0,) * nvars: frac(c)})

    @classmethod
    def var(cls, nvars: int, i: int) -> "Poly":
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __add__(self, other: "Poly") -> "Poly":
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + c
        return Poly(self.nvars, terms)

    def __sub__(self, other: "Poly") -> "Poly":
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) - c
        return Poly(self.nvars, terms)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return Poly(self.nvars, {e: c * frac(other) for e, c in self.terms.items()})
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Poly(self.nvars, terms)

    __rmul__ = __mul__

    def substitute_scaled(self, scales) -> "Poly":
        """p(c_0 x_0, c_1 x_1, ...) for rational scale factors."""
        terms = {}
        for exp, c in self.terms.items():
            f = c
            for e, s in zip(exp, scales):
                f *= frac(s) ** e
            terms[exp] = terms.get(exp, Fraction(0)) + f
        return Poly(self.nvars, terms)

    def extend(self, nvars: int) -> "Poly":
        """View in a larger variable set (new variables unused)."""
        if nvars < self.nvars:
            raise ValueError("cannot shrink variable set")
        pad = (0,) * (nvars - self.nvars)
        return Poly(nvars, {exp + pad: c for exp, c in self.terms.items()})

    def divide_exact(self, divisor: "Poly"):
        """Exact quotient self/divisor, or None when division leaves a remainder.

        Standard multivariate division by a single polynomial, ordering
        monomials lexicographically with earlier variables dominant.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lead = max(divisor.terms)
        lead_c = divisor.terms[lead]
        rem = Poly(self.nvars, dict(self.terms))
        quo = Poly.zero(self.nvars)
        while not rem.is_zero():
            e = max(rem.terms)
            if any(a < b for a, b in zip(e, lead)):
                return None
            qe = tuple(a - b for a, b in zip(e, lead))
            qc = rem.terms[e] / lead_c
            t = Poly(self.nvars, {qe: qc})
            quo = quo + t
            rem = rem - t * divisor
        return quo

    def eval_matrices(self, mats: list[Matrix], dim: int) -> Matrix:
        """Evaluate at pairwise commuting square matrices.

        The constant term contributes a multiple of the identity.  Monomials
        are expanded as ordered products, which is unambiguous for commuting
        arguments.
        """
        if len(mats) != self.nvars:
            raise ValueError("wrong number of matrix arguments")
        out = Matrix.zeros(dim, dim)
        for exp, c in self.terms.items():
            term = Matrix.identity(dim)
            for mat, e in zip(mats, exp):
                for _ in range(e):
                    term = term * mat
            out = out + term.scale(c)
        return out

    def to_str(self, names) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            factors = []
            for name, e in zip(names, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self.to_str(['u', 'v', 'w', 't'][: self.nvars])})"
