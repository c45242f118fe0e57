"""Quivers and bounded-quiver presentations.

A relation is a rational linear combination of parallel paths (same source
and target).  Relations whose terms all have length >= 2 are admissible in
the classical sense; the rewriting engine also accepts lower-degree tails,
which is what presentations of cyclotomic quiver Hecke algebras produce.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..linalg import frac


@dataclass(frozen=True)
class Arrow:
    name: str
    src: str
    tgt: str


class Quiver:
    def __init__(self, vertices, arrows):
        self.vertices = [str(v) for v in vertices]
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        self.arrows = [a if isinstance(a, Arrow) else Arrow(*a) for a in arrows]
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow names")
        self.arrow_by_name = {a.name: a for a in self.arrows}
        for a in self.arrows:
            if a.src not in self.vertices or a.tgt not in self.vertices:
                raise ValueError(f"arrow {a.name} has an endpoint outside the quiver")

    def outgoing(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.src == v]

    def incoming(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.tgt == v]

    def loops_at(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.src == v and a.tgt == v]

    def path_endpoints(self, path: tuple[str, ...]) -> tuple[str, str]:
        if not path:
            raise ValueError("empty path needs an explicit vertex")
        arrows = [self.arrow_by_name[name] for name in path]
        for a, b in zip(arrows, arrows[1:]):
            if a.tgt != b.src:
                raise ValueError(f"path {path} is not composable at {a.name}|{b.name}")
        return arrows[0].src, arrows[-1].tgt

    def __repr__(self):
        return f"Quiver({self.vertices}, {[(a.name, a.src, a.tgt) for a in self.arrows]})"


# one term of a relation: (coefficient, path); the empty path at a vertex is
# written ("e", vertex)
RelTerm = tuple[Fraction, tuple[str, ...]]


@dataclass
class Presentation:
    quiver: Quiver
    relations: list[list[RelTerm]]
    max_len: int = 40
    name: str = ""
    trace_spec: dict = field(default_factory=dict)

    def __post_init__(self):
        cleaned = []
        for rel in self.relations:
            terms = []
            for coeff, path in rel:
                coeff = frac(coeff)
                if coeff == 0:
                    continue
                terms.append((coeff, tuple(path)))
            if not terms:
                continue
            endpoints = {self._endpoints(path) for _, path in terms}
            if len(endpoints) != 1:
                raise ValueError(f"relation terms are not parallel: {terms}")
            if max(self._length(path) for _, path in terms) < 1:
                raise ValueError("relation must involve at least one arrow")
            cleaned.append(terms)
        self.relations = cleaned

    def _endpoints(self, path: tuple[str, ...]) -> tuple[str, str]:
        if path and path[0] == "e":
            v = path[1]
            if v not in self.quiver.vertices:
                raise ValueError(f"unknown vertex {v}")
            return v, v
        return self.quiver.path_endpoints(path)

    @staticmethod
    def _length(path: tuple[str, ...]) -> int:
        return 0 if path and path[0] == "e" else len(path)

    @property
    def admissible(self) -> bool:
        """True when all relation terms have length >= 2."""
        return all(
            self._length(path) >= 2 for rel in self.relations for _, path in rel
        )

    def to_json(self) -> dict:
        rels = []
        for rel in self.relations:
            rels.append([{"coef": str(c), "path": list(p)} for c, p in rel])
        out = {
            "vertices": list(self.quiver.vertices),
            "arrows": [{"name": a.name, "src": a.src, "tgt": a.tgt} for a in self.quiver.arrows],
            "relations": rels,
        }
        if self.trace_spec:
            out["trace"] = {
                (" ".join(path) if path[0] != "e" else f"e:{path[1]}"): str(value)
                for path, value in sorted(self.trace_spec.items())
            }
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Presentation":
        quiver = Quiver(
            data["vertices"],
            [(a["name"], a["src"], a["tgt"]) for a in data["arrows"]],
        )
        relations = [
            [(Fraction(t["coef"]), tuple(t["path"])) for t in rel]
            for rel in data["relations"]
        ]
        trace = {}
        for key, value in data.get("trace", {}).items():
            if key.startswith("e:"):
                path = ("e", key[2:])
            else:
                path = tuple(key.split())
            trace[path] = Fraction(value)
        return cls(quiver, relations, trace_spec=trace)


def monomials(*paths) -> list[list[RelTerm]]:
    """Zero relations, one per path."""
    return [[(Fraction(1), tuple(p))] for p in paths]


def equality(path_a, path_b, coeff=1) -> list[RelTerm]:
    """Relation path_a = coeff * path_b."""
    return [(Fraction(1), tuple(path_a)), (-frac(coeff), tuple(path_b))]


def power(path, exponent: int) -> tuple[str, ...]:
    return tuple(path) * exponent
