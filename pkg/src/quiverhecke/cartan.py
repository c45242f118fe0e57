"""Affine Cartan datum of type A^(1)_l: weights, roots, pairings, Weyl action.

Weights are stored in the basis {Lambda_0, alpha_0, ..., alpha_l}, which turns
every pairing and reflection into integer arithmetic.  The scaling element d
is never stored; only its pairing is exposed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


class InvalidRankError(ValueError):
    pass


def cartan_matrix(ell: int) -> list[list[int]]:
    """The affine Cartan matrix of type A^(1)_ell (size ell+1)."""
    if ell < 1:
        raise InvalidRankError(f"rank parameter must be >= 1, got {ell}")
    if ell == 1:
        return [[2, -2], [-2, 2]]
    n = ell + 1
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        a[i][(i + 1) % n] = -1
        a[i][(i - 1) % n] = -1
    return a


@dataclass(frozen=True)
class CartanDatum:
    ell: int

    def __post_init__(self):
        if self.ell < 1:
            raise InvalidRankError(f"rank parameter must be >= 1, got {self.ell}")

    @property
    def matrix(self) -> list[list[int]]:
        return cartan_matrix(self.ell)

    @property
    def index_set(self) -> range:
        return range(self.ell + 1)


@dataclass(frozen=True)
class Weight:
    """level * Lambda_0 + sum(alpha[i] * alpha_i)."""

    level: int
    alpha: tuple[int, ...]

    @property
    def ell(self) -> int:
        return len(self.alpha) - 1

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(self.level + other.level, tuple(a + b for a, b in zip(self.alpha, other.alpha)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(self.level - other.level, tuple(a - b for a, b in zip(self.alpha, other.alpha)))

    def __rmul__(self, c: int) -> "Weight":
        return Weight(c * self.level, tuple(c * a for a in self.alpha))

    def _check(self, other: "Weight") -> None:
        if len(self.alpha) != len(other.alpha):
            raise ValueError("weights live in different lattices")

    def to_json(self) -> dict:
        return {"level": self.level, "alpha": list(self.alpha)}

    @classmethod
    def from_json(cls, data: dict) -> "Weight":
        return cls(int(data["level"]), tuple(int(a) for a in data["alpha"]))


@dataclass(frozen=True)
class RootVector:
    """Element of Q^+: a nonnegative integer combination of simple roots."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.coeffs):
            raise ValueError("root vector coefficients must be nonnegative")

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def as_weight(self) -> Weight:
        return Weight(0, self.coeffs)


def fundamental_weight(ell: int) -> Weight:
    return Weight(1, (0,) * (ell + 1))


def simple_root(ell: int, i: int) -> Weight:
    _check_index(ell, i)
    alpha = [0] * (ell + 1)
    alpha[i] = 1
    return Weight(0, tuple(alpha))


def null_root(ell: int) -> Weight:
    """delta = alpha_0 + alpha_1 + ... + alpha_ell."""
    return Weight(0, (1,) * (ell + 1))


def _check_index(ell: int, i: int) -> None:
    if not 0 <= i <= ell:
        raise IndexError(f"index {i} out of range for rank {ell}")


def pair_h(i: int, w: Weight) -> int:
    """<h_i, w> with <h_i, Lambda_0> = delta_{i0} and <h_i, alpha_j> = a_ij."""
    ell = w.ell
    _check_index(ell, i)
    a = cartan_matrix(ell)
    return w.level * (1 if i == 0 else 0) + sum(a[i][j] * w.alpha[j] for j in range(ell + 1))


def pair_d(w: Weight) -> int:
    """<d, w> = coefficient of alpha_0 (and <d, Lambda_0> = 0)."""
    return w.alpha[0]


def simple_reflection(i: int, w: Weight) -> Weight:
    """r_i(w) = w - <h_i, w> alpha_i."""
    c = pair_h(i, w)
    if c == 0:
        return w
    return w - c * simple_root(w.ell, i)


def apply_word(word, w: Weight) -> Weight:
    """Apply reflections left to right: word (0, 1) sends w to r_1(r_0(w))."""
    for i in word:
        w = simple_reflection(i, w)
    return w


def orbit_search(mu: Weight, depth: int = 20):
    """Express mu as w(Lambda_0) - k*delta with k >= 0, if possible.

    Breadth-first search over the Weyl orbit of Lambda_0, deduplicating
    visited weights; returns (word, k) where applying the word to Lambda_0
    (rightmost generator first) and subtracting k*delta gives mu, or None.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    ell = mu.ell
    start = fundamental_weight(ell)

    def witness(kappa: Weight):
        diff = kappa - mu
        if diff.level != 0:
            return None
        ks = set(diff.alpha)
        if len(ks) == 1 and (k := ks.pop()) >= 0:
            return k
        return None

    queue = deque([(start, ())])
    seen = {start}
    while queue:
        kappa, word = queue.popleft()
        k = witness(kappa)
        if k is not None:
            return word, k
        if len(word) >= depth:
            continue
        for i in range(ell + 1):
            nxt = simple_reflection(i, kappa)
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, word + (i,)))
    return None
