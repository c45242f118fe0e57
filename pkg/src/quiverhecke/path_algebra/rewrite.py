"""Noncommutative rewriting in path algebras.

Degree-lexicographic completion (Bergman's diamond lemma): relations become
rewrite rules leading-word -> tail, overlap and inclusion ambiguities are
resolved until confluence, and the quotient algebra gets the irreducible
paths as a basis.  Relations may carry tails of lower degree, including
idempotent terms; a vertex whose empty path lands in the ideal is dead and
every path through it collapses.

Monomials are pairs (source vertex index, tuple of arrow indices).
"""

from __future__ import annotations

import heapq
import itertools
from fractions import Fraction

from ..linalg import Subspace, frac
from .presentations import Presentation


class HorizonExceededError(RuntimeError):
    def __init__(self, witness, max_len):
        super().__init__(
            f"rewriting horizon {max_len} reached; longest surviving word has "
            f"length {len(witness[1])}"
        )
        self.witness = witness


class PresentationError(ValueError):
    pass


Mono = tuple[int, tuple[int, ...]]  # (source vertex, arrow word)
PolyDict = dict[Mono, Fraction]


def _mono_key(mono: Mono):
    src, word = mono
    return (len(word), word, src)


class RewriteSystem:
    """Rewrite rules for one presentation, with completion and normal forms."""

    def __init__(self, pres: Presentation):
        self.pres = pres
        quiver = pres.quiver
        self.vertices = list(quiver.vertices)
        self.vindex = {v: i for i, v in enumerate(self.vertices)}
        self.arrow_names = [a.name for a in quiver.arrows]
        self.aindex = {a.name: i for i, a in enumerate(quiver.arrows)}
        self.asrc = [self.vindex[a.src] for a in quiver.arrows]
        self.atgt = [self.vindex[a.tgt] for a in quiver.arrows]
        self.max_len = pres.max_len
        self.rules: dict[tuple[int, ...], PolyDict] = {}
        self.dead: set[int] = set()
        self.max_rule_len = 0
        self._nf_cache: dict[Mono, PolyDict] = {}
        self._completed = False

    # -- monomial helpers ---------------------------------------------------

    def mono_tgt(self, mono: Mono) -> int:
        src, word = mono
        return self.atgt[word[-1]] if word else src

    def mono_alive(self, mono: Mono) -> bool:
        src, word = mono
        if src in self.dead:
            return False
        return all(self.atgt[a] not in self.dead for a in word)

    def path_to_mono(self, path) -> Mono:
        if path and path[0] == "e":
            return (self.vindex[path[1]], ())
        word = tuple(self.aindex[name] for name in path)
        if not word:
            raise PresentationError("empty path needs a vertex")
        return (self.asrc[word[0]], word)

    def mono_to_path(self, mono: Mono):
        src, word = mono
        if not word:
            return ("e", self.vertices[src])
        return tuple(self.arrow_names[a] for a in word)

    def concat(self, a: Mono, b: Mono) -> Mono | None:
        """a then b, or None when endpoints do not match."""
        if self.mono_tgt(a) != b[0]:
            return None
        return (a[0], a[1] + b[1])

    # -- reduction ----------------------------------------------------------

    def _find_redex(self, word: tuple[int, ...]):
        limit = self.max_rule_len
        n = len(word)
        for i in range(n):
            for length in range(1, min(limit, n - i) + 1):
                sub = word[i : i + length]
                if sub in self.rules:
                    return i, length, self.rules[sub]
        return None

    def reduce_poly(self, poly: PolyDict, use_cache: bool = False) -> PolyDict:
        """Full normal form of a polynomial."""
        out: PolyDict = {}
        work = [(mono, frac(c)) for mono, c in poly.items() if c]
        while work:
            mono, coeff = work.pop()
            if not self.mono_alive(mono):
                continue
            if use_cache and mono in self._nf_cache:
                for m2, c2 in self._nf_cache[mono].items():
                    out[m2] = out.get(m2, Fraction(0)) + coeff * c2
                continue
            hit = self._find_redex(mono[1])
            if hit is None:
                out[mono] = out.get(mono, Fraction(0)) + coeff
                continue
            i, length, tail = hit
            src, word = mono
            prefix, suffix = word[:i], word[i + length :]
            for (tsrc, tword), c2 in tail.items():
                nsrc = src if prefix else tsrc
                work.append(((nsrc, prefix + tword + suffix), coeff * c2))
        return {m: c for m, c in out.items() if c}

    def normal_form_mono(self, mono: Mono) -> PolyDict:
        if mono not in self._nf_cache:
            self._nf_cache[mono] = self.reduce_poly({mono: Fraction(1)})
        return self._nf_cache[mono]

    # -- completion ---------------------------------------------------------

    def complete(self) -> None:
        counter = itertools.count()
        agenda: list[tuple[tuple, int, PolyDict]] = []

        def push(poly: PolyDict):
            live = {m: c for m, c in poly.items() if c}
            if not live:
                return
            lead = max(live, key=_mono_key)
            heapq.heappush(agenda, (_mono_key(lead), next(counter), live))

        for rel in self.pres.relations:
            push({self.path_to_mono(path): frac(c) for c, path in rel})

        while agenda:
            _, _, poly = heapq.heappop(agenda)
            poly = self.reduce_poly(poly)
            if not poly:
                continue
            lead = max(poly, key=_mono_key)
            if len(lead[1]) >= self.max_len:
                raise HorizonExceededError(lead, self.max_len)
            lead_c = poly[lead]
            tail = {m: -c / lead_c for m, c in poly.items() if m != lead}

            if not lead[1]:
                # the empty path at a vertex lies in the ideal: dead vertex
                self.dead.add(lead[0])
                if tail:
                    push(tail)
                for word in [w for w in self.rules if not self._word_alive(w)]:
                    old_tail = self.rules.pop(word)
                    if old_tail:
                        push(old_tail)
                self._recompute_rule_stats()
                continue

            word = lead[1]
            # existing rules whose lead contains the new one get reprocessed
            stale = [w for w in self.rules if len(w) > len(word) and _contains(w, word)]
            for w in stale:
                old_tail = self.rules.pop(w)
                push({(self.asrc[w[0]], w): Fraction(1), **_negate(old_tail)})
            self.rules[word] = tail
            self.max_rule_len = max(self.max_rule_len, len(word))

            for other in list(self.rules):
                for spoly in self._overlap_polys(word, other):
                    push(spoly)
                if other != word:
                    for spoly in self._overlap_polys(other, word):
                        push(spoly)

        self._completed = True
        self._nf_cache.clear()

    def _word_alive(self, word: tuple[int, ...]) -> bool:
        return self.mono_alive((self.asrc[word[0]], word))

    def _recompute_rule_stats(self):
        self.max_rule_len = max((len(w) for w in self.rules), default=0)

    def _overlap_polys(self, a: tuple[int, ...], b: tuple[int, ...]):
        """S-polynomials from suffix(a) = prefix(b) overlaps."""
        out = []
        tail_a = self.rules.get(a)
        tail_b = self.rules.get(b)
        if tail_a is None or tail_b is None:
            return out
        for k in range(1, min(len(a), len(b))):
            if a[len(a) - k :] != b[:k]:
                continue
            # ambiguity word: a followed by b[k:]
            suffix = b[k:]
            prefix = a[: len(a) - k]
            left: PolyDict = {}
            for (tsrc, tword), c in tail_a.items():
                mono = (tsrc, tword + suffix)
                left[mono] = left.get(mono, Fraction(0)) + c
            right: PolyDict = {}
            for (tsrc, tword), c in tail_b.items():
                nsrc = self.asrc[prefix[0]] if prefix else tsrc
                mono = (nsrc, prefix + tword)
                right[mono] = right.get(mono, Fraction(0)) + c
            spoly = dict(left)
            for m, c in right.items():
                spoly[m] = spoly.get(m, Fraction(0)) - c
            if spoly:
                out.append(spoly)
        return out

    # -- basis --------------------------------------------------------------

    def irreducible_monomials(self) -> list[Mono]:
        if not self._completed:
            raise RuntimeError("complete() must run first")
        out: list[Mono] = []
        frontier: list[Mono] = []
        for v in range(len(self.vertices)):
            if v not in self.dead:
                mono = (v, ())
                out.append(mono)
                frontier.append(mono)
        while frontier:
            nxt: list[Mono] = []
            for mono in frontier:
                src, word = mono
                at = self.mono_tgt(mono)
                for a in range(len(self.arrow_names)):
                    if self.asrc[a] != at or self.atgt[a] in self.dead:
                        continue
                    new_word = word + (a,)
                    if self._suffix_reducible(new_word):
                        continue
                    if len(new_word) >= self.max_len:
                        raise HorizonExceededError((src, new_word), self.max_len)
                    new = (src, new_word)
                    out.append(new)
                    nxt.append(new)
            frontier = nxt
        return sorted(out, key=_mono_key)

    def _suffix_reducible(self, word: tuple[int, ...]) -> bool:
        n = len(word)
        for length in range(1, min(self.max_rule_len, n) + 1):
            if word[n - length :] in self.rules:
                return True
        return False


def _contains(haystack: tuple[int, ...], needle: tuple[int, ...]) -> bool:
    n, m = len(haystack), len(needle)
    return any(haystack[i : i + m] == needle for i in range(n - m + 1))


def _negate(poly: PolyDict) -> PolyDict:
    return {m: -c for m, c in poly.items()}


# ---------------------------------------------------------------------------
# brute-force oracle
# ---------------------------------------------------------------------------


def brute_force_graded_dims(pres: Presentation, horizon: int):
    """Quotient dimensions by explicit linear reduction inside a path window.

    Enumerates every path of length <= horizon (paths through a pure zero
    relation are dropped immediately), spans all products u * relation * v
    that fit in the window, and reduces.  Returns (total_dim, graded) with
    graded keyed by (source, target).  This is the independent check for the
    rewriting engine, adequate whenever the horizon comfortably exceeds the
    longest surviving path.
    """
    quiver = pres.quiver
    arrows = quiver.arrows
    aindex = {a.name: i for i, a in enumerate(arrows)}
    asrc = [quiver.vertices.index(a.src) for a in arrows]
    atgt = [quiver.vertices.index(a.tgt) for a in arrows]
    nv = len(quiver.vertices)

    forbidden: list[tuple[int, ...]] = []
    linear_rels: list[list[tuple[Fraction, int, tuple[int, ...]]]] = []
    for rel in pres.relations:
        terms = []
        for c, path in rel:
            if path and path[0] == "e":
                terms.append((frac(c), quiver.vertices.index(path[1]), ()))
            else:
                word = tuple(aindex[n] for n in path)
                terms.append((frac(c), asrc[word[0]], word))
        if len(terms) == 1:
            forbidden.append(terms[0][2])
        else:
            linear_rels.append(terms)

    def contains_forbidden(word):
        return any(_contains(word, f) for f in forbidden if f)

    # enumerate paths, pruning forbidden subwords
    paths: list[Mono] = [(v, ()) for v in range(nv)]
    frontier = list(paths)
    while frontier:
        nxt = []
        for src, word in frontier:
            at = atgt[word[-1]] if word else src
            for a in range(len(arrows)):
                if asrc[a] != at:
                    continue
                new_word = word + (a,)
                if len(new_word) > horizon:
                    continue
                if forbidden and any(
                    new_word[len(new_word) - len(f) :] == f for f in forbidden if f
                ):
                    continue
                mono = (src, new_word)
                paths.append(mono)
                nxt.append(mono)
        frontier = nxt
    paths.sort(key=_mono_key)
    index = {p: i for i, p in enumerate(paths)}

    def tgt_of(mono):
        src, word = mono
        return atgt[word[-1]] if word else src

    # group paths by (src, tgt) so reductions stay block-diagonal
    blocks: dict[tuple[int, int], list[int]] = {}
    for i, p in enumerate(paths):
        blocks.setdefault((p[0], tgt_of(p)), []).append(i)
    spans = {key: Subspace(len(ids)) for key, ids in blocks.items()}
    local = {key: {pid: j for j, pid in enumerate(ids)} for key, ids in blocks.items()}

    by_tgt: dict[int, list[Mono]] = {}
    by_src: dict[int, list[Mono]] = {}
    for p in paths:
        by_tgt.setdefault(tgt_of(p), []).append(p)
        by_src.setdefault(p[0], []).append(p)

    for terms in linear_rels:
        deg = min(len(w) for _, _, w in terms)
        rsrc = terms[0][1]
        rtgt = atgt[terms[0][2][-1]] if terms[0][2] else rsrc
        for u in by_tgt.get(rsrc, []):
            for v in by_src.get(rtgt, []):
                if len(u[1]) + deg + len(v[1]) > horizon:
                    continue
                entries = {}
                usable = True
                for c, tsrc, word in terms:
                    full = (u[0] if u[1] else tsrc, u[1] + word + v[1])
                    if contains_forbidden(full[1]):
                        continue
                    if len(full[1]) > horizon:
                        usable = False
                        break
                    pid = index[full]
                    entries[pid] = entries.get(pid, Fraction(0)) + c
                if not usable or not entries:
                    continue
                key = (u[0], tgt_of(v))
                row = [Fraction(0)] * len(blocks[key])
                for pid, c in entries.items():
                    row[local[key][pid]] = c
                spans[key].add(row)

    graded = {}
    total = 0
    for (s, t), ids in sorted(blocks.items()):
        dim = len(ids) - spans[(s, t)].dim
        if dim:
            graded[(quiver.vertices[s], quiver.vertices[t])] = dim
            total += dim
    return total, graded
