"""Indecomposable catalog and Krull-Schmidt coordinates.

For a Dynkin quiver the indecomposables biject with positive roots.  The
catalog holds one canonical matrix model per positive root, generated by a
deterministic chain of reflection functors from simples, so every run is
bit-reproducible.  Isoclasses are multisets of catalog labels; ``decompose``
inverts ``realize`` through Hom-dimension fingerprints.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import PrimeField
from .quiver import Quiver, QuiverError
from . import reps
from .reps import Representation, direct_sum, hom_dim, zero_rep


class CatalogError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class IndecLabel:
    """A canonical name for an indecomposable: its dimension vector.

    ``name`` is U(i,j) for type A intervals (external path positions) and
    V(x1,...,xn) otherwise.
    """

    dims: tuple[int, ...]
    name: str

    def __str__(self):
        return self.name


class Isoclass:
    """A multiset of indecomposable labels with multiplicities."""

    def __init__(self, counts):
        items = Counter()
        for label, mult in (counts.items() if isinstance(counts, dict) else counts):
            if mult < 0:
                raise CatalogError("negative multiplicity")
            if mult:
                items[label] += mult
        self.counts = dict(sorted(items.items()))

    def dims(self, n: int) -> tuple[int, ...]:
        d = [0] * n
        for label, mult in self.counts.items():
            for i, x in enumerate(label.dims):
                d[i] += mult * x
        return tuple(d)

    def __eq__(self, other):
        return isinstance(other, Isoclass) and self.counts == other.counts

    def __hash__(self):
        return hash(tuple(self.counts.items()))

    def __add__(self, other):
        c = Counter(self.counts)
        c.update(other.counts)
        return Isoclass(c)

    def __str__(self):
        if not self.counts:
            return "0"
        parts = []
        for label, mult in self.counts.items():
            parts.append(label.name if mult == 1 else f"{mult}*{label.name}")
        return " + ".join(parts)

    __repr__ = __str__


# -- positive roots (independent generator, used for validation) -----------

def positive_roots(q: Quiver) -> set[tuple[int, ...]]:
    """All positive roots of the underlying simply-laced tree diagram.

    Closure of the simple roots under simple reflections, keeping the
    positive ones.  Independent of any module-theoretic computation.
    """
    n = q.n
    adj = [[0] * n for _ in range(n)]
    for s, t in q.arrows:
        adj[s][t] = adj[t][s] = 1

    def reflect(v, k):
        out = list(v)
        out[k] = sum(adj[k][j] * v[j] for j in range(n)) - v[k]
        return tuple(out)

    roots = {tuple(1 if i == k else 0 for i in range(n)) for k in range(n)}
    frontier = set(roots)
    while frontier:
        new = set()
        for v in frontier:
            for k in range(n):
                w = reflect(v, k)
                if all(x >= 0 for x in w) and any(w) and w not in roots:
                    new.add(w)
        roots |= new
        frontier = new
    return roots


# -- catalog ----------------------------------------------------------------

def _admissible_sink_sequence(q: Quiver) -> list[int]:
    """A sink ordering: k_1 is a sink of Q, k_2 of the reflected quiver, etc.

    Deterministic (smallest sink first); one pass covers every vertex.
    """
    seq = []
    cur = q
    remaining = set(range(q.n))
    while remaining:
        sinks = sorted(v for v in remaining if cur.is_sink(v))
        if not sinks:
            raise QuiverError("no sink among remaining vertices (not acyclic?)")
        k = sinks[0]
        seq.append(k)
        remaining.discard(k)
        cur = cur.reversed_at(cur.name(k))
    return seq


class Catalog:
    """Canonical indecomposable models for a Dynkin quiver over F_p."""

    def __init__(self, quiver: Quiver, field: PrimeField, sink_sequence=None):
        if quiver.dynkin not in ("A", "D"):
            raise CatalogError("catalog requires a type A or D quiver")
        self.quiver = quiver
        self.field = field
        self.labels: list[IndecLabel] = []
        self.models: dict[IndecLabel, Representation] = {}
        self._build(sink_sequence)
        self._hom_matrix: np.ndarray | None = None
        self._order: list[int] | None = None

    # construction

    def _build(self, sink_sequence):
        q = self.quiver
        roots = positive_roots(q)
        base_seq = list(sink_sequence) if sink_sequence else _admissible_sink_sequence(q)
        if sorted(base_seq) != list(range(q.n)):
            raise CatalogError("sink sequence must enumerate every vertex once")
        n_roots = len(roots)
        found: dict[tuple[int, ...], Representation] = {}
        # quiver orientations along the periodic reflection word
        quivers = [q]
        seq: list[int] = []
        t = 0
        while len(found) < n_roots:
            k = base_seq[t % q.n]
            if t > 4 * n_roots:
                raise CatalogError("reflection word failed to exhaust the roots")
            if not quivers[-1].is_sink(k):
                raise CatalogError("sequence is not admissible (internal error)")
            # dim vector beta_t = s_{k_1} ... s_{k_{t-1}} (e_{k_t})
            beta = self._reflect_word(seq, self._unit(k))
            if all(x >= 0 for x in beta) and tuple(beta) in roots and tuple(beta) not in found:
                m = reps.simple(quivers[-1], self.field, k)
                for j in range(len(seq) - 1, -1, -1):
                    # k_j is a source of quivers[j+1]; reflect back toward Q
                    m = reps.reflection_functor(m, seq[j])
                    if m.quiver != quivers[j]:
                        raise CatalogError("reflection bookkeeping error")
                if m.dims != tuple(beta):
                    raise CatalogError("reflection functor produced a wrong dimension vector")
                found[tuple(beta)] = m
            seq.append(k)
            quivers.append(quivers[-1].reversed_at(quivers[-1].name(k)))
            t += 1
        for dims in sorted(found):
            label = self._label_for(dims)
            self.labels.append(label)
            self.models[label] = found[dims]
        self.labels.sort()

    def _unit(self, k: int):
        return [1 if i == k else 0 for i in range(self.quiver.n)]

    def _reflect_word(self, word, v):
        q = self.quiver
        adj = [[0] * q.n for _ in range(q.n)]
        for s, t in q.arrows:
            adj[s][t] = adj[t][s] = 1
        out = list(v)
        for k in reversed(word):
            out[k] = sum(adj[k][j] * out[j] for j in range(q.n)) - out[k]
        return out

    def _label_for(self, dims: tuple[int, ...]) -> IndecLabel:
        q = self.quiver
        if q.dynkin == "A":
            order = q.path_order()
            support = [pos for pos, v in enumerate(order) if dims[v]]
            i, j = support[0] + 1, support[-1] + 1
            return IndecLabel(dims, f"U({i},{j})")
        return IndecLabel(dims, "V(" + ",".join(str(x) for x in dims) + ")")

    # lookup helpers

    def label_by_dims(self, dims) -> IndecLabel:
        dims = tuple(dims)
        for lab in self.labels:
            if lab.dims == dims:
                return lab
        raise CatalogError(f"{dims} is not a positive root of this quiver")

    def label_by_name(self, name: str) -> IndecLabel:
        for lab in self.labels:
            if lab.name == name:
                return lab
        # U(i,j) names: also resolve through the path order
        m = re.fullmatch(r"U\((\d+),(\d+)\)", name.strip())
        if m and self.quiver.dynkin == "A":
            i, j = int(m.group(1)), int(m.group(2))
            if not 1 <= i <= j <= self.quiver.n:
                raise CatalogError(f"interval out of range: {name!r}")
            order = self.quiver.path_order()
            dims = [0] * self.quiver.n
            for pos in range(i - 1, j):
                dims[order[pos]] = 1
            return self.label_by_dims(dims)
        raise CatalogError(f"unknown indecomposable {name!r}")

    def simple_label(self, vertex: int) -> IndecLabel:
        return self.label_by_dims(self._unit(vertex))

    def projective_label(self, vertex: int) -> IndecLabel:
        return self.label_by_dims(reps.projective(self.quiver, self.field, vertex).dims)

    def injective_label(self, vertex: int) -> IndecLabel:
        return self.label_by_dims(reps.injective(self.quiver, self.field, vertex).dims)

    # Hom fingerprints

    def hom_matrix(self) -> np.ndarray:
        """H[a, b] = dim Hom(X_a, X_b) over the catalog, computed once."""
        if self._hom_matrix is None:
            n = len(self.labels)
            h = np.zeros((n, n), dtype=np.int64)
            for a, la in enumerate(self.labels):
                for b, lb in enumerate(self.labels):
                    h[a, b] = hom_dim(self.models[la], self.models[lb])
            self._hom_matrix = h
        return self._hom_matrix

    def _topological_order(self) -> list[int]:
        """Order the catalog so the Hom matrix becomes unitriangular."""
        if self._order is None:
            h = self.hom_matrix()
            n = len(self.labels)
            succ = {a: {b for b in range(n) if b != a and h[a, b] > 0} for a in range(n)}
            order: list[int] = []
            remaining = set(range(n))
            while remaining:
                free = sorted(a for a in remaining if not (succ[a] & remaining))
                if not free:
                    raise CatalogError("Hom cycle among indecomposables (not Dynkin?)")
                order.append(free[0])
                remaining.discard(free[0])
            order.reverse()  # sources first: hom only points forward
            self._order = order
        return self._order

    # realize / decompose

    def realize(self, iso: Isoclass) -> Representation:
        """Direct sum of catalog models with the isoclass multiplicities."""
        summands = []
        for label, mult in iso.counts.items():
            if label not in self.models:
                raise CatalogError(f"label {label} not in catalog")
            summands.extend([self.models[label]] * mult)
        if not summands:
            return zero_rep(self.quiver, self.field)
        return direct_sum(*summands)

    def fingerprint(self, m: Representation) -> np.ndarray:
        """f[a] = dim Hom(X_a, M) for every catalog indecomposable X_a."""
        return np.array([hom_dim(self.models[lab], m) for lab in self.labels], dtype=np.int64)

    def iso_fingerprint(self, iso: Isoclass) -> np.ndarray:
        """Fingerprint of ``realize(iso)`` by additivity; no matrices built."""
        h = self.hom_matrix()
        f = np.zeros(len(self.labels), dtype=np.int64)
        for label, mult in iso.counts.items():
            b = self.labels.index(label)
            f += mult * h[:, b]
        return f

    def dual_iso_fingerprint(self, iso: Isoclass) -> np.ndarray:
        """g[a] = dim Hom(M, X_a)."""
        h = self.hom_matrix()
        g = np.zeros(len(self.labels), dtype=np.int64)
        for label, mult in iso.counts.items():
            b = self.labels.index(label)
            g += mult * h[b, :]
        return g

    def decompose(self, m: Representation) -> Isoclass:
        """Krull-Schmidt coordinates of ``m`` via Hom fingerprints.

        Solves the unitriangular system f_X = sum_Y mult_Y * hom(X, Y); fails
        loudly if the solution is not a non-negative integer vector matching
        the fingerprint (the input is then not a sum of catalog models).
        """
        f = self.fingerprint(m)
        h = self.hom_matrix()
        order = self._topological_order()
        mult = np.zeros(len(self.labels), dtype=np.int64)
        for pos in range(len(order) - 1, -1, -1):
            a = order[pos]
            acc = f[a]
            for later in order[pos + 1 :]:
                acc -= mult[later] * h[a, later]
            mult[a] = acc
        if (mult < 0).any() or not np.array_equal(h @ mult, f):
            raise CatalogError(
                "representation does not decompose over the catalog at this prime"
            )
        iso = Isoclass({self.labels[a]: int(mult[a]) for a in range(len(self.labels))})
        if iso.dims(self.quiver.n) != m.dims:
            raise CatalogError("decomposition dimension mismatch (internal error)")
        return iso

    # text format

    def parse_isoclass(self, text: str) -> Isoclass:
        """Parse `rep: 2*U(1,1) + 1*U(1,2)` (the `rep:` prefix is optional)."""
        body = text.strip()
        if body.lower().startswith("rep:"):
            body = body[4:].strip()
        counts: Counter = Counter()
        if body in ("", "0"):
            return Isoclass(counts)
        for term in body.split("+"):
            term = term.strip()
            if "*" in term:
                mult_s, _, name = term.partition("*")
                mult = int(mult_s.strip())
            else:
                mult, name = 1, term
            counts[self.label_by_name(name.strip())] += mult
        return Isoclass(counts)

    def format_isoclass(self, iso: Isoclass) -> str:
        return f"rep: {iso}"


@lru_cache(maxsize=None)
def _cached_catalog(quiver: Quiver, p: int) -> Catalog:
    return Catalog(quiver, PrimeField(p))


def get_catalog(quiver: Quiver, p: int = 107) -> Catalog:
    """Shared read-only catalog for (quiver, prime); built once per pair."""
    return _cached_catalog(quiver, p)
