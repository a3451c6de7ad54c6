"""The degeneration poset of isoclasses of a fixed dimension vector.

Ordering is the Bongartz criterion: M <= N (M degenerates to N) iff
dim Hom(M, X) <= dim Hom(N, X) for every indecomposable X.  Hom fingerprints
against the catalog are precomputed once per node, so poset construction is
integer comparisons only.
"""

from __future__ import annotations

import json

import numpy as np

from .catalog import Catalog, CatalogError, Isoclass
from .reps import is_rigid


class PosetError(ValueError):
    pass


DEFAULT_NODE_BUDGET = 20000


def enumerate_isoclasses(cat: Catalog, d, *, budget: int = DEFAULT_NODE_BUDGET) -> list[Isoclass]:
    """All multisets of catalog labels with dimension vectors summing to d.

    Bounded knapsack over the positive roots, deterministic order.
    """
    d = cat.quiver.check_dimvector(d)
    labels = cat.labels
    out: list[Isoclass] = []
    n = cat.quiver.n

    def rec(idx: int, remaining: tuple[int, ...], picked: list[tuple]):
        if len(out) > budget:
            raise PosetError(f"isoclass budget {budget} exceeded for d={d}")
        if not any(remaining):
            out.append(Isoclass(dict(picked)))
            return
        if idx == len(labels):
            return
        lab = labels[idx]
        max_mult = min(
            (rem // x for rem, x in zip(remaining, lab.dims) if x),
            default=0,
        )
        for mult in range(max_mult, -1, -1):
            rem2 = tuple(r - mult * x for r, x in zip(remaining, lab.dims))
            rec(idx + 1, rem2, picked + [(lab, mult)] if mult else picked)

    rec(0, d, [])
    return out


def degenerates_to(cat: Catalog, m: Isoclass, n: Isoclass) -> bool:
    """Bongartz: M <= N iff hom(M, X) <= hom(N, X) for all catalog X."""
    _check_same_dim(cat, m, n)
    return bool((cat.dual_iso_fingerprint(m) <= cat.dual_iso_fingerprint(n)).all())


def dual_degenerates_to(cat: Catalog, m: Isoclass, n: Isoclass) -> bool:
    """Equivalent dual form: hom(X, M) <= hom(X, N) for all catalog X."""
    _check_same_dim(cat, m, n)
    return bool((cat.iso_fingerprint(m) <= cat.iso_fingerprint(n)).all())


def _check_same_dim(cat: Catalog, m: Isoclass, n: Isoclass):
    if m.dims(cat.quiver.n) != n.dims(cat.quiver.n):
        raise PosetError("degeneration compares only equal dimension vectors")


def rank_order(cat: Catalog, m: Isoclass, n: Isoclass) -> bool:
    """Rank criterion, type A only: M <= N iff for every interval of the
    underlying line, the rank of the interval's source-to-sink block matrix
    in M is no smaller than in N.  For the equioriented orientation each
    interval carries a single path and this is the classical path-rank test.
    """
    q = cat.quiver
    if q.dynkin != "A":
        raise PosetError("rank criterion applies to type A only")
    _check_same_dim(cat, m, n)
    f = cat.field
    rm = cat.realize(m)
    rn = cat.realize(n)
    order = q.path_order()
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            seg = order[i:j + 1]
            if f.rank(_interval_matrix(rm, seg)) < f.rank(_interval_matrix(rn, seg)):
                return False
    return True


def _interval_matrix(rep, seg) -> np.ndarray:
    """Block matrix of all path maps inside the vertex interval `seg`,
    from the interval's local sources to its local sinks."""
    q = rep.quiver
    inside = set(seg)
    sources = [v for v in seg
               if all(q.source(a) not in inside for a in q.arrows_in(v))]
    sinks = [v for v in seg
             if all(q.target(a) not in inside for a in q.arrows_out(v))]
    rows = sum(rep.dims[w] for w in sinks)
    cols = sum(rep.dims[v] for v in sources)
    mat = np.zeros((rows, cols), dtype=np.int64)
    r0 = 0
    for w in sinks:
        c0 = 0
        for v in sources:
            path = q.path_between(v, w)
            if path is not None and all(x in inside for x in
                                        [q.source(a) for a in path.arrows] +
                                        [q.target(a) for a in path.arrows]):
                mat[r0:r0 + rep.dims[w], c0:c0 + rep.dims[v]] = rep.path_matrix(path)
            c0 += rep.dims[v]
        r0 += rep.dims[w]
    return mat


def generic_isoclass(cat: Catalog, d, *, budget: int = DEFAULT_NODE_BUDGET) -> Isoclass:
    """The unique rigid isoclass of dimension d (open dense orbit)."""
    d = cat.quiver.check_dimvector(d)
    euler_dd = cat.quiver.euler_form(d, d)
    hits = []
    for iso in enumerate_isoclasses(cat, d, budget=budget):
        # end_dim from the Hom matrix; rigid iff it equals <d, d>
        if _iso_end_dim(cat, iso) == euler_dd:
            hits.append(iso)
    if len(hits) != 1:
        raise PosetError(f"found {len(hits)} rigid isoclasses for d={d} (internal error)")
    assert is_rigid(cat.realize(hits[0]))
    return hits[0]


def _iso_end_dim(cat: Catalog, iso: Isoclass) -> int:
    h = cat.hom_matrix()
    labs = list(iso.counts)
    idx = [cat.labels.index(lab) for lab in labs]
    mult = np.array([iso.counts[lab] for lab in labs], dtype=np.int64)
    sub = h[np.ix_(idx, idx)]
    return int(mult @ sub @ mult)


class IsoclassPoset:
    """Degeneration poset of all isoclasses of one dimension vector."""

    def __init__(self, cat: Catalog, d, *, budget: int = DEFAULT_NODE_BUDGET):
        self.catalog = cat
        self.d = cat.quiver.check_dimvector(d)
        self.nodes = enumerate_isoclasses(cat, d, budget=budget)
        fps = np.array([cat.dual_iso_fingerprint(iso) for iso in self.nodes])
        n = len(self.nodes)
        # leq[i, j]: node i degenerates to node j
        self.leq = np.zeros((n, n), dtype=bool)
        for i in range(n):
            self.leq[i] = (fps[i][None, :] <= fps).all(axis=1)
        # antisymmetry: equal fingerprints would mean isomorphic nodes
        both = self.leq & self.leq.T
        if (both != np.eye(n, dtype=bool)).any():
            raise PosetError("distinct isoclasses with identical fingerprints")
        self.annotations: dict[Isoclass, dict] = {}

    def __len__(self):
        return len(self.nodes)

    def index(self, iso: Isoclass) -> int:
        return self.nodes.index(iso)

    def less_equal(self, m: Isoclass, n: Isoclass) -> bool:
        return bool(self.leq[self.index(m), self.index(n)])

    def minimal_element(self) -> Isoclass:
        mins = [self.nodes[i] for i in range(len(self)) if self.leq[i].all()]
        if len(mins) != 1:
            raise PosetError("poset lacks a unique minimal element (internal error)")
        return mins[0]

    def maximal_elements(self) -> list[Isoclass]:
        n = len(self)
        strict = self.leq & ~np.eye(n, dtype=bool)
        return [self.nodes[j] for j in range(n) if not strict[j].any()]

    def hasse(self) -> list[tuple[Isoclass, Isoclass]]:
        """Cover relations: the transitive reduction of the order."""
        n = len(self)
        strict = self.leq & ~np.eye(n, dtype=bool)
        covers = []
        for i in range(n):
            for j in range(n):
                if strict[i, j] and not (strict[i] & strict[:, j]).any():
                    covers.append((self.nodes[i], self.nodes[j]))
        return covers

    def lower_ideal(self, predicate) -> list[Isoclass]:
        """Nodes satisfying a predicate; errors unless downward closed."""
        member = [bool(predicate(x)) for x in self.nodes]
        n = len(self)
        for i in range(n):
            for j in range(n):
                if self.leq[i, j] and member[j] and not member[i]:
                    raise PosetError("predicate is not downward closed")
        return [x for x, ok in zip(self.nodes, member) if ok]

    def sinks(self, subset) -> list[Isoclass]:
        """Maximal elements of a sub-poset given as a node collection."""
        sub = [self.index(x) for x in subset]
        out = []
        for j in sub:
            if not any(i != j and self.leq[j, i] for i in sub):
                out.append(self.nodes[j])
        return out

    # -- exports -----------------------------------------------------------

    def to_json(self) -> str:
        data = {
            "dimension_vector": list(self.d),
            "nodes": [str(x) for x in self.nodes],
            "hasse": [[str(a), str(b)] for a, b in self.hasse()],
            "annotations": {
                str(x): ann for x, ann in sorted(
                    self.annotations.items(), key=lambda kv: str(kv[0])
                )
            },
        }
        return json.dumps(data, indent=2, sort_keys=True)

    def to_dot(self, color_classes: dict[str, list[Isoclass]] | None = None) -> str:
        """DOT digraph with Hasse edges, minimal element on top.

        ``color_classes`` maps a fill color to the nodes it marks; later
        entries win on overlap.
        """
        colors: dict[Isoclass, str] = {}
        for color, members in (color_classes or {}).items():
            for x in members:
                colors[x] = color
        lines = ["digraph degeneration {", '  rankdir="TB";', '  node [shape=box];']
        for x in self.nodes:
            attrs = [f'label="{x}"']
            if x in colors:
                attrs.append(f'style=filled fillcolor="{colors[x]}"')
            lines.append(f'  "{x}" [{" ".join(attrs)}];')
        for a, b in self.hasse():
            lines.append(f'  "{a}" -> "{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_poset(cat: Catalog, d, *, budget: int = DEFAULT_NODE_BUDGET) -> IsoclassPoset:
    return IsoclassPoset(cat, d, budget=budget)
