"""Exact point counts of quiver Grassmannians over prime fields.

``count_points`` runs a tree dynamic program that eliminates leaves with
closed-form subspace counts where possible; ``brute_force_count`` is the
slow independent oracle.  Counts at several primes interpolate to an exact
rational counting polynomial whose degree and leading coefficient classify
the variety (dimension, number of top-dimensional components).
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from .linalg import PrimeField, gaussian_binomial
from .quiver import Quiver
from .reps import Representation


class CountError(ValueError):
    pass


DEFAULT_ENUM_BUDGET = 6_000_000
DEFAULT_PAIR_BUDGET = 30_000_000
BRUTE_BUDGET = 10_000_000
_CHUNK = 200_000


class SubspaceEnum:
    """All e-dimensional subspaces of F_p^d as canonical rref bases.

    ``bases`` has shape (N, e, d); each subspace appears exactly once.
    Rows are grouped into contiguous blocks sharing one pivot-column
    pattern (``blocks`` lists (start, stop, pivots)), which downstream rank
    computations exploit: the basis rows are already in echelon form.
    """

    def __init__(self, e: int, d: int, p: int, *, budget: int = DEFAULT_ENUM_BUDGET):
        if not (0 <= e <= d):
            raise CountError(f"subspace dimension {e} out of range for ambient {d}")
        self.e, self.d, self.p = e, d, p
        total = gaussian_binomial(d, e, p)
        if total > budget:
            raise CountError(f"enumeration budget exceeded: {total} subspaces of Gr({e},{d}) at p={p}")
        self.size = int(total)
        dtype = np.int8 if p < 128 else np.int16
        chunks = []
        self.blocks: list[tuple[int, int, tuple[int, ...]]] = []
        pos = 0
        for pivots in itertools.combinations(range(d), e):
            free = [
                (i, j)
                for i in range(e)
                for j in range(pivots[i] + 1, d)
                if j not in pivots
            ]
            count = p ** len(free)
            block = np.zeros((count, e, d), dtype=dtype)
            for i, c in enumerate(pivots):
                block[:, i, c] = 1
            if free:
                digits = np.arange(count)
                for k, (i, j) in enumerate(free):
                    block[:, i, j] = (digits // p**k) % p
            chunks.append(block)
            self.blocks.append((pos, pos + count, pivots))
            pos += count
        self.bases = (
            np.concatenate(chunks, axis=0) if chunks else np.zeros((1, 0, d), dtype=dtype)
        )
        if not chunks:
            self.blocks = [(0, 1, ())]
        assert self.bases.shape[0] == self.size


@functools.lru_cache(maxsize=16)
def _cached_enum(e: int, d: int, p: int, budget: int) -> SubspaceEnum:
    return SubspaceEnum(e, d, p, budget=budget)


def enumerate_subspaces(e: int, d: int, p: int, *, budget: int = DEFAULT_ENUM_BUDGET) -> SubspaceEnum:
    return _cached_enum(e, d, p, budget)


def _sum_dims_with_fixed(en: SubspaceEnum, w: np.ndarray, f: PrimeField) -> np.ndarray:
    """dim(U + rowspace(w)) for every subspace U in the enumeration.

    Exploits the rref structure: reducing the fixed rows ``w`` by the pivot
    rows of each basis costs one small matrix product per block, and the
    leftover rank is computed on the non-pivot columns only.
    """
    p = f.p
    k, d = w.shape
    e = en.e
    out = np.empty(en.size, dtype=np.int64)
    if k == 0 or e == d:
        out[:] = e
        return out
    # products of two entries plus a length-e sum must not overflow
    dtype = np.int32 if p < 10_000 else np.int64
    w = w.astype(dtype)
    for start, stop, pivots in en.blocks:
        nonpiv = [c for c in range(d) if c not in pivots]
        w_piv = w[:, pivots]
        w_rest = w[:, nonpiv]
        for lo in range(start, stop, _CHUNK):
            hi = min(lo + _CHUNK, stop)
            # the pivot columns of an rref basis form the identity, so only
            # the non-pivot columns of the reduced rows can be nonzero
            b = en.bases[lo:hi, :, :][:, :, nonpiv].astype(dtype)
            rest = (w_rest[None, :, :] - np.einsum("ke,nef->nkf", w_piv, b)) % p
            if rest.shape[2] == 1:
                out[lo:hi] = e + (rest[:, :, 0] != 0).any(axis=1)
            else:
                out[lo:hi] = e + f.batched_rank(rest.astype(np.int64))
    return out


def _gauss_table(p: int, nmax: int) -> list[list[int]]:
    return [
        [gaussian_binomial(n, k, p) if k <= n else 0 for k in range(nmax + 2)]
        for n in range(nmax + 1)
    ]


class _Coded:
    """A per-subspace weight function with few distinct (big-int) values.

    ``codes`` maps each subspace index to an entry of ``values``; keeping
    big integers out of the bulk arrays makes the final reduction cheap.
    """

    __slots__ = ("codes", "values")

    def __init__(self, codes: np.ndarray, values: list):
        self.codes = codes
        self.values = values

    def to_object(self) -> np.ndarray:
        table = np.empty(len(self.values), dtype=object)
        for i, v in enumerate(self.values):
            table[i] = v
        return table[self.codes]

    @staticmethod
    def combine_and_sum(msgs: list["_Coded"]) -> int:
        """Sum over subspaces of the product of the message values."""
        code = np.zeros_like(msgs[0].codes)
        radix = 1
        for m in msgs:
            code = code + radix * m.codes
            radix *= len(m.values)
        uniq, counts = np.unique(code, return_counts=True)
        total = 0
        for u, c in zip(uniq.tolist(), counts.tolist()):
            val = 1
            rest = u
            for m in msgs:
                rest, digit = divmod(rest, len(m.values))
                val *= m.values[digit]
            total += int(c) * val
        return total

    @staticmethod
    def combine_to_object(msgs: list) -> np.ndarray:
        out = None
        for m in msgs:
            arr = m.to_object() if isinstance(m, _Coded) else m
            out = arr if out is None else out * arr
        return out


def count_points(m: Representation, e, p: int, *,
                 enum_budget: int = DEFAULT_ENUM_BUDGET,
                 pair_budget: int = DEFAULT_PAIR_BUDGET) -> int:
    """|Gr_e(M)(F_p)|: tuples of subspaces U_i with M_a(U_{s(a)}) in U_{t(a)}."""
    q = m.quiver
    e = q.check_dimvector(e)
    for i in range(q.n):
        if e[i] > m.dims[i]:
            raise CountError(f"e_{i} exceeds d_{i}")
    f = PrimeField(p)
    maps = [np.asarray(mat, dtype=np.int64) % p for mat in m.maps]
    gauss = _gauss_table(p, max(m.dims, default=0))
    adj = q.neighbors()

    if q.n == 1:
        return int(gaussian_binomial(m.dims[0], e[0], p))

    root = _choose_root(q, m.dims, e, p)

    def enum(v: int) -> SubspaceEnum:
        return enumerate_subspaces(e[v], m.dims[v], p, budget=enum_budget)

    def closed_message(child: int, v: int) -> _Coded:
        """Message of an unweighted leaf ``child`` into ``v``, per U_v."""
        a = _edge_arrow(q, child, v)
        ev = enum(v)
        if q.source(a) == child:  # arrow child -> v, map A: M_child -> M_v
            # dim of the preimage of U under A, then count subspaces inside
            dim_sum = _sum_dims_with_fixed(ev, maps[a].T, f)
            dpre = m.dims[child] - dim_sum + e[v]
            values = [gauss[n][e[child]] if 0 <= n <= m.dims[child] else 0
                      for n in range(m.dims[child] + 1)]
            return _Coded(dpre, values)
        # arrow v -> child, map B: M_v -> M_c: count U_c containing B(U_v)
        B = maps[a]
        if e[v] == 0:
            r = np.zeros(ev.size, dtype=np.int64)
        else:
            r = np.empty(ev.size, dtype=np.int64)
            for lo in range(0, ev.size, _CHUNK):
                hi = min(lo + _CHUNK, ev.size)
                bu = ev.bases[lo:hi].astype(np.int64)
                prod = np.einsum("nij,kj->nik", bu, B) % p
                r[lo:hi] = f.batched_rank(prod)
        dc, ec = m.dims[child], e[child]
        values = [gauss[dc - rr][ec - rr] if rr <= ec else 0
                  for rr in range(min(e[v], dc) + 1)]
        return _Coded(r, values)

    def pair_message(child: int, v: int, w_child: np.ndarray) -> np.ndarray:
        """Fallback: explicit containment sum for a weighted child."""
        a = _edge_arrow(q, child, v)
        ec, ev = enum(child), enum(v)
        if ec.size * ev.size > pair_budget:
            raise CountError(
                f"pair budget exceeded at edge {q.name(child)}-{q.name(v)}: "
                f"{ec.size} x {ev.size}"
            )
        out = np.zeros(ev.size, dtype=object)
        bc = ec.bases.astype(np.int64)
        step = max(1, _CHUNK // max(1, ec.size))
        for lo in range(0, ev.size, step):
            hi = min(lo + step, ev.size)
            bv = ev.bases[lo:hi].astype(np.int64)
            if q.source(a) == child:
                img = (bc @ maps[a].T) % p  # (Nc, e_c, d_v)
                comp = _containment(f, img, bv, e[v])
            else:
                img = (bv @ maps[a].T) % p  # (chunk, e_v, d_child)
                comp = _containment(f, img, bc, e[child]).T
            # comp[x, y]: U_c[y] compatible with U_v[lo + x]
            for x in range(hi - lo):
                out[lo + x] = sum(
                    int(wv) for wv, okv in zip(w_child, comp[x]) if okv
                )
        return out

    def subtree(v: int, parent: int):
        """Messages into v from its subtree: list of _Coded / object arrays,
        or None when v is a leaf of the rooted tree."""
        children = [w for w in adj[v] if w != parent]
        if not children:
            return None
        msgs = []
        for c in children:
            below = subtree(c, v)
            if below is None:
                msgs.append(closed_message(c, v))
            else:
                msgs.append(pair_message(c, v, _Coded.combine_to_object(below)))
        return msgs

    msgs = subtree(root, -1)
    if msgs is None:
        return int(gaussian_binomial(m.dims[root], e[root], p))
    if all(isinstance(x, _Coded) for x in msgs):
        return _Coded.combine_and_sum(msgs)
    return int(sum(_Coded.combine_to_object(msgs)))


def _edge_arrow(q: Quiver, u: int, v: int) -> int:
    for a, (s, t) in enumerate(q.arrows):
        if {s, t} == {u, v}:
            return a
    raise CountError("no arrow between adjacent vertices (internal error)")


def _containment(f: PrimeField, vecs: np.ndarray, spaces: np.ndarray, e_space: int) -> np.ndarray:
    """contained[x, y]: rows of vecs[y] all lie in the span of spaces[x].

    vecs: (Ny, r, d); spaces: (Nx, e, d).  Returns (Nx, Ny) bool.
    """
    nx = spaces.shape[0]
    ny, r, d = vecs.shape
    out = np.zeros((nx, ny), dtype=bool)
    for x in range(nx):
        stacked = np.concatenate(
            [np.broadcast_to(spaces[x][None, :, :], (ny, e_space, d)), vecs], axis=1
        )
        out[x] = f.batched_rank(stacked) == e_space
    return out


def _choose_root(q: Quiver, d, e, p: int) -> int:
    """Root minimizing the estimated DP cost (pair messages dominate)."""
    adj = q.neighbors()

    def cost(root: int) -> int:
        total = 0

        def walk(v, parent):
            nonlocal total
            children = [w for w in adj[v] if w != parent]
            size_v = gaussian_binomial(d[v], e[v], p)
            for c in children:
                sub_heavy = walk(c, v)
                if sub_heavy:
                    total += size_v * int(gaussian_binomial(d[c], e[c], p))
                else:
                    total += size_v
            return bool(children)

        walk(root, -1)
        return total

    return min(range(q.n), key=lambda v: (cost(v), v))


def brute_force_count(m: Representation, e, p: int, *, budget: int = BRUTE_BUDGET) -> int:
    """Ground-truth oracle: full product enumeration with containment checks."""
    q = m.quiver
    e = q.check_dimvector(e)
    f = PrimeField(p)
    enums = [SubspaceEnum(e[i], m.dims[i], p) for i in range(q.n)]
    total = 1
    for en in enums:
        total *= en.size
    if total > budget:
        raise CountError(f"brute-force budget exceeded: {total} tuples")
    maps = [np.asarray(mat, dtype=np.int64) % p for mat in m.maps]
    # per-arrow compatibility tables from unvectorized membership solves
    comp = []
    for a, (s, t) in enumerate(q.arrows):
        table = np.zeros((enums[s].size, enums[t].size), dtype=bool)
        for i in range(enums[s].size):
            img = (maps[a] @ enums[s].bases[i].astype(np.int64).T) % p
            for j in range(enums[t].size):
                basis_t = enums[t].bases[j].astype(np.int64).T
                table[i, j] = f.solve(basis_t, img) is not None
        comp.append(table)
    count = 0
    for combo in itertools.product(*[range(en.size) for en in enums]):
        if all(comp[a][combo[s], combo[t]] for a, (s, t) in enumerate(q.arrows)):
            count += 1
    return count


# -- interpolation and classification --------------------------------------

@dataclass
class CountingPolynomial:
    """Exact rational polynomial in q, coefficients ascending by degree."""

    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            term = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if c == 1 and k > 0:
                parts.append(term)
            elif c == -1 and k > 0:
                parts.append(f"-{term}")
            else:
                parts.append(f"{c}{'*' if k else ''}{term}")
        return " + ".join(parts).replace("+ -", "- ") or "0"


def interpolate(nodes, *, heldout: int = 2) -> tuple[CountingPolynomial, bool]:
    """Newton interpolation through (p, count) nodes over exact rationals.

    Returns (polynomial, consistent).  ``consistent`` requires at least
    ``heldout`` effective spare nodes (vanishing top divided differences),
    integer coefficients and a positive integer leading coefficient.
    """
    pts = [(Fraction(p), Fraction(c)) for p, c in nodes]
    if len(set(x for x, _ in pts)) != len(pts):
        raise CountError("interpolation nodes must be distinct")
    if not pts:
        raise CountError("no interpolation nodes")
    xs = [x for x, _ in pts]
    divided = [y for _, y in pts]
    # divided[j] becomes f[x_0..x_j]
    for level in range(1, len(pts)):
        for j in range(len(pts) - 1, level - 1, -1):
            divided[j] = (divided[j] - divided[j - 1]) / (xs[j] - xs[j - level])
    deg = max((j for j, c in enumerate(divided) if c != 0), default=0)
    # expand Newton form into monomial coefficients
    coeffs = [Fraction(0)] * (deg + 1)
    basis = [Fraction(1)]  # product (x - x_0)...(x - x_{j-1})
    for j in range(deg + 1):
        for k, b in enumerate(basis):
            coeffs[k] += divided[j] * b
        new_basis = [Fraction(0)] * (len(basis) + 1)
        for k, b in enumerate(basis):
            new_basis[k] -= xs[j] * b
            new_basis[k + 1] += b
        basis = new_basis
    poly = CountingPolynomial(tuple(coeffs))
    spare = len(pts) - (deg + 1)
    consistent = (
        spare >= heldout
        and poly.is_integral()
        and poly.leading > 0
        and poly.leading.denominator == 1
    )
    return poly, consistent


@dataclass
class Classification:
    """Dimension and top-component count read off the counting polynomial."""

    dimension: int
    top_count: int
    polynomial: CountingPolynomial
    consistent: bool
    method: str
    counts: dict = dc_field(default_factory=dict)

    def to_json(self, isoclass: str = "") -> str:
        return json.dumps(self.to_record(isoclass), sort_keys=True)

    def to_record(self, isoclass: str = "") -> dict:
        return {
            "isoclass": isoclass,
            "dim": self.dimension,
            "top_components": self.top_count,
            "poly": [str(c) for c in self.polynomial.coeffs],
            "consistent": self.consistent,
            "method": self.method,
            "primes": sorted(self.counts),
        }


def _primes_from(start: int = 2):
    from .linalg import is_prime

    p = start
    while True:
        if is_prime(p):
            yield p
        p += 1


def classify(m_for_prime, e, *, heldout: int = 2, max_prime: int = 101,
             enum_budget: int = DEFAULT_ENUM_BUDGET,
             pair_budget: int = DEFAULT_PAIR_BUDGET,
             method: str = "dp") -> Classification:
    """Classify a quiver Grassmannian by adaptive interpolation.

    ``m_for_prime`` is a callable p -> Representation over F_p (the same
    module realized at each interpolation prime); primes are consumed from
    2 upward until the interpolant is consistent or ``max_prime`` is hit.
    """
    counts: dict[int, int] = {}
    poly = None
    consistent = False
    ambient = None
    for p in _primes_from(2):
        if p > max_prime:
            break
        m = m_for_prime(p)
        if ambient is None:
            d = m.dims
            ev = m.quiver.check_dimvector(e)
            ambient = sum(x * (y - x) for x, y in zip(ev, d))
        counts[p] = count_points(m, e, p, enum_budget=enum_budget, pair_budget=pair_budget)
        if len(counts) >= heldout + 1:
            poly, consistent = interpolate(sorted(counts.items()), heldout=heldout)
            if consistent and poly.degree <= ambient:
                break
    if poly is None:
        poly, consistent = interpolate(sorted(counts.items()), heldout=heldout)
    if ambient is not None and poly.degree > ambient:
        consistent = False
    return Classification(
        dimension=poly.degree,
        top_count=int(poly.leading) if poly.leading.denominator == 1 else 0,
        polynomial=poly,
        consistent=consistent,
        method=method,
        counts=counts,
    )
