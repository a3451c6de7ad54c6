"""Representations of a tree quiver over a prime field.

A representation assigns a vector space F_p^{d_i} to each vertex and a
matrix of shape (d_{t(alpha)}, d_{s(alpha)}) to each arrow.  Morphisms are
vertex-wise matrices satisfying the commuting-square equations, and all
Hom/Ext dimensions come from the exact solver for that linear system.
"""

from __future__ import annotations

import numpy as np

from .linalg import PrimeField
from .quiver import Path, Quiver, QuiverError


class RepError(ValueError):
    pass


class Representation:
    """Vertex dimensions plus one matrix per arrow, over a fixed prime field."""

    def __init__(self, quiver: Quiver, field: PrimeField, dims, maps=None):
        self.quiver = quiver
        self.field = field
        self.dims = quiver.check_dimvector(dims)
        self.maps: list[np.ndarray] = []
        maps = maps if maps is not None else {}
        for a, (s, t) in enumerate(quiver.arrows):
            m = maps.get(a) if isinstance(maps, dict) else maps[a]
            if m is None:
                m = field.zeros(self.dims[t], self.dims[s])
            else:
                m = field.mat(m)
                if m.shape != (self.dims[t], self.dims[s]):
                    raise RepError(
                        f"arrow {a}: matrix shape {m.shape}, expected "
                        f"({self.dims[t]}, {self.dims[s]})"
                    )
            self.maps.append(m)

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def path_matrix(self, path: Path) -> np.ndarray:
        """Product of arrow matrices along a directed path."""
        q = self.quiver
        m = self.field.eye(self.dims[path.source])
        for a in path.arrows:
            m = self.field.mul(self.maps[a], m)
        return m

    def __repr__(self):
        return f"Representation(dims={self.dims}, p={self.field.p})"


class Morphism:
    """A vertex-wise collection of matrices phi_i : M_i -> N_i."""

    def __init__(self, source: Representation, target: Representation, blocks):
        if source.quiver is not target.quiver and source.quiver != target.quiver:
            raise RepError("morphism between representations of different quivers")
        if source.field != target.field:
            raise RepError("morphism between representations over different fields")
        self.source = source
        self.target = target
        self.blocks = [source.field.mat(b) for b in blocks]
        for i, b in enumerate(self.blocks):
            if b.shape != (target.dims[i], source.dims[i]):
                raise RepError(f"vertex {i}: block shape {b.shape} mismatched")

    def is_valid(self) -> bool:
        """Exact check of the commuting squares N_a phi_s = phi_t M_a."""
        f = self.source.field
        for a, (s, t) in enumerate(self.source.quiver.arrows):
            lhs = f.mul(self.target.maps[a], self.blocks[s])
            rhs = f.mul(self.blocks[t], self.source.maps[a])
            if not np.array_equal(lhs, rhs):
                return False
        return True


def zero_rep(quiver: Quiver, field: PrimeField) -> Representation:
    return Representation(quiver, field, [0] * quiver.n)


def simple(quiver: Quiver, field: PrimeField, vertex: int) -> Representation:
    """The simple S_i (``vertex`` is an internal index)."""
    dims = [0] * quiver.n
    dims[vertex] = 1
    return Representation(quiver, field, dims)


def _paths_from(quiver: Quiver, v: int) -> list[tuple[int, ...]]:
    """Arrow sequences of all directed paths starting at v, incl. the trivial one."""
    out = [()]
    stack = [(v, ())]
    while stack:
        cur, arrs = stack.pop()
        for a in sorted(quiver.arrows_out(cur)):
            out.append(arrs + (a,))
            stack.append((quiver.target(a), arrs + (a,)))
    out.sort()
    return out


def projective(quiver: Quiver, field: PrimeField, vertex: int) -> Representation:
    """The indecomposable projective P_i: basis given by paths starting at i."""
    paths = _paths_from(quiver, vertex)

    def endpoint(arrs):
        return quiver.target(arrs[-1]) if arrs else vertex

    by_vertex: list[list[tuple[int, ...]]] = [[] for _ in range(quiver.n)]
    for arrs in paths:
        by_vertex[endpoint(arrs)].append(arrs)
    dims = [len(b) for b in by_vertex]
    maps = {}
    for a, (s, t) in enumerate(quiver.arrows):
        m = field.zeros(dims[t], dims[s])
        for col, arrs in enumerate(by_vertex[s]):
            longer = arrs + (a,)
            if longer in by_vertex[t]:
                m[by_vertex[t].index(longer), col] = 1
        maps[a] = m
    return Representation(quiver, field, dims, maps)


def injective(quiver: Quiver, field: PrimeField, vertex: int) -> Representation:
    """The indecomposable injective I_i: basis given by paths ending at i."""
    opp = quiver.opposite()
    popp = projective(opp, field, vertex)
    # transport back: arrow a of quiver is arrow a of opp reversed
    maps = {a: popp.maps[a].T for a in range(len(quiver.arrows))}
    return Representation(quiver, field, popp.dims, maps)


def direct_sum(*reps: Representation) -> Representation:
    if not reps:
        raise RepError("empty direct sum needs an explicit quiver; use zero_rep")
    quiver, field = reps[0].quiver, reps[0].field
    for r in reps[1:]:
        if r.quiver != quiver or r.field != field:
            raise RepError("direct sum over mismatched quiver or field")
    dims = [sum(r.dims[i] for r in reps) for i in range(quiver.n)]
    maps = {}
    for a, (s, t) in enumerate(quiver.arrows):
        m = field.zeros(dims[t], dims[s])
        ro = co = 0
        for r in reps:
            m[ro : ro + r.dims[t], co : co + r.dims[s]] = r.maps[a]
            ro += r.dims[t]
            co += r.dims[s]
        maps[a] = m
    return Representation(quiver, field, dims, maps)


# -- Hom and Ext -----------------------------------------------------------

def _hom_system(m: Representation, n: Representation) -> np.ndarray:
    """Coefficient matrix of the commuting-square system.

    Unknowns: vec(phi_i) for all vertices (column-major per vertex block).
    One row block per arrow: N_a phi_s - phi_t M_a = 0.
    """
    q = m.quiver
    f = m.field
    offsets = []
    off = 0
    for i in range(q.n):
        offsets.append(off)
        off += m.dims[i] * n.dims[i]
    ncols = off
    blocks = []
    for a, (s, t) in enumerate(q.arrows):
        nrows = n.dims[t] * m.dims[s]
        row = np.zeros((nrows, ncols), dtype=np.int64)
        if nrows:
            # vec(N_a phi_s) = (I_{m_s} kron N_a) vec(phi_s)
            if m.dims[s] and n.dims[s]:
                row[:, offsets[s] : offsets[s] + m.dims[s] * n.dims[s]] = np.kron(
                    np.eye(m.dims[s], dtype=np.int64), n.maps[a]
                )
            # vec(phi_t M_a) = (M_a^T kron I_{n_t}) vec(phi_t)
            if m.dims[t] and n.dims[t]:
                row[:, offsets[t] : offsets[t] + m.dims[t] * n.dims[t]] -= np.kron(
                    m.maps[a].T, np.eye(n.dims[t], dtype=np.int64)
                )
        blocks.append(row % f.p)
    if not blocks:
        return np.zeros((0, ncols), dtype=np.int64)
    return np.concatenate(blocks, axis=0)


def hom_basis(m: Representation, n: Representation) -> list[Morphism]:
    """A basis of Hom_Q(M, N) as explicit morphisms."""
    if m.quiver != n.quiver or m.field != n.field:
        raise RepError("Hom between mismatched representations")
    f = m.field
    sys = _hom_system(m, n)
    ker = f.kernel_basis(sys)
    q = m.quiver
    out = []
    for k in range(ker.shape[1]):
        vec = ker[:, k]
        blocks = []
        off = 0
        for i in range(q.n):
            sz = m.dims[i] * n.dims[i]
            blocks.append(vec[off : off + sz].reshape(m.dims[i], n.dims[i]).T)
            off += sz
        mor = Morphism(m, n, blocks)
        assert mor.is_valid()
        out.append(mor)
    return out


def hom_dim(m: Representation, n: Representation) -> int:
    """dim Hom_Q(M, N), the nullity of the commuting-square system."""
    if m.quiver != n.quiver or m.field != n.field:
        raise RepError("Hom between mismatched representations")
    sys = _hom_system(m, n)
    return sys.shape[1] - m.field.rank(sys)


def ext1_dim(m: Representation, n: Representation) -> int:
    """dim Ext^1_Q(M, N): the corank of the same system.

    The commuting-square matrix is the middle map of the standard projective
    resolution of M applied to Hom(-, N), so its cokernel computes Ext^1.
    """
    if m.quiver != n.quiver or m.field != n.field:
        raise RepError("Ext between mismatched representations")
    sys = _hom_system(m, n)
    return sys.shape[0] - m.field.rank(sys)


def end_dim(m: Representation) -> int:
    return hom_dim(m, m)


def is_rigid(m: Representation) -> bool:
    """True iff Ext^1(M, M) = 0, i.e. the orbit of M is dense."""
    return ext1_dim(m, m) == 0


# -- kernels, cokernels, radical, socle ------------------------------------

def kernel_rep(phi: Morphism) -> tuple[Representation, Morphism]:
    """Vertex-wise kernel with induced maps, plus its inclusion."""
    if not phi.is_valid():
        raise RepError("kernel of a non-commuting collection of maps")
    return sub_representation(phi.source, [phi.source.field.kernel_basis(b) for b in phi.blocks])


def image_subrep(phi: Morphism) -> tuple[Representation, Morphism]:
    """Vertex-wise image inside the target, plus its inclusion."""
    if not phi.is_valid():
        raise RepError("image of a non-commuting collection of maps")
    return sub_representation(phi.target, [phi.target.field.image_basis(b) for b in phi.blocks])


def cokernel_rep(phi: Morphism) -> tuple[Representation, Morphism]:
    """Vertex-wise cokernel with induced maps, plus the projection from the target."""
    if not phi.is_valid():
        raise RepError("cokernel of a non-commuting collection of maps")
    n = phi.target
    f = n.field
    q = n.quiver
    projs = [f.quotient_projection(b) for b in phi.blocks]
    dims = [p.shape[0] for p in projs]
    maps = {}
    for a, (s, t) in enumerate(q.arrows):
        # induced map: solve proj_t N_a = C proj_s for C; proj_s is surjective
        rhs = f.mul(projs[t], n.maps[a])
        c = f.solve(projs[s].T, rhs.T)
        assert c is not None
        maps[a] = c.T if c.ndim == 2 else c.reshape(dims[t], dims[s])
    coker = Representation(q, f, dims, maps)
    pr = Morphism(n, coker, projs)
    assert pr.is_valid()
    return coker, pr


def sub_representation(m: Representation, bases) -> tuple[Representation, Morphism]:
    """The subrepresentation spanned vertex-wise by ``bases`` (columns).

    The spans must be arrow-stable; raises otherwise.
    """
    f = m.field
    q = m.quiver
    bases = [f.mat(b) for b in bases]
    dims = [b.shape[1] for b in bases]
    maps = {}
    for a, (s, t) in enumerate(q.arrows):
        img = f.mul(m.maps[a], bases[s])
        sol = f.solve(bases[t], img)
        if sol is None:
            raise RepError("spans are not arrow-stable")
        maps[a] = sol if sol.ndim == 2 else sol.reshape(dims[t], dims[s])
    sub = Representation(q, f, dims, maps)
    inc = Morphism(sub, m, bases)
    assert inc.is_valid()
    return sub, inc


def radical(m: Representation) -> tuple[Representation, Morphism]:
    """rad M: the subrepresentation generated by all arrow images."""
    f = m.field
    q = m.quiver
    bases = []
    for i in range(q.n):
        cols = [m.maps[a] for a in q.arrows_in(i)]
        stacked = np.concatenate(cols, axis=1) if cols else f.zeros(m.dims[i], 0)
        bases.append(f.image_basis(stacked))
    return sub_representation(m, bases)


def socle(m: Representation) -> tuple[Representation, Morphism]:
    """soc M: vertex-wise intersection of kernels of all outgoing maps."""
    f = m.field
    q = m.quiver
    bases = []
    for i in range(q.n):
        rows = [m.maps[a] for a in q.arrows_out(i)]
        stacked = np.concatenate(rows, axis=0) if rows else f.zeros(0, m.dims[i])
        bases.append(f.kernel_basis(stacked))
    return sub_representation(m, bases)


def top(m: Representation) -> tuple[Representation, Morphism]:
    """top M = M / rad M, with the projection from M."""
    _, inc = radical(m)
    return cokernel_rep(inc)


def projective_cover(m: Representation) -> tuple[Representation, Morphism]:
    """P(top M) together with a surjection onto M."""
    f = m.field
    q = m.quiver
    t, pr = top(m)
    summands = []
    gens: list[tuple[int, np.ndarray]] = []  # (vertex, generator in M_i)
    for i in range(q.n):
        if t.dims[i] == 0:
            continue
        # lift the quotient basis through the projection M_i -> top_i
        lift = f.solve(pr.blocks[i], f.eye(t.dims[i]))
        assert lift is not None
        for k in range(t.dims[i]):
            summands.append(projective(q, f, i))
            gens.append((i, lift[:, k]))
    if not summands:
        cover = zero_rep(q, f)
        return cover, Morphism(cover, m, [f.zeros(m.dims[i], 0) for i in range(q.n)])
    cover = direct_sum(*summands)
    blocks = [f.zeros(m.dims[i], cover.dims[i]) for i in range(q.n)]
    offsets = [0] * q.n
    for (i, gen), summand in zip(gens, summands):
        paths = _paths_from(q, i)
        by_vertex: list[list[tuple[int, ...]]] = [[] for _ in range(q.n)]
        for arrs in paths:
            end = q.target(arrs[-1]) if arrs else i
            by_vertex[end].append(arrs)
        for j in range(q.n):
            for col, arrs in enumerate(by_vertex[j]):
                vec = gen
                for a in arrs:
                    vec = f.mul(m.maps[a], vec.reshape(-1, 1)).ravel()
                blocks[j][:, offsets[j] + col] = vec
        for j in range(q.n):
            offsets[j] += summand.dims[j]
    phi = Morphism(cover, m, blocks)
    assert phi.is_valid()
    for i in range(q.n):
        if f.rank(blocks[i]) != m.dims[i]:
            raise RepError("projective cover is not surjective (internal error)")
    return cover, phi


def injective_hull(m: Representation) -> tuple[Representation, Morphism]:
    """I(soc M) together with an embedding of M."""
    f = m.field
    q = m.quiver
    s, inc = socle(m)
    summands = []
    functionals: list[tuple[int, np.ndarray]] = []  # (vertex, functional on M_i)
    for i in range(q.n):
        if s.dims[i] == 0:
            continue
        # extend the socle basis to a basis of M_i and take dual functionals
        basis = inc.blocks[i]
        full = basis
        for e in range(m.dims[i]):
            cand = f.zeros(m.dims[i], 1)
            cand[e, 0] = 1
            trial = np.concatenate([full, cand], axis=1)
            if f.rank(trial) > full.shape[1]:
                full = trial
            if full.shape[1] == m.dims[i]:
                break
        dual = f.mat(np.array(
            [[1 if r == c else 0 for c in range(m.dims[i])] for r in range(m.dims[i])]
        ))
        inv = f.solve(full, f.eye(m.dims[i]))
        assert inv is not None
        for k in range(s.dims[i]):
            summands.append(injective(q, f, i))
            functionals.append((i, inv[k]))  # k-th dual functional of the socle part
    if not summands:
        hull = zero_rep(q, f)
        return hull, Morphism(m, hull, [f.zeros(0, m.dims[i]) for i in range(q.n)])
    hull = direct_sum(*summands)
    blocks = [f.zeros(hull.dims[i], m.dims[i]) for i in range(q.n)]
    offsets = [0] * q.n
    for (i, func), summand in zip(functionals, summands):
        paths = _paths_from(q.opposite(), i)  # paths ending at i in Q
        by_vertex: list[list[tuple[int, ...]]] = [[] for _ in range(q.n)]
        for arrs in paths:
            end = q.opposite().target(arrs[-1]) if arrs else i
            by_vertex[end].append(arrs)
        for j in range(q.n):
            for row, arrs in enumerate(by_vertex[j]):
                # arrs is a path j -> i in Q (arrows reversed in opposite order)
                comp = f.eye(m.dims[j])
                for a in reversed(arrs):
                    comp = f.mul(m.maps[a], comp)
                blocks[j][offsets[j] + row] = f.mul(func.reshape(1, -1), comp).ravel()
        for j in range(q.n):
            offsets[j] += summand.dims[j]
    phi = Morphism(m, hull, blocks)
    assert phi.is_valid()
    for i in range(q.n):
        if f.rank(blocks[i]) != m.dims[i]:
            raise RepError("injective hull is not injective (internal error)")
    return hull, phi


# -- reflection functors ---------------------------------------------------

def reflection_functor(m: Representation, vertex: int) -> Representation:
    """BGP reflection of ``m`` at a sink or source ``vertex`` (internal index).

    At a sink the new space is the kernel of the assembled map into M_k; at
    a source it is the cokernel of the assembled map out of M_k.  The result
    lives over the quiver with all arrows at ``vertex`` reversed.
    """
    q = m.quiver
    f = m.field
    k = vertex
    new_q = q.reversed_at(q.name(k))
    if q.is_sink(k):
        arrows_in = sorted(q.arrows_in(k))
        src_dims = [m.dims[q.source(a)] for a in arrows_in]
        total = sum(src_dims)
        assembled = f.zeros(m.dims[k], total)
        off = 0
        for a, d in zip(arrows_in, src_dims):
            assembled[:, off : off + d] = m.maps[a]
            off += d
        ker = f.kernel_basis(assembled)
        dims = list(m.dims)
        dims[k] = ker.shape[1]
        maps = {}
        for a, (s, t) in enumerate(q.arrows):
            if t != k:
                maps[a] = m.maps[a]
        off = 0
        for a, d in zip(arrows_in, src_dims):
            # reversed arrow k -> s(a): project the kernel to the a-block
            maps[a] = ker[off : off + d, :]
            off += d
        return Representation(new_q, f, dims, maps)
    if q.is_source(k):
        arrows_out = sorted(q.arrows_out(k))
        tgt_dims = [m.dims[q.target(a)] for a in arrows_out]
        total = sum(tgt_dims)
        assembled = f.zeros(total, m.dims[k])
        off = 0
        for a, d in zip(arrows_out, tgt_dims):
            assembled[off : off + d, :] = m.maps[a]
            off += d
        proj = f.quotient_projection(f.image_basis(assembled))
        dims = list(m.dims)
        dims[k] = proj.shape[0]
        maps = {}
        for a, (s, t) in enumerate(q.arrows):
            if s != k:
                maps[a] = m.maps[a]
        off = 0
        for a, d in zip(arrows_out, tgt_dims):
            # reversed arrow t(a) -> k: include the block, then project
            inc = f.zeros(total, d)
            inc[off : off + d, :] = f.eye(d)
            maps[a] = f.mul(proj, inc)
            off += d
        return Representation(new_q, f, dims, maps)
    raise QuiverError(f"vertex {q.name(k)} is neither a sink nor a source")
