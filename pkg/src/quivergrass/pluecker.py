"""Plücker coordinates and the defining relations of a quiver Grassmannian.

For each vertex i the coordinates are the maximal minors D[i][J] of a basis
of the subspace U_i (columns J of size e_i, colex order).  The ideal is
generated by the classical Grassmannian exchange relations at each vertex
together with one bilinear family per arrow (or per path) coupling the
coordinates at its endpoints through the matrix of the representation map.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .linalg import PrimeField
from .quiver import Quiver
from .reps import Representation


class PlueckerError(ValueError):
    pass


@dataclass(frozen=True)
class PlueckerVariable:
    """The minor D[vertex][cols]; ``vertex`` is the external vertex name,
    ``cols`` a sorted tuple of 1-based column indices."""

    vertex: int
    cols: tuple[int, ...]

    def __str__(self):
        return f"D[{self.vertex}][{','.join(str(c) for c in self.cols)}]"


def _colex_key(cols):
    return tuple(sorted(cols, reverse=True))


class PlueckerRing:
    """The multihomogeneous coordinate ring's variable bookkeeping.

    Variables are grouped by vertex (in quiver order) and listed in colex
    order within each vertex.
    """

    def __init__(self, quiver: Quiver, d, e):
        self.quiver = quiver
        self.d = quiver.check_dimvector(d)
        self.e = quiver.check_dimvector(e)
        for i in range(quiver.n):
            if self.e[i] > self.d[i]:
                raise PlueckerError(f"e exceeds d at vertex {quiver.name(i)}")
        self.variables: list[PlueckerVariable] = []
        self.vertex_of: list[int] = []  # internal vertex index per variable
        self._index: dict[PlueckerVariable, int] = {}
        self.block: list[tuple[int, int]] = []  # [start, stop) per vertex
        for i in range(quiver.n):
            start = len(self.variables)
            subsets = sorted(
                itertools.combinations(range(1, self.d[i] + 1), self.e[i]),
                key=_colex_key,
            )
            for cols in subsets:
                var = PlueckerVariable(quiver.name(i), cols)
                self._index[var] = len(self.variables)
                self.variables.append(var)
                self.vertex_of.append(i)
            self.block.append((start, len(self.variables)))

    def __len__(self):
        return len(self.variables)

    def index(self, vertex_internal: int, cols) -> int:
        var = PlueckerVariable(self.quiver.name(vertex_internal), tuple(sorted(cols)))
        try:
            return self._index[var]
        except KeyError:
            raise PlueckerError(f"no variable {var}") from None

    def multidegree(self, mono: tuple[int, ...]) -> tuple[int, ...]:
        deg = [0] * self.quiver.n
        for v in mono:
            deg[self.vertex_of[v]] += 1
        return tuple(deg)


class MPoly:
    """Sparse polynomial with integer coefficients in the ring's variables.

    Monomials are sorted tuples of variable indices (with repetition).
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: PlueckerRing, coeffs: dict | None = None):
        self.ring = ring
        self.coeffs = {m: c for m, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def term(cls, ring, coeff: int, varidx: tuple[int, ...]):
        return cls(ring, {tuple(sorted(varidx)): int(coeff)})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, MPoly) and self.coeffs == other.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return MPoly(self.ring, out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) - c
        return MPoly(self.ring, out)

    def __neg__(self):
        return MPoly(self.ring, {m: -c for m, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return MPoly(self.ring, {m: c * other for m, c in self.coeffs.items()})
        out: dict = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = tuple(sorted(m1 + m2))
                out[m] = out.get(m, 0) + c1 * c2
        return MPoly(self.ring, out)

    __rmul__ = __mul__

    def scale_mod(self, p: int) -> "MPoly":
        return MPoly(self.ring, {m: c % p for m, c in self.coeffs.items()})

    def multidegree(self):
        degs = {self.ring.multidegree(m) for m in self.coeffs}
        if len(degs) > 1:
            raise PlueckerError("polynomial is not multihomogeneous")
        return next(iter(degs)) if degs else None

    def evaluate(self, coords, field: PrimeField) -> int:
        """Value mod p given per-variable coordinate values."""
        p = field.p
        total = 0
        for m, c in self.coeffs.items():
            v = c % p
            for idx in m:
                v = (v * coords[idx]) % p
            total = (total + v) % p
        return total

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for m in sorted(self.coeffs):
            c = self.coeffs[m]
            mono = "*".join(str(self.ring.variables[i]) for i in m) or "1"
            if not parts:
                sign = "-" if c < 0 else ""
            else:
                sign = " - " if c < 0 else " + "
            mag = abs(c)
            parts.append(f"{sign}{mono}" if mag == 1 and m else f"{sign}{mag}*{mono}")
        return "".join(parts)


def _normalized(poly: MPoly, p: int) -> tuple | None:
    """Canonical monic-mod-p form used to deduplicate scalar multiples."""
    items = sorted((m, c % p) for m, c in poly.coeffs.items() if c % p)
    if not items:
        return None
    lead = items[0][1]
    inv = pow(lead, p - 2, p)
    return tuple((m, (c * inv) % p) for m, c in items)


def grassmann_relations(ring: PlueckerRing, vertex: int) -> list[MPoly]:
    """Exchange quadrics of Gr(e_i, d_i) at one internal vertex index.

    Empty whenever e_i is 0, 1, d_i - 1 or d_i (the Grassmannian is then a
    projective space or a point and has no relations).
    """
    a, dv = ring.e[vertex], ring.d[vertex]
    if a in (0, 1) or a >= dv - 1:
        return []
    seen = set()
    out = []
    cols = range(1, dv + 1)
    for i_set in itertools.combinations(cols, a - 1):
        for j_set in itertools.combinations(cols, a + 1):
            poly = MPoly(ring)
            for pos, q in enumerate(j_set):
                if q in i_set:
                    continue
                v1 = ring.index(vertex, i_set + (q,))
                v2 = ring.index(vertex, tuple(x for x in j_set if x != q))
                # sorting-insertion sign of q into i_set
                ins = sum(1 for x in i_set if x > q)
                sign = (-1) ** (pos + ins)
                poly = poly + MPoly.term(ring, sign, (v1, v2))
            key = _normalized(poly, 2**31 - 1)
            if key and key not in seen:
                seen.add(key)
                out.append(poly)
    return out


def _bilinear_family(ring: PlueckerRing, s: int, t: int, mat: np.ndarray) -> list[MPoly]:
    """The relations R(pi, I, J) of one map ``mat``: vertex s -> vertex t.

    I runs over (e_s - 1)-subsets at s, J over (e_t + 1)-subsets at t; each
    relation is sum over p not in I, q in J of
    (-1)^(eps(p,I) + eps(q,J)) * mat[q,p] * D[s][I+p] * D[t][J-q].
    """
    es, et = ring.e[s], ring.e[t]
    ds, dt = ring.d[s], ring.d[t]
    out = []
    if es == 0 or et >= dt:
        return out
    for i_set in itertools.combinations(range(1, ds + 1), es - 1):
        for j_set in itertools.combinations(range(1, dt + 1), et + 1):
            poly = MPoly(ring)
            for p_col in range(1, ds + 1):
                if p_col in i_set:
                    continue
                v1 = ring.index(s, i_set + (p_col,))
                eps_p = sum(1 for x in i_set if x <= p_col)
                for q_col in j_set:
                    coeff = int(mat[q_col - 1, p_col - 1])
                    if coeff == 0:
                        continue
                    v2 = ring.index(t, tuple(x for x in j_set if x != q_col))
                    eps_q = sum(1 for x in j_set if x <= q_col)
                    sign = (-1) ** (eps_p + eps_q)
                    poly = poly + MPoly.term(ring, sign * coeff, (v1, v2))
            if poly:
                out.append(poly)
    return out


def arrow_relations(ring: PlueckerRing, m: Representation) -> list[MPoly]:
    """One bilinear family per arrow, coefficients lifted to signed integers."""
    f = m.field
    out = []
    for a, (s, t) in enumerate(m.quiver.arrows):
        mat = f.lift_signed(m.maps[a])
        out.extend(_bilinear_family(ring, s, t, mat))
    return out


def path_relations(ring: PlueckerRing, m: Representation) -> list[MPoly]:
    """One bilinear family per directed path (arrows included as length 1)."""
    f = m.field
    out = []
    for path in m.quiver.paths():
        mat = f.lift_signed(m.path_matrix(path))
        out.extend(_bilinear_family(ring, path.source, path.target, mat))
    return out


def ideal(m: Representation, e, *, scope: str = "arrows") -> tuple[PlueckerRing, list[MPoly]]:
    """Generators of the defining ideal of Gr_e(M) in Plücker coordinates.

    ``scope`` chooses the bilinear families: "arrows" or "paths".  The
    Grassmannian exchange relations at every vertex are always included.
    Generators that agree up to a scalar mod p are deduplicated.
    """
    ring = PlueckerRing(m.quiver, m.dims, e)
    gens: list[MPoly] = []
    for v in range(m.quiver.n):
        gens.extend(grassmann_relations(ring, v))
    if scope == "arrows":
        gens.extend(arrow_relations(ring, m))
    elif scope == "paths":
        gens.extend(path_relations(ring, m))
    else:
        raise PlueckerError(f"unknown scope {scope!r}")
    p = m.field.p
    seen = set()
    unique = []
    for g in gens:
        key = _normalized(g, p)
        if key is None or key in seen:
            continue
        seen.add(key)
        unique.append(g)
    return ring, unique


# -- evaluation at points ---------------------------------------------------

def pluecker_coordinates(ring: PlueckerRing, bases, field: PrimeField) -> dict[int, int]:
    """All minors D[i][J] of per-vertex basis matrices (shape e_i x d_i)."""
    coords: dict[int, int] = {}
    for i in range(ring.quiver.n):
        b = field.mat(bases[i]) if ring.e[i] else field.zeros(0, ring.d[i])
        if b.shape != (ring.e[i], ring.d[i]):
            raise PlueckerError(f"basis at vertex {ring.quiver.name(i)} has wrong shape")
        lo, hi = ring.block[i]
        for idx in range(lo, hi):
            cols = [c - 1 for c in ring.variables[idx].cols]
            # the empty minor (e_i = 0) is 1 by convention
            coords[idx] = field.det(b[:, cols]) if cols else 1
    return coords


# -- exports ----------------------------------------------------------------

def export_text(gens: list[MPoly]) -> str:
    return "\n".join(str(g) for g in gens) + "\n"


def _m2_name(var: PlueckerVariable) -> str:
    sep = "" if not var.cols or max(var.cols) < 10 else "x"
    return f"D{var.vertex}_{sep.join(str(c) for c in var.cols)}"


def export_macaulay2(ring: PlueckerRing, gens: list[MPoly], p: int) -> str:
    """A self-contained Macaulay2 script defining the multigraded ideal."""
    names = [_m2_name(v) for v in ring.variables]
    degs = []
    for idx in range(len(ring)):
        unit = [0] * ring.quiver.n
        unit[ring.vertex_of[idx]] = 1
        degs.append("{" + ",".join(str(x) for x in unit) + "}")
    lines = [
        f"-- quiver Grassmannian ideal, {len(gens)} generators",
        f"kk = ZZ/{p};",
        "R = kk[" + ", ".join(names)
        + ", Degrees => {" + ", ".join(degs) + "}];",
    ]
    polys = []
    for g in gens:
        terms = []
        for m_idx in sorted(g.coeffs):
            c = g.coeffs[m_idx]
            mono = "*".join(names[i] for i in m_idx) or "1"
            terms.append(f"({c})*{mono}")
        polys.append(" + ".join(terms))
    lines.append("I = ideal(\n  " + ",\n  ".join(polys) + "\n);")
    return "\n".join(lines) + "\n"
