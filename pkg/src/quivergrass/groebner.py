"""Buchberger's algorithm over F_p for the multihomogeneous Plücker ideals.

Monomial order is graded reverse lexicographic; the variable order is the
ring's own (vertex-major, colex within a vertex) with the first variable
largest.  Ideals here are small enough (tens of variables, quadric
generators) that a careful dense-exponent implementation is fast enough.
"""

from __future__ import annotations

import itertools
import json

from .pluecker import MPoly, PlueckerRing


class GroebnerError(ValueError):
    pass


DEFAULT_PAIR_BUDGET = 200_000


def _grevlex_key(mono: tuple[int, ...]):
    # first listed variable is largest; standard grevlex tie-break
    return (sum(mono), tuple(-x for x in reversed(mono)))


class GPoly:
    """Polynomial with F_p coefficients on dense exponent-tuple monomials."""

    __slots__ = ("coeffs", "lead")

    def __init__(self, coeffs: dict, p: int):
        self.coeffs = {m: c % p for m, c in coeffs.items() if c % p}
        self.lead = max(self.coeffs, key=_grevlex_key) if self.coeffs else None

    def __bool__(self):
        return bool(self.coeffs)

    @classmethod
    def from_mpoly(cls, f: MPoly, nvars: int, p: int) -> "GPoly":
        out: dict = {}
        for mono, c in f.coeffs.items():
            exps = [0] * nvars
            for idx in mono:
                exps[idx] += 1
            key = tuple(exps)
            out[key] = out.get(key, 0) + c
        return cls(out, p)


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _mono_div(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def normal_form(f: GPoly, basis: list[GPoly], p: int) -> GPoly:
    """Remainder of f on division by the basis (monomial order above)."""
    work = dict(f.coeffs)
    remainder: dict = {}
    while work:
        m = max(work, key=_grevlex_key)
        c = work[m] % p
        if not c:
            del work[m]
            continue
        for g in basis:
            if g.lead is not None and _divides(g.lead, m):
                shift = _mono_div(m, g.lead)
                factor = (c * pow(g.coeffs[g.lead], p - 2, p)) % p
                for gm, gc in g.coeffs.items():
                    key = _mono_mul(gm, shift)
                    val = (work.get(key, 0) - factor * gc) % p
                    if val:
                        work[key] = val
                    else:
                        work.pop(key, None)
                break
        else:
            remainder[m] = c
            del work[m]
    return GPoly(remainder, p)


def buchberger(gens: list[GPoly], p: int, *, max_degree: int | None = None,
               pair_budget: int = DEFAULT_PAIR_BUDGET) -> list[GPoly]:
    """A reduced Gröbner basis; with ``max_degree`` set, a degree-truncated
    basis whose leading terms are correct in all total degrees <= max_degree.

    S-pairs are processed in increasing lcm degree so truncation is sound.
    Raises GroebnerError when the pair budget is exhausted.
    """
    import heapq

    basis = [g for g in gens if g]
    heap = [
        (sum(_lcm(basis[i].lead, basis[j].lead)), i, j)
        for i in range(len(basis))
        for j in range(i)
    ]
    heapq.heapify(heap)
    processed = 0
    while heap:
        processed += 1
        if processed > pair_budget:
            raise GroebnerError(f"S-pair budget {pair_budget} exhausted")
        _, i, j = heapq.heappop(heap)
        gi, gj = basis[i], basis[j]
        lcm = _lcm(gi.lead, gj.lead)
        if max_degree is not None and sum(lcm) > max_degree:
            continue
        if lcm == _mono_mul(gi.lead, gj.lead):
            continue  # coprime leading terms: S-polynomial reduces to zero
        ci = pow(gi.coeffs[gi.lead], p - 2, p)
        cj = pow(gj.coeffs[gj.lead], p - 2, p)
        s: dict = {}
        for m, c in gi.coeffs.items():
            key = _mono_mul(m, _mono_div(lcm, gi.lead))
            s[key] = (s.get(key, 0) + c * ci) % p
        for m, c in gj.coeffs.items():
            key = _mono_mul(m, _mono_div(lcm, gj.lead))
            s[key] = (s.get(key, 0) - c * cj) % p
        rem = normal_form(GPoly(s, p), basis, p)
        if rem:
            k = len(basis)
            basis.append(rem)
            for t in range(k):
                heapq.heappush(
                    heap, (sum(_lcm(rem.lead, basis[t].lead)), k, t))
    return interreduce(basis, p)


def interreduce(basis: list[GPoly], p: int) -> list[GPoly]:
    """Monic, mutually reduced basis (unique for a fixed monomial order)."""
    # drop redundant leading terms
    kept: list[GPoly] = []
    for g in sorted(basis, key=lambda g: _grevlex_key(g.lead)):
        if not any(_divides(h.lead, g.lead) for h in kept):
            kept.append(g)
    out = []
    for i, g in enumerate(kept):
        others = kept[:i] + kept[i + 1:]
        r = normal_form(g, others, p)
        if r:
            inv = pow(r.coeffs[r.lead], p - 2, p)
            out.append(GPoly({m: c * inv for m, c in r.coeffs.items()}, p))
    out.sort(key=lambda g: _grevlex_key(g.lead))
    return out


def groebner_basis(ring: PlueckerRing, gens: list[MPoly], p: int, *,
                   max_degree: int | None = None,
                   pair_budget: int = DEFAULT_PAIR_BUDGET) -> list[GPoly]:
    nvars = len(ring)
    return buchberger([GPoly.from_mpoly(g, nvars, p) for g in gens], p,
                      max_degree=max_degree, pair_budget=pair_budget)


# -- invariants of the leading-term ideal -----------------------------------

def krull_dimension(basis: list[GPoly], nvars: int) -> int:
    """Krull dimension of the quotient by the basis's leading-term ideal.

    Equals the largest size of a variable subset containing no leading-term
    support; computed by branch and bound on a minimal hitting set.
    """
    supports = []
    for g in basis:
        sup = frozenset(i for i, x in enumerate(g.lead) if x)
        supports.append(sup)
    # minimize the number of excluded variables hitting every support
    supports = [s for s in supports if s]
    best = [nvars]

    def rec(excluded: set, remaining: list):
        if len(excluded) >= best[0]:
            return
        live = [s for s in remaining if not (s & excluded)]
        if not live:
            best[0] = len(excluded)
            return
        pivot = min(live, key=len)
        for v in sorted(pivot):
            rec(excluded | {v}, live)

    rec(set(), supports)
    return nvars - best[0]


def projective_dimension(ring: PlueckerRing, basis: list[GPoly]) -> int:
    """Dimension of the multiprojective variety: Krull minus one cone
    direction per vertex."""
    return krull_dimension(basis, len(ring)) - ring.quiver.n


def hilbert_component(ring: PlueckerRing, basis: list[GPoly], m, *,
                      budget: int = 2_000_000) -> int:
    """dim of the multidegree-m graded piece of the quotient ring.

    Counts multidegree-m monomials outside the leading-term ideal; needs a
    basis truncated at total degree >= sum(m).
    """
    m = ring.quiver.check_dimvector(m)
    leads = [g.lead for g in basis]
    total = 1
    blocks = []
    for i in range(ring.quiver.n):
        lo, hi = ring.block[i]
        k = hi - lo
        count = 1
        for t in range(m[i]):
            count = count * (k + t) // (t + 1)
        total *= count
        blocks.append((lo, k, m[i]))
    if total > budget:
        raise GroebnerError(f"{total} candidate monomials exceeds budget")
    nvars = len(ring)

    def block_monos(lo, k, deg):
        for combo in itertools.combinations_with_replacement(range(lo, lo + k), deg):
            exps = [0] * nvars
            for idx in combo:
                exps[idx] += 1
            yield exps

    count = 0
    partials = [[0] * nvars]
    for lo, k, deg in blocks:
        new = []
        for base in partials:
            for exps in block_monos(lo, k, deg):
                merged = [a + b for a, b in zip(base, exps)]
                new.append(merged)
        partials = new
    for exps in partials:
        mono = tuple(exps)
        if not any(_divides(ld, mono) for ld in leads):
            count += 1
    return count


def hilbert_table(ring: PlueckerRing, gens: list[MPoly], p: int, degrees, *,
                  pair_budget: int = DEFAULT_PAIR_BUDGET) -> list[dict]:
    """Entries {"m": [...], "dim": N} for each requested multidegree."""
    degrees = [ring.quiver.check_dimvector(m) for m in degrees]
    max_total = max((sum(m) for m in degrees), default=0)
    basis = groebner_basis(ring, gens, p, max_degree=max_total,
                           pair_budget=pair_budget)
    return [
        {"m": list(m), "dim": hilbert_component(ring, basis, m)}
        for m in degrees
    ]


def hilbert_table_json(table: list[dict]) -> str:
    return json.dumps(table, indent=2)
