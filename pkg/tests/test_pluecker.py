import itertools
from math import comb

import numpy as np
import pytest

from quivergrass.catalog import Isoclass, get_catalog
from quivergrass.linalg import PrimeField
from quivergrass.pluecker import (
    MPoly,
    PlueckerRing,
    export_macaulay2,
    export_text,
    grassmann_relations,
    ideal,
    pluecker_coordinates,
)
from quivergrass.pointcount import enumerate_subspaces
from quivergrass.quiver import Quiver, linear_quiver, zigzag_quiver
from quivergrass.reps import Representation


def test_ring_variable_count():
    q = zigzag_quiver(3)
    ring = PlueckerRing(q, (3, 4, 3), (1, 3, 1))
    assert len(ring) == comb(3, 1) + comb(4, 3) + comb(3, 1)
    # multidegree of a product of one variable per vertex is (1, 1, 1)
    mono = (0, 3, 3 + comb(4, 3))
    assert ring.multidegree(tuple(sorted(mono))) == (1, 1, 1)


def test_mpoly_arithmetic():
    q = Quiver([1], [])
    ring = PlueckerRing(q, (3,), (1,))
    x = MPoly.term(ring, 1, (0,))
    y = MPoly.term(ring, 1, (1,))
    assert (x + y) - y == x
    assert x * y == y * x
    assert not (x - x)
    assert ((x + y) * (x - y)) == x * x - y * y


def test_gr24_single_exchange_quadric():
    # Gr(2, 4) has exactly one Pluecker relation:
    # D12*D34 - D13*D24 + D14*D23
    q = Quiver([1], [])
    ring = PlueckerRing(q, (4,), (2,))
    rels = grassmann_relations(ring, 0)
    assert len(rels) == 1
    f = PrimeField(5)
    idx = {cols: ring.index(0, cols)
           for cols in itertools.combinations(range(1, 5), 2)}
    coords = {v: 0 for v in range(len(ring))}
    coords[idx[(1, 2)]] = 1
    coords[idx[(3, 4)]] = 1
    # the point with only D12 and D34 nonzero is NOT on the Grassmannian
    assert rels[0].evaluate(coords, f) != 0


def test_grassmann_relations_vanish_on_all_subspaces():
    q = Quiver([1], [])
    for d, e in [(4, 2), (5, 2)]:
        ring = PlueckerRing(q, (d,), (e,))
        rels = grassmann_relations(ring, 0)
        f = PrimeField(2)
        en = enumerate_subspaces(e, d, 2)
        for b in np.asarray(en.bases, dtype=np.int64):
            coords = pluecker_coordinates(ring, [f.mat(b)], f)
            for g in rels:
                assert g.evaluate(coords, f) == 0


def vanishing_locus_matches_points(quiver, iso_labels, e, p, scope):
    """All relations vanish exactly on the Grassmannian's points."""
    cat = get_catalog(quiver, p)
    iso = cat.parse_isoclass(iso_labels)
    m = cat.realize(iso)
    ring, gens = ideal(m, e, scope=scope)
    f = PrimeField(p)
    enums = [enumerate_subspaces(e[v], m.dims[v], p) for v in range(quiver.n)]
    n_points = 0
    for choice in itertools.product(*[range(en.bases.shape[0]) for en in enums]):
        bases = [f.mat(np.asarray(enums[v].bases[choice[v]], dtype=np.int64))
                 for v in range(quiver.n)]
        is_point = all(
            f.solve(bases[quiver.target(a)].T,
                    f.mul(m.maps[a], bases[quiver.source(a)].T)) is not None
            for a in range(len(quiver.arrows)))
        coords = pluecker_coordinates(ring, bases, f)
        vanishes = all(g.evaluate(coords, f) == 0 for g in gens)
        assert vanishes == is_point
        n_points += is_point
    return n_points


@pytest.mark.parametrize("scope", ["arrows", "paths"])
def test_ideal_cuts_out_exactly_the_points(scope):
    from quivergrass.pointcount import count_points
    q = zigzag_quiver(3)
    cat = get_catalog(q, 2)
    n = vanishing_locus_matches_points(q, "U(1,3) + U(2,2)", (1, 1, 1), 2, scope)
    m = cat.realize(cat.parse_isoclass("U(1,3) + U(2,2)"))
    assert n == count_points(m, (1, 1, 1), 2)


def test_path_scope_on_equioriented_a3():
    q = linear_quiver(3, ">>")
    vanishing_locus_matches_points(q, "2*U(1,3)", (1, 1, 1), 2, "paths")


def test_generators_are_multihomogeneous():
    q = zigzag_quiver(3)
    cat = get_catalog(q)
    m = cat.realize(cat.parse_isoclass("U(1,3) + U(1,2) + U(2,3) + U(2,2)"))
    ring, gens = ideal(m, (1, 3, 1))
    for g in gens:
        degs = {ring.multidegree(mono) for mono in g.coeffs}
        assert len(degs) == 1


def test_empty_side_yields_no_arrow_relations():
    # e = 0 at the source: no bilinear relations for that arrow
    q = linear_quiver(2)
    f = PrimeField(107)
    m = Representation(q, f, (2, 2), [f.eye(2)])
    ring, gens = ideal(m, (0, 1))
    assert gens == []


def test_exports():
    q = linear_quiver(2)
    f = PrimeField(107)
    m = Representation(q, f, (2, 2), [f.eye(2)])
    ring, gens = ideal(m, (1, 1))
    text = export_text(gens)
    assert text.count("\n") == len(gens)
    m2 = export_macaulay2(ring, gens, 107)
    assert "ZZ/107" in m2 and "ideal" in m2
    assert "Degrees" in m2
