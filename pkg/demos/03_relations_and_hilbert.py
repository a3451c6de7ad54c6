"""Build the multihomogeneous defining ideal of a quiver Grassmannian in
Pluecker coordinates, compute a Groebner basis, and read off multigraded
Hilbert function values.

Run with:  python3 demos/03_relations_and_hilbert.py
"""

from quivergrass.catalog import get_catalog
from quivergrass.groebner import groebner_basis, hilbert_table, krull_dimension
from quivergrass.lab import PrincipalConfig
from quivergrass.pluecker import export_macaulay2, ideal
from quivergrass.poset import generic_isoclass
from quivergrass.quiver import zigzag_quiver


def main():
    q = zigzag_quiver(3)
    cfg = PrincipalConfig(q, (1, 1, 1), (1, 1, 1))
    cat = cfg.catalog
    m0 = generic_isoclass(cat, cfg.d)
    print(f"generic representation: {m0}")

    ring, gens = ideal(cat.realize(m0), cfg.e, scope="paths")
    print(f"Pluecker ring has {len(ring)} variables; {len(gens)} generators")

    basis = groebner_basis(ring, gens, 107, max_degree=4)
    print(f"Groebner basis (truncated at degree 4): {len(basis)} elements")
    print(f"Krull dimension of the cone: {krull_dimension(basis, len(ring))}")

    mdegs = [(a, b, c) for a in range(3) for b in range(3) for c in range(3)
             if a + b + c <= 3]
    table = hilbert_table(ring, gens, 107, mdegs)
    print("\nmultigraded Hilbert function h(m1, m2, m3):")
    for entry in table:
        print(f"  h{tuple(entry['m'])} = {entry['dim']}")

    print("\nMacaulay2 export (first lines):")
    for line in export_macaulay2(ring, gens, 107).splitlines()[:4]:
        print(" ", line)


if __name__ == "__main__":
    main()
