"""Count points of a quiver Grassmannian over several finite fields, fit the
counting polynomial, and classify every stratum of a small principal family.

Run with:  python3 demos/02_count_and_classify.py
"""

from quivergrass.catalog import get_catalog
from quivergrass.lab import PrincipalConfig, classify_all
from quivergrass.pointcount import brute_force_count, count_points
from quivergrass.quiver import zigzag_quiver


def main():
    q = zigzag_quiver(3)
    cfg = PrincipalConfig(q, (1, 1, 1), (1, 1, 1))

    cat2 = get_catalog(q, 2)
    m = cat2.realize(cat2.parse_isoclass("U(1,3) + U(1,2) + U(2,2)"))
    e = (1, 2, 1)
    print("counts of Gr_e(M), e =", e)
    for p in (2, 3, 5):
        catp = get_catalog(q, p)
        mp = catp.realize(catp.parse_isoclass("U(1,3) + U(1,2) + U(2,2)"))
        print(f"  p={p}: dp={count_points(mp, e, p)}"
              f"  brute={brute_force_count(mp, e, p) if p == 2 else '-'}")

    report = classify_all(cfg)
    print(f"\nclassified {len(report.classifications)} strata, gaps: {report.gaps}")
    for iso, c in sorted(report.classifications.items(),
                         key=lambda kv: kv[1].dimension):
        mark = "*" if iso in set(report.gamma2) else " "
        print(f" {mark} dim={c.dimension:2d} top={c.top_count:2d}  "
              f"P(q)={c.polynomial}  {iso}")
    print("\n(* = minimal-dimension locus; its sinks are the deepest strata)")
    print("gamma2 sinks:", ", ".join(map(str, report.gamma2_sinks())))


if __name__ == "__main__":
    main()
