"""Segre varieties of the Levi-flat quadrics along their singular sets."""

from fractions import Fraction

from leviscope.exprio import print_poly
from leviscope.gaussian import I
from leviscope.ils import quadric_catalog, quadric_models_for_line
from leviscope.leviflat import degenerate_locus_scan, is_levi_flat, segre_variety


def main():
    n = 3
    for q in quadric_catalog(n):
        flat = is_levi_flat(q.poly).is_levi_flat
        seg = segre_variety(q.poly, [0] * n)
        print(f"{q.label:<10} sing = {q.singular_set_for_n():<13} flat = {flat!s:<5} "
              f"Q_0 = {print_poly(seg.variety):<24} degenerate at 0: {seg.degenerate}")

    q24 = quadric_catalog(n)[4]
    line = [(0, 0, c) for c in (1, -1, Fraction(1, 2), I, 2 + 3 * I)]
    scan = degenerate_locus_scan(q24.poly, line)
    print("Q_{2,4} along z1 = z2 = 0:", "degenerate everywhere sampled" if all(scan.values())
          else scan)

    for m in (3, 4):
        print(f"models with a singular line, n = {m}:",
              ", ".join(e.label for e in quadric_models_for_line(m)))


if __name__ == "__main__":
    main()
