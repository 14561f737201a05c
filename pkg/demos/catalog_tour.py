"""Walk the isolated line singularity table.

For every row at its smallest parameters: the germ, Levi-flatness of
Re(P) = 0, the dimension of its singular set and Siersma's c(f).
"""

import sys

from leviscope.exprio import print_poly
from leviscope.hermitian import re_part
from leviscope.ils import TABLE1, catalog_germs, codim_c
from leviscope.leviflat import algebraic_dimension, is_levi_flat


def main(n=3):
    print(f"{'row':<12} {'params':<14} {'flat':<5} {'dim':<4} {'c':<3} germ")
    for tag, params, g in catalog_germs(n):
        F = re_part(g.poly)
        flat = is_levi_flat(F).is_levi_flat
        dim = algebraic_dimension(F)
        c = codim_c(g).c_text()
        ps = ",".join(f"{k}={v}" for k, v in params.items()) or "-"
        print(f"{TABLE1[tag].label:<12} {ps:<14} {str(flat):<5} {dim:<4} {c:<3} {print_poly(g.poly)}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 3)
