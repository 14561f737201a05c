"""Blow up the complexified A-infinity hypersurface along y = w = 0.

Prints the strict transform, the transformed 1-form and the singular
locus of the transformed foliation in the chart (x, t, s, z, u, v).
"""

from leviscope.blowup import (BlowupChart, form_singular_ideal, normalized, strict_transform,
                              strict_transform_form, transform_singular_ideal)
from leviscope.exprio import parse_poly, print_poly
from leviscope.forms import alpha_beta
from leviscope.hermitian import complexify, re_part
from leviscope.poly import VarSpace


def main():
    hol = VarSpace(("x", "y1", "y2"))
    Fc = complexify(re_part(parse_poly("y1^2 + y2^2", hol)))
    print("F_C          =", print_poly(Fc.poly))

    chart = BlowupChart.default(Fc.space)
    print("chart        :", chart.describe())

    st, m = strict_transform(chart, Fc.poly)
    print(f"strict       = {print_poly(normalized(st))}   (u^{m} removed, unit dropped)")

    alpha = alpha_beta(Fc).alpha
    at, ma = strict_transform_form(chart, alpha)
    print("alpha        =", alpha)
    print(f"alpha~       = {at}   (u^{ma} removed)")

    # the form alone vanishes on {u = t^2 + s^2 = 0} and on {t = s = 0};
    # adding the strict transform cuts the exceptional part down to v^2 = -1
    form_only = form_singular_ideal(chart, at)
    full = transform_singular_ideal(chart, at, st)
    print("dim Sing(alpha~)            =", form_only.dimension())
    print("dim Sing(alpha~) on strict  =", full.dimension())
    on_E = full.with_generators([parse_poly("u", chart.target)]).groebner()
    print("stratum on E                :", ", ".join(print_poly(g) for g in on_E.basis))


if __name__ == "__main__":
    main()
