"""Exact symbolic checks for Levi-flat hypersurfaces with line singularities."""

__version__ = "0.1.0"

from .gaussian import GaussianRational, I
from .poly import Poly, VarSpace
from .groebner import (GroebnerBasis, Ideal, buchberger, ideal_dimension, ideal_member,
                       poly_divmod, truncated_quotient_dim)
from .exprio import ExprSource, load_poly, parse_poly, print_poly, read_poly_file
from .hermitian import (ComplexifiedPoly, HermitianPoly, complexified, complexify,
                        diagonal_restrict, make_hermitian, re_part)
from .forms import DiffForm, Split, alpha_beta, d_anti, d_full, d_holo, levi_form
from .leviflat import (algebraic_dimension, branch_in_M, degenerate_locus_scan, is_levi_flat,
                       segre_variety, sing_ideal)
from .ils import (Germ, build_normal_form, build_quadric, check_theorem_A_hypotheses,
                  classify_exact, codim_c, in_I2, quadric_models_for_line, tau_ideal)
from .blowup import (BlowupChart, pullback, pullback_form, strict_transform,
                     strict_transform_form, transform_singular_ideal)

__all__ = [
    "__version__",
    "GaussianRational",
    "I",
    "Poly",
    "VarSpace",
    "GroebnerBasis",
    "Ideal",
    "buchberger",
    "ideal_dimension",
    "ideal_member",
    "poly_divmod",
    "truncated_quotient_dim",
    "ExprSource",
    "load_poly",
    "parse_poly",
    "print_poly",
    "read_poly_file",
    "ComplexifiedPoly",
    "HermitianPoly",
    "complexified",
    "complexify",
    "diagonal_restrict",
    "make_hermitian",
    "re_part",
    "DiffForm",
    "Split",
    "alpha_beta",
    "d_anti",
    "d_full",
    "d_holo",
    "levi_form",
    "algebraic_dimension",
    "branch_in_M",
    "degenerate_locus_scan",
    "is_levi_flat",
    "segre_variety",
    "sing_ideal",
    "Germ",
    "build_normal_form",
    "build_quadric",
    "check_theorem_A_hypotheses",
    "classify_exact",
    "codim_c",
    "in_I2",
    "quadric_models_for_line",
    "tau_ideal",
    "BlowupChart",
    "pullback",
    "pullback_form",
    "strict_transform",
    "strict_transform_form",
    "transform_singular_ideal",
]
