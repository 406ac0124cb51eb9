"""heckeforge: exact Hochschild-cohomology and graded-Hecke-algebra
computations for the monomial reflection groups G(r,p,n)."""

from .cyclo import CycloMatrix, CycloNum, Rational, cyclotomic_polynomial, root_of_unity
from .group import GroupElement, RepKind, conjugacy_classes, elements, group_order
from .hecke import SkewForm, SkewFormFamily, build_preset, param_space, pbw_check
from .hochschild import closed_form_catalog, compare, hh2_total, hh_component
from .ncalg import DrinfeldAlgebra, HStarAlgebra, verify_iso, verify_reln4
from .polyforms import PolyForm, Polynomial, reynolds_semiinvariant_basis

__version__ = "0.1.0"

__all__ = [
    "CycloMatrix",
    "CycloNum",
    "DrinfeldAlgebra",
    "GroupElement",
    "HStarAlgebra",
    "PolyForm",
    "Polynomial",
    "Rational",
    "RepKind",
    "SkewForm",
    "SkewFormFamily",
    "build_preset",
    "closed_form_catalog",
    "compare",
    "conjugacy_classes",
    "cyclotomic_polynomial",
    "elements",
    "group_order",
    "hh2_total",
    "hh_component",
    "param_space",
    "pbw_check",
    "reynolds_semiinvariant_basis",
    "root_of_unity",
    "verify_iso",
    "verify_reln4",
]
