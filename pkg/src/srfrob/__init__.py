"""Frobenius and Cartier algebras of Stanley-Reisner rings, computed exactly."""
from .cartier import (
    CartierGenerator,
    RingElement,
    cartier_generators,
    check_gauge_bound,
    f_split_check,
    gauge,
    psi,
    psi_eval,
)
from .census import (
    CensusRow,
    build_block_family,
    build_Ikn,
    build_Jkn,
    canonical_form,
    census,
    enumerate_ideals,
)
from .diffops import DiffOp, apply, compose, in_DR, non_image_witness, operators_equal, phi_image
from .errors import InvariantError, MismatchError, ParseError, PreconditionError, SrfrobError
from .frobenius import (
    Case,
    ClassificationReport,
    ColonPresentation,
    Tag,
    classify,
    colon_formula,
    companion_ideal,
    face_colon,
    katzman_L,
    mu,
    mu_disjoint,
    presentation_string,
    verify_infinitely_generated,
)
from .monomial import (
    Monomial,
    MonomialIdeal,
    SymbolicIdeal,
    SymbolicMonomial,
    SymExp,
    colon,
    contains,
    divides,
    frobenius_power,
    ideal_equal,
    ideal_sum,
    instantiate,
    intersect,
    product,
)
from .simplicial import (
    Decomposition,
    FaceIdeal,
    SimplicialComplex,
    alexander_dual,
    complex_of,
    height_profile,
    is_cohen_macaulay,
    is_gorenstein,
    link,
    primary_decomposition,
    reduced_homology,
)
from .syntax import format_ideal, format_monomial, parse_ideal

__version__ = "0.1.0"
