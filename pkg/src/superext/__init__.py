"""Computational engine for superextensions of finite groups.

Enumerates maximal linked systems over a finite ground set, composes
them with the operation extending a group's multiplication, analyzes the
resulting semigroups, and verifies certificate-style witnesses on ground
sets too large for enumeration.
"""

from .algebra import (
    FiniteSemigroup,
    adjoin_external_unit,
    algebraic_center,
    direct_product,
    make_cyclic,
    make_symmetric3,
    parse_spec,
    preimage_translate,
    semigroup_from_json,
    semigroup_to_json,
    translate,
)
from .analysis import (
    AnalysisReport,
    analyze,
    cancelable,
    center_of_table,
    check_two_sided_ideal,
    idempotents,
    is_commutative,
    isomorphic,
    minimal_left_ideals,
    zeros,
)
from .certificates import (
    CertificateVerdict,
    CommutationVerdict,
    NoncentralityCertificate,
    certificate_from_json,
    certificate_to_json,
    check_noncentrality,
    check_pointwise_commutation,
    load_certificate,
    search_central_nonprincipal,
    two_of_three_system,
)
from .errors import (
    CertificateShapeError,
    CommutingHypothesisError,
    EmptyFamilyError,
    NotMonotoneError,
    SizeGuardError,
    SpecParseError,
    ValidationError,
)
from .extension import (
    DEFAULT_SEED,
    Superextension,
    build_superextension,
    principal,
    product,
    product_via_unions,
    table_from_json,
    table_to_json,
    translate_mls,
    translation_graph_dot,
)
from .families import (
    MaximalLinkedSystem,
    SetFamily,
    enumerate_inclusion_hyperspaces,
    enumerate_mls,
    family_from_json,
    family_to_json,
    format_family,
    is_linked,
    is_mls,
    membership_bitmap,
    minimal_antichain,
    minimize_antichain,
    parse_family_line,
    random_inclusion_hyperspace,
    transversal,
)
from .suites import SUITE_NAMES, ClaimResult, SuiteReport, verify_suite

__all__ = [name for name in dir() if not name.startswith("_")]
