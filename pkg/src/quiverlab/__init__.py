"""Workbench for quiver mutation.

Quivers are skew-symmetric integer matrices.  The package implements the
mutation rule, exact radical invariants over Z and GF(2), structural pattern
and certificate detection, mutation-class enumeration up to isomorphism, and
the surface/exceptional classification of finite-mutation-type quivers, plus
a JSON HTTP service and a CLI on top.
"""

__version__ = "0.1.0"

from .errors import (
    CapExceededError,
    HypothesisError,
    InvalidQuiverError,
    QuiverError,
    QuiverFormatError,
    SizeLimitError,
    UndecidedError,
)
from .quiver import Quiver, new_quiver, pushforward_vector, support
from .formats import (
    format_json,
    format_text,
    parse_json,
    parse_text,
    quiver_from_obj,
    quiver_to_obj,
)
from .linalg import (
    corank_gf2,
    corank_z,
    gf2_member,
    gf2_span_dim,
    radical_basis_gf2,
    radical_basis_z,
    rank_gf2,
    rank_z,
    reduce_mod2,
)
from .patterns import (
    CertificateClause,
    InfiniteCertificate,
    PatternKind,
    SubquiverPattern,
    V00Summary,
    basic_radical_vectors,
    basic_subquivers,
    double_edges,
    induced_cycles,
    infinite_certificate,
    radical_support_check_gf2,
    radical_support_check_z,
    v00,
)
from .mutclass import (
    ClassStatus,
    FinitenessResult,
    MutationClass,
    canonical_form,
    class_reaches,
    dump_class_jsonl,
    enumerate_class,
    is_finite_mutation_type,
    load_class_jsonl,
    quiver_from_canonical,
    sweep,
)
from .classify import (
    EXCEPTIONAL_E_NAMES,
    EXCEPTIONAL_X_NAMES,
    SEED_NAMES,
    Classification,
    ReferenceCatalog,
    Verdict,
    classify_quiver,
    contains_class_subquiver,
    e6_characterization,
    e6_x6_exclusion,
    mutation_equivalent,
    seed_quiver,
    surface_by_basic_radical,
)
