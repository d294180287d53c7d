"""Regular orbits of solvable quasi-primitive linear groups over GF(p).

The package builds the normalizer of an extraspecial-group representation
inside GL(d, p), enumerates its solvable quasi-primitive subgroups up to
conjugacy, and decides which of those act on the natural module without a
regular orbit.  The resulting censuses reproduce the reference counts for
every desk-scale catalogue row.
"""

from .catalogue import DESK_ROWS, ROWS, TABLE3, RowParams, census_matches, reference_counts
from .classify import (
    Candidate,
    ModeResult,
    RowResult,
    classify_mode,
    classify_row,
    scope_refusal,
)
from .extraspecial import ExtraspecialRep, build_extraspecial, form_group
from .gfp import FieldSpec, field
from .groups import CosetQuotient, MatGroup, SubgroupView, subgroup_classes
from .modtests import is_homogeneous, is_irreducible, is_quasiprimitive, minimal_submodule
from .normalizer import NormalizerResult, assemble_full, predicted_order
from .orbits import covering_certificate, has_regular_orbit, orbit_census, verify_witness
from .serial import Journal, row_record, run_rows

__all__ = [
    "Candidate",
    "CosetQuotient",
    "DESK_ROWS",
    "ExtraspecialRep",
    "FieldSpec",
    "Journal",
    "MatGroup",
    "ModeResult",
    "NormalizerResult",
    "ROWS",
    "RowParams",
    "RowResult",
    "SubgroupView",
    "TABLE3",
    "assemble_full",
    "build_extraspecial",
    "census_matches",
    "classify_mode",
    "classify_row",
    "covering_certificate",
    "field",
    "form_group",
    "has_regular_orbit",
    "is_homogeneous",
    "is_irreducible",
    "is_quasiprimitive",
    "minimal_submodule",
    "orbit_census",
    "predicted_order",
    "reference_counts",
    "row_record",
    "run_rows",
    "scope_refusal",
    "subgroup_classes",
    "verify_witness",
]

__version__ = "0.1.0"
