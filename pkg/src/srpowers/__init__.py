"""Stanley-Reisner ideals, their symbolic and ordinary powers, cleanness and
Cohen-Macaulayness, with exhaustive audits on small complexes."""

from .audit import (
    AuditReport,
    SweepResult,
    audit_ci_equivalences,
    audit_dim1_second_power,
    audit_matroid_equivalences,
    reproduce_example,
    run_audit_sweep,
)
from .certificates import parse_certificate, serialize
from .complexes import (
    SimplicialComplex,
    alexander_dual,
    canonical_form,
    complement_complex,
    diameter,
    dim1_shape,
    is_complete_intersection,
    is_matroid,
    is_matroid_by_augmentation,
    matroid_violation,
)
from .dim1 import gamma_complex, theorem3_shelling
from .dsl import parse, parse_complex, parse_ideal
from .enumeration import enumerate_pure_complexes
from .errors import *  # noqa: F401,F403
from .homology import RATIONALS, HomologyProfile, reduced_homology
from .ideals import (
    MonomialIdeal,
    complex_from_squarefree_ideal,
    facet_ideal,
    ideals_equal,
    intersect,
    is_matroidal,
    is_unmixed,
    minimalize,
    power,
    squarefree_dual,
    stanley_reisner_ideal,
    symbolic_power,
)
from .polar import (
    PolarContext,
    PolarVariable,
    faridi_power_decomposition,
    polarize_ideal,
    theorem2_dual_generators,
    theorem2_order,
)
from .properties import clean_shelling, cm_obstructions, is_clean, is_cohen_macaulay
from .quotients import LinearQuotientCertificate, check_linear_quotients, find_linear_quotients_order
from .shelling import ShellingCertificate, check_shelling, find_shelling

__version__ = "0.1.0"
