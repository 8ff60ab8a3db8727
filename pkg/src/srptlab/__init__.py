"""srpt-lab: a desk-scale lab for preemptive online SRPT scheduling on
identical machines -- exact simulation, offline optima, competitive-ratio
claim verification, and Gantt rendering."""

from .analysis import (
    THEOREMS,
    ReportRow,
    SweepReport,
    TheoremReport,
    TheoremSpec,
    bound_check,
    competitive_ratio,
    discrepancy_report,
    theorem_spec,
    verify_all,
    verify_theorem,
)
from .engine import (
    EngineTrace,
    Epoch,
    Migration,
    PolicyConfig,
    remaining_profile,
    simulate_srpt,
)
from .model import (
    Instance,
    Job,
    Rational,
    Schedule,
    Segment,
    rational_of,
    validate_schedule,
)
from .oracles import (
    DEFAULT_CEILING,
    OptMethod,
    OptResult,
    SearchCeiling,
    SearchCeilingError,
    UnsupportedInstanceError,
    brute_force_opt,
    mcnaughton,
    zero_release_opt,
)
from .workloads import ClassId, ClassSpec, S3Interpretation, generate

__version__ = "0.1.0"

__all__ = [
    "ClassId",
    "ClassSpec",
    "DEFAULT_CEILING",
    "EngineTrace",
    "Epoch",
    "Instance",
    "Job",
    "Migration",
    "OptMethod",
    "OptResult",
    "PolicyConfig",
    "Rational",
    "ReportRow",
    "S3Interpretation",
    "Schedule",
    "SearchCeiling",
    "SearchCeilingError",
    "Segment",
    "SweepReport",
    "THEOREMS",
    "TheoremReport",
    "TheoremSpec",
    "UnsupportedInstanceError",
    "bound_check",
    "brute_force_opt",
    "competitive_ratio",
    "discrepancy_report",
    "generate",
    "mcnaughton",
    "rational_of",
    "remaining_profile",
    "simulate_srpt",
    "theorem_spec",
    "validate_schedule",
    "verify_all",
    "verify_theorem",
    "zero_release_opt",
]
