"""Fuzzy-adaptive super-twisting sliding-mode control for a DC-DC buck converter."""

from .adaptation import (
    AdaptationConfig,
    ErrorHistory,
    coefficient_factor,
    default_kc_fis,
    normalized_acceleration,
    push_error,
)
from .baseline import (
    ClassicalSmcConfig,
    FosmflcConfig,
    classical_smc_step,
    fosmflc_correction,
    fosmflc_step,
)
from .buck import (
    BuckParams,
    BuckState,
    DisturbanceEvent,
    DisturbanceSchedule,
    buck_derivatives,
    disturbance_at,
    rk4_integrate,
    rk4_step,
)
from .fuzzy import (
    FisConfig,
    FuzzyError,
    NoRuleFired,
    Partition,
    RuleTable,
    TriangularSet,
    fuzzify,
    make_uniform_partition,
    mamdani_evaluate,
    triangular_membership,
)
from .supertwisting import (
    StGains,
    StState,
    effective_slope,
    sliding_surface,
    st_correction_terms,
    st_step,
)

__version__ = "0.1.0"
