"""Weights of numerical semigroups, gamma-hyperelliptic classification and
weight-bound verification by exhaustive enumeration."""

from .errors import (
    ConstructionOutOfRange,
    GenusMismatch,
    MalformedOddList,
    NotASemigroup,
    NotCofinite,
    NotGammaHyperelliptic,
    NotMember,
    SemigroupError,
)
from .gamma import (
    BoundCheck,
    GammaCertificate,
    certify,
    check_bounds,
    detect_gammas,
    make_maximizer,
    make_minimizer,
    make_mult4_member,
    mult4_spectrum,
)
from .gapset import (
    GapList,
    Semigroup,
    apery_set,
    from_gaps,
    from_generators,
    gaps,
    is_symmetric,
    natural_numbers,
)
from .tableau import PathTableau, path_of, render_ascii, render_svg
from .tree import (
    EnumerationStats,
    brute_force_enumerate,
    enumerate_gamma_hyperelliptic,
    enumerate_semigroups,
    iter_semigroups,
    minimal_generators,
)
from .weights import (
    WeightReport,
    k_ramification,
    k_weight,
    odd_tail_count,
    s_weight,
    total_ramification,
    weight_report,
)

__version__ = "0.1.0"
