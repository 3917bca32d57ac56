"""Exact toolkit for valuated matroids, their bipartite-graph inductions and R-minor representations.

All values are ``fractions.Fraction`` or the singleton :data:`NEG_INF`.
Ground sets are ``range(n)``; sets are accepted as iterables or bitmasks.
"""

from .errors import (
    CapacityError,
    DomainError,
    InfeasibleError,
    InvalidFamilyError,
    InvalidRepresentationError,
    ParameterError,
    SchemaError,
    ValmatError,
)
from .extrat import NEG_INF, format_ext, parse_ext
from .family import B0_matroid, B1_matroid, FamilyParams, make_Fn, make_h_natural
from .induction import (
    Network,
    RMinorRep,
    eval_rminor,
    induce_bipartite,
    induce_network,
    rminor_function,
    trim_representation,
)
from .intersection import (
    DualCert,
    WeightedBipGraph,
    dual_certificate,
    max_weight_independent_matching,
    verify_certificate,
)
from .matroid import (
    Matroid,
    check_basis_exchange,
    direct_sum,
    dual,
    explicit,
    free,
    minor,
    partition,
    sparse_paving_from_circuits,
    truncation,
    uniform,
    union,
)
from .rado import RadoRep, fully_reducible, is_robust, represented_matroid, rho
from .report import Check, Report
from .tropical import PuiseuxScalar, TropPoly, check_commutation, deg, generating_function, tropicalize
from .valfn import (
    ValMat,
    check_valuated,
    contract,
    delete,
    direct_sum_v,
    dual_v,
    principal_extension,
    truncate,
    union_v,
)
from .vgm import VGM, check_vgm, endow, merge, vgm_to_valmat

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "DomainError",
    "InfeasibleError",
    "InvalidFamilyError",
    "InvalidRepresentationError",
    "ParameterError",
    "SchemaError",
    "ValmatError",
    "NEG_INF",
    "format_ext",
    "parse_ext",
    "B0_matroid",
    "B1_matroid",
    "FamilyParams",
    "make_Fn",
    "make_h_natural",
    "Network",
    "RMinorRep",
    "eval_rminor",
    "induce_bipartite",
    "induce_network",
    "rminor_function",
    "trim_representation",
    "DualCert",
    "WeightedBipGraph",
    "dual_certificate",
    "max_weight_independent_matching",
    "verify_certificate",
    "Matroid",
    "check_basis_exchange",
    "direct_sum",
    "dual",
    "explicit",
    "free",
    "minor",
    "partition",
    "sparse_paving_from_circuits",
    "truncation",
    "uniform",
    "union",
    "RadoRep",
    "fully_reducible",
    "is_robust",
    "represented_matroid",
    "rho",
    "Check",
    "Report",
    "PuiseuxScalar",
    "TropPoly",
    "check_commutation",
    "deg",
    "generating_function",
    "tropicalize",
    "ValMat",
    "check_valuated",
    "contract",
    "delete",
    "direct_sum_v",
    "dual_v",
    "principal_extension",
    "truncate",
    "union_v",
    "VGM",
    "check_vgm",
    "endow",
    "merge",
    "vgm_to_valmat",
]
