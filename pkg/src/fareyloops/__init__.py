"""Exact continued-fraction and Farey-graph machinery for loop decisions mod n."""

from .contfrac import (
    CFExpansion,
    cf_eval,
    cf_from_rational,
    cf_of_surd,
    cf_value,
    convergent,
    convergents,
    format_cf,
    height,
    multiply_cf,
    parse_cf,
    semiconvergent,
    shift_cf,
    twin_of,
)
from .cutting import (
    CuttingWord,
    crossed_edges,
    crosses_edge,
    eta,
    eta_inverse,
    fan_chain,
    loop_verdict_geometric,
)
from .gamma_paths import MediantRun, d_algorithm, nonterminating, v_algorithm
from .heights import (
    CheckRecord,
    HeightSpectrum,
    ScanReport,
    check_count_height,
    check_infl,
    check_noloop_bound,
    check_pro2,
    height_spectrum,
    mp_upper_bound,
    persistence_scan,
)
from .loops import (
    LoopVerdict,
    ModState,
    is_infinite_loop,
    loop_example,
    loop_exists,
    loop_graph,
    loop_scaling_check,
    sb_walk,
)
from .rationals import (
    INFINITY,
    FareyEdge,
    Rational,
    farey_difference,
    farey_mediant,
    is_dual_neighbor,
    is_farey_neighbor,
    is_gamma0_neighbor,
)
from .surds import QuadSurd

__version__ = "0.1.0"

__all__ = [
    "CFExpansion",
    "CheckRecord",
    "CuttingWord",
    "FareyEdge",
    "HeightSpectrum",
    "INFINITY",
    "LoopVerdict",
    "MediantRun",
    "ModState",
    "QuadSurd",
    "Rational",
    "ScanReport",
    "cf_eval",
    "cf_from_rational",
    "cf_of_surd",
    "cf_value",
    "check_count_height",
    "check_infl",
    "check_noloop_bound",
    "check_pro2",
    "convergent",
    "convergents",
    "crossed_edges",
    "crosses_edge",
    "d_algorithm",
    "eta",
    "eta_inverse",
    "fan_chain",
    "farey_difference",
    "farey_mediant",
    "format_cf",
    "height",
    "height_spectrum",
    "is_dual_neighbor",
    "is_farey_neighbor",
    "is_gamma0_neighbor",
    "is_infinite_loop",
    "loop_example",
    "loop_exists",
    "loop_graph",
    "loop_scaling_check",
    "loop_verdict_geometric",
    "mp_upper_bound",
    "multiply_cf",
    "nonterminating",
    "parse_cf",
    "persistence_scan",
    "sb_walk",
    "semiconvergent",
    "shift_cf",
    "twin_of",
    "v_algorithm",
]
