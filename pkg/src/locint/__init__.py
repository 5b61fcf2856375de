"""Exact pointfree Lebesgue integration of simple functions at desk scale.

Finite distributive lattices stand in for sigma-frames, their congruence
frames carry measurable functions as exact rational step ladders, measures
live on the coframe of sublocales, and every integral is a finite sum of
rationals (extended with the infinities).  A classical finite measure
space serves as an independent oracle throughout.
"""

from .congruence import (
    Congruence,
    CongruenceFrame,
    SublocaleView,
    congruence_join,
    congruence_meet,
    delta,
    enumerate_congruences,
    nabla,
    open_closed,
    principal_congruence,
    quotient,
)
from .cutfunction import (
    CutFunction,
    FunctionSequence,
    SigmaScale,
    add,
    characteristic,
    constant,
    from_sigma_scale,
    join_meet,
    leq,
    limits,
    mul_nonneg,
    negate,
    pos_neg_abs,
    scale,
    seq_inf,
    seq_sup,
)
from .bridge import (
    BridgeReport,
    ClassicalSimpleFunction,
    FiniteMeasurableSpace,
    bridge_check,
    classical_integral,
    extend_measure,
    from_localic,
    to_localic,
)
from .integrate import (
    SummabilityReport,
    indefinite_integral,
    integrate_general,
    integrate_simple,
    nonnegativity_certificate,
    restrict_vs_multiply,
    summability,
)
from .lattice import FiniteLattice, build_lattice, chain_lattice, powerset_lattice
from .measure import Measure, measure_from_weights, validate_measure
from .rationals import NEG_INF, POS_INF, ExtValue, Infinite
from .simple import (
    SimpleFunction,
    canonicalize,
    characteristic_simple,
    constant_simple,
    cut_to_simple,
    decompose,
    decompose_trace,
    sf_add,
    sf_mul,
    sf_neg,
    sf_scale,
    to_cut_function,
    zero,
)

__version__ = "0.1.0"
