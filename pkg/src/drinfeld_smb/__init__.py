"""Exact valuation profiles of division points and lattices of Drinfeld
F_q[t]-modules over local fields: Newton polygons, successive minimal
bases, the lattice/division-point dictionary, Herbrand psi-functions,
conductors and the function-field Szpiro inequality."""

from .conductor import (
    ConductorReport,
    SzpiroReport,
    conductor_local,
    global_conductor,
    j_height,
    szpiro_report,
)
from .engine import (
    DEFAULT_BUDGET,
    MultisetReport,
    RecursionTrace,
    Rank2ClosedForm,
    SMBAnalysis,
    TwoTermClosedForm,
    analyze,
    closed_form_rank2,
    closed_form_two_term,
    oracle_division_multiset,
    predict_division_multiset,
    smb_recursion,
    two_term_shape,
    verify_multiset,
)
from .errors import (
    AmbiguousCancellationError,
    BudgetError,
    HypothesisError,
    UnsupportedShapeError,
    VerificationError,
)
from .fq import FqField
from .lattice import (
    LatticeModel,
    SMBProfile,
    division_to_lattice,
    exp_valuation,
    lattice_to_division,
    lattice_values_above,
    smb_dictionary,
)
from .newton import NewtonPolygon, ValuationProfile, lower_hull, root_valuations
from .plf import (
    FiltrationReport,
    PiecewiseLinear,
    conductor_from_breaks,
    filtration_from_psi,
    plf_compose,
    psi_finite_bad,
    psi_infinite_wild,
    psi_splitting_field,
)
from .ratfunc import INF, Place, RatFunc, place_valuation
from .skew import (
    DrinfeldModule,
    ReductionProfile,
    TwistedPoly,
    j_invariant,
    phi_of,
    reduction_profile,
    skew_mul,
    two_term_j_valuation,
)

__version__ = "0.1.0"
