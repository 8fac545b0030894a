"""Exact genera, equivariant indices of circle actions, and rigidity checks."""

from .bundles import (
    BundleExpr,
    Diff,
    ExtPower,
    KRoot,
    LambdaSeries,
    Line,
    Param,
    QProduct,
    Scale,
    Sum,
    SymPower,
    SymSeries,
    Tangent,
    TangentComplexified,
    TangentDual,
    Tensor,
    Trivial,
    bundle_from_json,
    bundle_to_json,
)
from .equivariant import (
    CircleAction,
    FixedComponent,
    IndexSpec,
    SigmaFixedData,
    WeightedLine,
    dirac_cusp_spec,
    equiv_index,
    equivariant_integral,
    genus_spec,
    higher_vanishing_check,
    level_n_spec,
    limit_at_cusp,
    linear_cp_action,
    local_datum,
    loop_signature_spec,
    rigidity_report,
    sigma_fixed_set,
    structure_checks,
    twisted_spec,
)
from .errors import EqGenusError, InconsistentDataError, PreconditionError, ScenarioError
from .genera import (
    AHAT,
    EULER,
    SIGNATURE,
    TODD,
    GenusKind,
    chern_character,
    chi_y,
    cusp_values,
    dirac_cusp_series,
    index,
    levelN_loop,
    loop_signature,
    twisted_index,
)
from .spaces import (
    SpaceModel,
    cp,
    even_sphere,
    from_descriptor,
    hypersurface,
    is_c1_divisible,
    point,
    product,
)

__version__ = "0.1.0"
