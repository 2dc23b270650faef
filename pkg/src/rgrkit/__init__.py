"""rgrkit: resolvable Golomb rulers, resolvable symmetric configurations,
and progressive dinner parties."""

from .rulers import (
    BoundReport,
    ModularRuler,
    Ruler,
    bound_report,
    counting_bound,
    counting_inequality_holds,
    golomb_lower_bound,
    is_golomb,
    is_mgr,
    is_resolvable,
    is_rmgr,
)
from .constructions import (
    CostasPermutation,
    RuzsaParams,
    costas_rgr,
    cubic_rgr,
    embed_as_rmgr,
    ruzsa_best,
    ruzsa_rgr,
    welch_costas,
)
from .groups import (
    FiniteGroup,
    GroupRuler,
    Subgroup,
    is_ggr,
    left_cosets,
    make_alternating,
    make_cyclic,
    make_product,
    parse_group,
)
from .fields import FiniteField, make_field, mols
from .configurations import (
    Configuration,
    HostAssignment,
    Resolution,
    assign_hosts,
    complete_to_affine,
    develop_ggr,
    develop_multi,
    develop_rmgr,
    dinner_party_schedule,
    from_mols,
    verify_configuration,
    verify_resolution,
)
from .search import SearchOutcome, find_ggr, find_rmgr, naive_rmgr_exists, optimal_rgr
from .existence import (
    ExistenceRecord,
    classify,
    general_existence,
    general_witness,
    materialize,
    open_cases,
    optimal_resolvable_length,
    optimal_resolvable_ruler,
    threshold_w,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
