"""Order-divisor graphs of finite groups.

The order-divisor graph of a finite group G has one vertex per element,
with two distinct vertices adjacent exactly when their element orders
differ and one order divides the other. This package builds the graphs
explicitly for cyclic, dihedral, unit, and direct-product groups,
evaluates closed-form invariants without building anything, and verifies
that the two routes agree.
"""

from .errors import (
    DomainError,
    EnumerationBoundError,
    SpecConstraintError,
    SpecSyntaxError,
)
from .groups import (
    DEFAULT_ENUMERATION_BOUND,
    Cyclic,
    Dihedral,
    Element,
    GroupSpec,
    OrderProfile,
    Product,
    Units,
    direct_product,
    element_label,
    element_labels,
    element_order,
    element_orders,
    enumerate_elements,
    format_spec,
    group_order,
    order_profile,
)
from .graph import (
    DEFAULT_CHROMATIC_BOUND,
    InvariantReport,
    ODGraph,
    build_graph,
    degree_via_profile,
    eccentricities,
    oracle_chromatic_number,
    oracle_girth,
    oracle_is_bipartite,
    oracle_is_cycle_graph,
    oracle_is_path,
    oracle_is_star,
    oracle_report,
    size_via_profile,
)
from .formulas import (
    deg_dn,
    deg_zn,
    deg_zn_prime_power,
    degree_sum_zn_prime_power,
    dn_realized_orders,
    girth_from_profile,
    girth_of_group,
    girth_of_product,
    is_bipartite_group,
    is_path_group,
    is_star_group,
    order_sum_prime_power,
    size_dn,
    size_zn,
    size_zn_prime_power,
)
from .verify import (
    DEFAULT_SUITE,
    CheckResult,
    FormulaSuite,
    SweepReport,
    VerificationResult,
    sweep,
    verify_group,
)
from .cli import main, parse_spec

__version__ = "0.1.0"

__all__ = [
    "Cyclic",
    "CheckResult",
    "DEFAULT_CHROMATIC_BOUND",
    "DEFAULT_ENUMERATION_BOUND",
    "DEFAULT_SUITE",
    "Dihedral",
    "DomainError",
    "Element",
    "EnumerationBoundError",
    "FormulaSuite",
    "GroupSpec",
    "InvariantReport",
    "ODGraph",
    "OrderProfile",
    "Product",
    "SpecConstraintError",
    "SpecSyntaxError",
    "SweepReport",
    "Units",
    "VerificationResult",
    "build_graph",
    "deg_dn",
    "deg_zn",
    "deg_zn_prime_power",
    "degree_sum_zn_prime_power",
    "degree_via_profile",
    "direct_product",
    "dn_realized_orders",
    "eccentricities",
    "element_label",
    "element_labels",
    "element_order",
    "element_orders",
    "enumerate_elements",
    "format_spec",
    "girth_from_profile",
    "girth_of_group",
    "girth_of_product",
    "group_order",
    "is_bipartite_group",
    "is_path_group",
    "is_star_group",
    "main",
    "oracle_chromatic_number",
    "oracle_girth",
    "oracle_is_bipartite",
    "oracle_is_cycle_graph",
    "oracle_is_path",
    "oracle_is_star",
    "oracle_report",
    "order_profile",
    "order_sum_prime_power",
    "parse_spec",
    "size_dn",
    "size_via_profile",
    "size_zn",
    "size_zn_prime_power",
    "sweep",
    "verify_group",
]
