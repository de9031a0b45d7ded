"""Exact multiplicity series of the cocharacters of upper triangular matrices."""

from .partitions import (
    contains,
    horizontal_strip,
    partitions_of,
    standard_tableaux_count,
    weyl_dimension,
)
from .series import (
    TruncatedSeries,
    evaluate_diagonal,
    geometric_product,
    mul_geometric,
    substitute_monomials,
    variable_sum,
)
from .schur import (
    MultiplicitySeries,
    berele_verify,
    extract_multiplicities,
    pieri_product,
    pieri_young_derive_oracle,
    schur_polynomial,
    young_derive,
)
from .cochar import (
    MultiplicityTable,
    colength_series,
    formanek_recurrence_check,
    hilbert_series_Uk,
    hilbert_series_proper_oracle,
    multiplicity_series_Uk,
    multiplicity_table,
    to_v_variables,
)
from .closedform import (
    ClosedFormReport,
    colength_closed,
    m_U1_closed,
    m_U2_closed,
    m_U3_closed,
    m_maximal_closed,
    run_verification,
    support_predicate,
)

__version__ = "0.1.0"

__all__ = [
    "ClosedFormReport",
    "MultiplicitySeries",
    "MultiplicityTable",
    "TruncatedSeries",
    "berele_verify",
    "colength_closed",
    "colength_series",
    "contains",
    "evaluate_diagonal",
    "extract_multiplicities",
    "formanek_recurrence_check",
    "geometric_product",
    "hilbert_series_Uk",
    "hilbert_series_proper_oracle",
    "horizontal_strip",
    "m_U1_closed",
    "m_U2_closed",
    "m_U3_closed",
    "m_maximal_closed",
    "mul_geometric",
    "multiplicity_series_Uk",
    "multiplicity_table",
    "partitions_of",
    "pieri_product",
    "pieri_young_derive_oracle",
    "run_verification",
    "schur_polynomial",
    "standard_tableaux_count",
    "substitute_monomials",
    "support_predicate",
    "to_v_variables",
    "variable_sum",
    "weyl_dimension",
    "young_derive",
]
