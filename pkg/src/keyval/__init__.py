"""Exact-arithmetic workbench for weighted key-polynomial bases of K[x].

Validates weighted bases, computes adic expansions and weight maps, runs the
level-shifting rewriting algorithms with weight traces, computes exact Izumi
step constants and comparison bounds, and cross-checks everything against an
independent truncated-power-series valuation oracle.
"""

from .basefield import BaseFieldConfig, KElem, YPoly, base_valuation
from .izumi import (
    CorpusConfig,
    GaussValuation,
    IzumiReport,
    bracket_ratio,
    chain_bound,
    empirical_izumi,
    extension_bound,
    gauss_value,
    izumi_step_constant,
    key_power_weight,
    ord_comparison_bound,
)
from .keybasis import (
    AdicExpansion,
    IndexData,
    KeyStep,
    TruncationResult,
    ValidationReport,
    WeightedBasis,
    adic_expand,
    expansion_eval,
    index_data,
    initial_form,
    truncated_keys_from_series,
    validate_basis,
    weight,
)
from .oracle import (
    Parametrization,
    PrecisionExhausted,
    PrecisionPolicy,
    conic_parametrization,
    oracle_valuation,
)
from .parsing import parse_kelem, parse_poly, poly_text
from .polynomials import ExtensionConfig, Poly, poly_divmod, poly_reduce
from .rewrite import (
    FormalExpansion,
    RewriteTrace,
    formal_weight,
    lower_expansion,
    raise_expansion,
)
from .series import InsufficientPrecision, Series, series_ord, series_sqrt
from .values import (
    INF,
    SubgroupGen,
    Value,
    format_value,
    parse_value,
    subgroup_generator,
    subgroup_index,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
