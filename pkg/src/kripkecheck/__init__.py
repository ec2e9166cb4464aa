"""Finite Kripke model checking for constant-domain intermediate predicate logics."""

from .enumeration import (
    Bounds,
    constant_valuations,
    enumerate_linear_models,
    enumerate_models,
    enumerate_posets,
    monotone_valuations,
)
from .forcing import EvaluationError, compile_formula, forces, valid_in_model
from .interpolation import (
    DELTA,
    GAMMA,
    THETA,
    check_gamma_implies_theta,
    check_theta_implies_delta,
    exists_expansion,
    fo_char_delta,
    fo_char_gamma,
    find_cd_countermodel_gamma_theta,
    forall_expansions,
    reference_countermodel,
    verify_lemma,
)
from .model import (
    Frame,
    KripkeModel,
    ModelError,
    chain,
    expand,
    is_linear,
    dump_model,
    load_model,
    reduct,
    restrict_upset,
    validate,
)
from .search import SearchReport, check_validity
from .syntax import (
    BOTTOM,
    And,
    Atom,
    Bottom,
    Exists,
    Forall,
    Formula,
    Implies,
    Or,
    ParseError,
    format_formula,
    free_variables,
    parse,
    predicate_symbols,
)

__version__ = "0.1.0"
