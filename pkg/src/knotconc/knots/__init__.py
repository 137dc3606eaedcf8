from .diagram import Diagram, Crossing, fox_alexander
from .braid import (strand_count, closure_permutation, closure_components,
                    braid_closure_diagram, seifert_matrix_from_braid)
from .seifert import (validate_seifert, SeifertError, negate, reverse,
                      transform, connected_sum, alexander_from_seifert,
                      signature, determinant)
from .seifert_from_pd import (seifert_matrix_from_diagram, braid_from_diagram,
                              SeifertAlgorithmError)
from .expressions import KnotExpression, ExpressionError, resolve_expression
from .table import (KnotTable, TableEntry, load_table, save_table,
                    default_table)

__all__ = [
    "Diagram", "Crossing", "fox_alexander", "strand_count",
    "closure_permutation", "closure_components", "braid_closure_diagram",
    "seifert_matrix_from_braid", "validate_seifert", "SeifertError",
    "negate", "reverse", "transform", "connected_sum",
    "alexander_from_seifert", "signature", "determinant",
    "seifert_matrix_from_diagram", "braid_from_diagram",
    "SeifertAlgorithmError", "KnotExpression", "ExpressionError",
    "resolve_expression", "KnotTable", "TableEntry", "load_table",
    "save_table", "default_table",
]
