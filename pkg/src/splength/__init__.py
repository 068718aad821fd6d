"""Triangle costs of finite presentations and upper bounds on stable
presentation length through finite covers."""

__version__ = "0.1.0"

from .abelian import SmithForm, abelianize, smith_form_of, smith_normal_form, torsion_lower_bound
from .cosets import CapacityExceeded, CosetTable, SubgroupSpec, low_index_subgroups, todd_coxeter
from .presentation import (Presentation, PresentationError, PresentationSyntaxError, format_presentation,
                           parse_presentation, tcost, triangulate, wedge)
from .rewriting import rewrite_presentation, schreier_transversal
from .tietze import SimplifyBudget, simplify
from .words import cyclic_reduce, free_reduce

__all__ = [
    "CapacityExceeded", "CosetTable", "Presentation", "PresentationError", "PresentationSyntaxError",
    "SimplifyBudget", "SmithForm", "SubgroupSpec", "abelianize", "cyclic_reduce", "format_presentation",
    "free_reduce", "low_index_subgroups", "parse_presentation", "rewrite_presentation", "schreier_transversal",
    "simplify", "smith_form_of", "smith_normal_form", "tcost", "todd_coxeter", "torsion_lower_bound",
    "triangulate", "wedge",
]
