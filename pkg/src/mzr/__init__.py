"""Exact special values of multiple zeta functions at regular integer points."""
from .arith import bernoulli, binomial, zeta_nonpositive
from .closed_forms import closed_form_depth2, closed_form_depth3
from .combination import MzvCombination
from .errors import NotAdmissible, RegularityViolation, SingularInput
from .index import classify, is_admissible_mzv, positive_part_stats
from .numerics import EvalConfig, NumericValue, eval_combination, eval_mzv, eval_point
from .reduce import bound_check, reduce, reduce_with_trace, stuffle_expand

__version__ = "0.1.0"
