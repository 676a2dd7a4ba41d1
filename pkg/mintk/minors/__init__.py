from .minors import minors_ideal, all_minors, minor_count, product_ideal, MinorExpansion, MinorsResult
from .minors import DEFAULT_MAX_MINORS
from .verdict import MinorVerdict, minors_of_resolution, minors_onset, verdict_table
from .laws import LawCheck, check_minors_in_mr, check_tensor_submatrix_law, check_tensor_embedding
from .laws import check_summand_inclusion, check_basis_change_invariance, border_tensor
from .laws import random_basis_change, random_homogeneous, random_scalar
from .theorem import TheoremReport, judge, GRADED_NOTE
from .strategies import homogeneous_forms, minimal_matrices
