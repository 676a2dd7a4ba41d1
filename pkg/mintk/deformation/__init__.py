from .pair import DeformationPair, adjoin_variable, from_total
from .shamash import HomotopySigma, ShamashResolution, lift_and_divide, shamash_converse, compare_with_direct
from .verify import verify_theorem_lift, lift_threshold, w_power_layers
