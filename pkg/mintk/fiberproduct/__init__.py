from .ring import FiberProductRing, fiber_product
from .lift import lift_complex
from .moore import MooreResolution, FocusBlock, moore_resolution, compare_with_direct, word_text, tensor_degrees
from .verify import verify_theorem_fp, theorem_bound, periodicity_onset
