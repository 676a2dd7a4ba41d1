from .module import GradedFreeModule, GradedMatrix, ModulePresentation
from .minimalize import minimalize, select_minimal_columns
from .syzygy import syzygy_step, kernel_generators, default_cap, DEFAULT_DEGREE_SLACK
from .resolution import Resolution, minimal_resolution, betti_growth_check, BettiGrowthReport
from .complex import verify_exactness, check_complex, ExactnessReport
from .dual import dual_presentation
