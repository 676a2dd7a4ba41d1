from .ring import StretchedGorensteinRing, build_stretched
from .annihilator import find_annihilated_generator, residue_matrix
from .tracking import TrackedStep, TrackedResolution, tracked_resolution, designation_text
from .verify import verify_theorem_sg, theorem_bound, annihilated_seed, socle_witness, SocleWitness
