from .groebner import buchberger, spoly, reduce, minimalize, interreduce
from .ring import RingPresentation
from .ideal import GradedIdeal, IdealComparison, ideal_compare, max_ideal_power, socle
