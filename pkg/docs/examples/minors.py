from mintk.arith import make_field
from mintk.ring import RingPresentation
from mintk.resolution import ModulePresentation, minimal_resolution
from mintk.minors import minors_of_resolution, verdict_table

R = RingPresentation(make_field(101), ['x', 'y', 'z'], ['x*z', 'y*z'])
k = ModulePresentation.residue_field(R)
res = minimal_resolution(k, 6)
print(res.betti_table())

verdicts = [minors_of_resolution(res, n, 2) for n in range(2, 7)]
for v in verdicts:
    print(v.format())
print(verdict_table(verdicts))
