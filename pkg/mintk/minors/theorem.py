from typing import Dict, List, Optional, Sequence

from .verdict import MinorVerdict, minors_onset

#: Report line of verifiers whose statement is local and is checked on graded rings
GRADED_NOTE = 'checked on a standard graded ring, the graded analogue of the local statement is assumed'


class TheoremReport:
    '''
    Outcome of checking a statement of the form "I_{n,r} = m^r for every n from a bound on" over a range of n.

    Attributes
    ----------
    theorem : str
        Short name of the statement checked
    subject : str
        The ring and module the statement was checked on
    bound : dict of int -> int
        The n from which equality is asserted, per minor size r
    verdicts : dict of int -> list of MinorVerdict
        Verdicts per minor size r, ordered by n
    status : str
        One of VERIFIED, FALSIFIED, INCONCLUSIVE
    notes : list of str
        Further report lines, e.g. growth checks and audits
    data : dict
        Structured values behind the notes
    '''

    #: Every asserted equality holds and is certified
    VERIFIED = 'verified'
    #: Some asserted equality fails on a certified step
    FALSIFIED = 'falsified'
    #: Neither of the above, e.g. the range stops before the bound or a failing step is truncated
    INCONCLUSIVE = 'inconclusive'

    _severity = {VERIFIED: 0, INCONCLUSIVE: 1, FALSIFIED: 2}

    def __init__(self, theorem, subject, bound: Dict[int, int], verdicts: Dict[int, List[MinorVerdict]],
                 status=None, notes: Optional[List[str]] = None, data: Optional[dict] = None):
        self.theorem = theorem
        self.subject = subject
        self.bound = bound
        self.verdicts = verdicts
        self.notes = list(notes or [])
        self.data = dict(data or {})
        if status is None:
            status = self.worst([judge(verdicts[r], bound[r]) for r in verdicts])
        self.status = status

    def __repr__(self):
        return '<TheoremReport: %s %s>' % (self.theorem, self.status)

    @classmethod
    def worst(cls, statuses: Sequence[str]) -> str:
        return max(statuses, key=lambda s: cls._severity[s], default=cls.INCONCLUSIVE)

    def downgrade(self, status, note=None):
        '''
        Lower the status to `status` if that is worse, recording why.
        '''
        self.status = self.worst([self.status, status])
        if note:
            self.notes.append(note)

    def onset(self, r) -> Optional[int]:
        return minors_onset(self.verdicts[r])

    def lines(self) -> List[str]:
        out = ['%s on %s' % (self.theorem, self.subject)]
        for r in sorted(self.verdicts):
            out.append('r = %i: bound n >= %i, onset %s' % (r, self.bound[r], self.onset(r)))
            out.extend('  ' + v.format() for v in self.verdicts[r])
        out.extend(self.notes)
        out.append('status: %s' % self.status)
        return out

    def records(self, task) -> List[dict]:
        out = []
        for r in sorted(self.verdicts):
            for v in self.verdicts[r]:
                rec = {'task': task}
                rec.update(v.to_record())
                out.append(rec)
        summary = {'task': task, 'summary': self.status, 'theorem': self.theorem,
                   'bound': {str(r): b for r, b in self.bound.items()},
                   'onset': {str(r): self.onset(r) for r in self.verdicts}}
        summary.update(self.data)
        out.append(summary)
        return out


def judge(verdicts: Sequence[MinorVerdict], bound) -> str:
    '''
    Status of the assertion "equal for every n >= bound" on the verdicts available.
    '''
    tail = [v for v in verdicts if v.n >= bound]
    if any(not v.is_equal and v.certified for v in tail):
        return TheoremReport.FALSIFIED
    if not tail or any(not v.is_equal for v in tail):
        return TheoremReport.INCONCLUSIVE
    return TheoremReport.VERIFIED
