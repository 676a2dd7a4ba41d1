import json
from typing import List

from .tasks import TaskResult, VERIFIED, FALSIFIED, INCONCLUSIVE, ERROR


class Report:
    '''
    The ordered results of the tasks of one scenario run.

    The text form lists every task with its report lines and status.
    The structured form is one JSON object per line: a record per verdict with the keys
    `task n r verdict ideal certified witness`, and after the verdicts of a task its summary record
    with the key `summary` holding the task status.

    Attributes
    ----------
    scenario : str
    seed : int
    results : list of TaskResult
    '''

    #: Exit code per overall status
    EXIT_CODES = {VERIFIED: 0, INCONCLUSIVE: 2, FALSIFIED: 1, ERROR: 1}

    def __init__(self, scenario, seed, results: List[TaskResult] = None):
        self.scenario = scenario
        self.seed = seed
        self.results = list(results or [])

    def __repr__(self):
        return '<Report: %s, %i tasks, %s>' % (self.scenario, len(self.results), self.status)

    @property
    def status(self) -> str:
        statuses = [r.status for r in self.results]
        if ERROR in statuses or FALSIFIED in statuses:
            return ERROR if ERROR in statuses else FALSIFIED
        if INCONCLUSIVE in statuses:
            return INCONCLUSIVE
        return VERIFIED

    @property
    def exit_code(self) -> int:
        return self.EXIT_CODES[self.status]

    def to_text(self) -> str:
        if not self.results:
            return ''
        out = []
        for result in self.results:
            if result.status == ERROR:
                out.extend(result.lines)
                continue
            out.append('== %s (%s) ==' % (result.name, result.type))
            out.extend(result.lines)
            out.append('%s: %s' % (result.name, result.status))
        out.append('scenario %s, seed %i: %s' % (self.scenario, self.seed, self.status))
        return '\n'.join(out) + '\n'

    def to_records(self) -> str:
        lines = []
        for result in self.results:
            for rec in result.records + [result.summary_record()]:
                lines.append(json.dumps(rec, ensure_ascii=False, default=str))
        return ''.join(line + '\n' for line in lines)
