import os
import sys
import argparse
from typing import Optional, Union

from mintk import logger
from mintk.errors import CapTooLowError, ScenarioParseError
from .scenario import Scenario
from .builder import Builder
from .tasks import TaskResult, ERROR, run_task
from .report import Report


def _error_result(decl, e: Exception) -> TaskResult:
    message = str(e)
    if isinstance(e, CapTooLowError) and e.suggested_cap is not None:
        message += ' (rerun with --cap %i)' % e.suggested_cap
    result = TaskResult(decl.name, decl.type, ERROR, ['ERROR %s: %s' % (decl.name, message)])
    result.summary['error'] = message
    return result


def run_scenario(scenario: Union[str, Scenario], seed: Optional[int] = None, cap: Optional[int] = None) -> Report:
    '''
    Run the tasks of a scenario in order.

    A task that raises is reported as an error and the remaining tasks still run.

    Parameters
    ----------
    scenario : str or Scenario
        A path or name looked up on the scenario search path, or a parsed scenario
    seed : int, optional
        Overrides the `seed` setting
    cap : int, optional
        Overrides the `degree_cap` setting

    Returns
    -------
    report : Report

    Raises
    ------
    ScenarioParseError
        If the file does not parse
    '''
    if not isinstance(scenario, Scenario):
        scenario = Scenario.open(scenario)
    builder = Builder(scenario, seed=seed, degree_cap=cap)
    report = Report(scenario.name, builder.seed)
    for decl in scenario.tasks:
        try:
            result = run_task(builder, decl)
        except Exception as e:
            logger.error('Task %s failed: %s: %s' % (decl.name, type(e).__name__, e))
            result = _error_result(decl, e)
        logger.info('Task %s: %s' % (decl.name, result.status))
        report.results.append(result)
    return report


def parse_args(argv=None):
    parser = argparse.ArgumentParser(prog='mintk-scenario', formatter_class=argparse.ArgumentDefaultsHelpFormatter,
                                     description='Run scenarios of minimal resolutions and ideals of minors')
    sub = parser.add_subparsers(dest='command', required=True)
    run = sub.add_parser('run', help='run one scenario file',
                         formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    run.add_argument('scenario', type=str, help='scenario file, or the name of a bundled scenario')
    run.add_argument('--seed', type=int, help='seed of the randomized tasks, overrides the scenario setting')
    run.add_argument('--cap', type=int, help='global degree cap, overrides the scenario setting')
    run.add_argument('--report', default='text', choices=['text', 'structured'], help='report format')
    check = sub.add_parser('check-all', help='run every scenario on the search path')
    check.add_argument('--seed', type=int, help='seed of the randomized tasks')
    check.add_argument('--skip', nargs='+', default=[], type=str, help='names of scenarios to leave out')
    return parser.parse_args(argv)


def main(argv=None) -> int:
    '''
    Command line entry point.

    Returns
    -------
    code : int
        0 if every assertion holds and is certified, 2 if some assertion is inconclusive,
        1 if one is falsified or an error occurred
    '''
    args = parse_args(argv)
    if args.command == 'run':
        try:
            report = run_scenario(args.scenario, seed=args.seed, cap=args.cap)
        except (ScenarioParseError, FileNotFoundError, ValueError) as e:
            print('ERROR %s: %s' % (args.scenario, e))
            return 1
        sys.stdout.write(report.to_text() if args.report == 'text' else report.to_records())
        return report.exit_code

    code = 0
    for path in Scenario.bundled():
        name = os.path.splitext(os.path.basename(path))[0]
        if name in args.skip:
            continue
        try:
            report = run_scenario(path, seed=args.seed)
        except (ScenarioParseError, ValueError) as e:
            print('ERROR %s: %s' % (name, e))
            code = 1
            continue
        print('%-28s %s' % (name, report.status))
        if report.exit_code == 1 or (report.exit_code == 2 and code == 0):
            code = report.exit_code
    return code


if __name__ == '__main__':
    sys.exit(main())
