from .scenario import Scenario, Declaration
from .io import ScnReader
from .builder import Builder
from .properties import property_suite, PropertySuiteReport, PropertyFailure, counterexample, independent_columns
from .tasks import TaskResult, run_task, task_types, parse_expectation, match_expectation
from .report import Report
from .cli import run_scenario, main
