# Checks module: property suites, the built-in example and the suite runner

from .monitor import CheckMonitor
from .runner import SuiteRunner
from .example import run_example_check

__all__ = ['CheckMonitor', 'SuiteRunner', 'run_example_check']
