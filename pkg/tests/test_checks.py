import pytest
import yaml

from checks.example import load_goldens, run_example_check
from checks.monitor import CheckMonitor
from checks.runner import SuiteRunner
from checks.suites import SUITES
from errors import ConfigError

SMALL_TRIALS = {
    'canonical_nilpotency': 3,
    'lnd_classifier': 6,
    'kernel_theorem': 20,
    'unity_decomposition': 20,
    'root_of_unity_identity': 1,
    'automorphism_group': 4,
    'filtration': 4,
    'normal_form': 10,
}


def test_monitor_statistics():
    monitor = CheckMonitor()
    monitor.start_check('a', 'normal_form')
    monitor.start_check('b', 'filtration')
    assert monitor.get_statistics()['running_count'] == 2
    monitor.complete_check('a', True, details={'trials': 3})
    monitor.complete_check('b', False, error='1 处违例')
    monitor.complete_check('unknown', True)

    stats = monitor.get_statistics()
    assert (stats['total_executed'], stats['success_count'], stats['failed_count']) == (2, 1, 1)
    assert monitor.check_history[0]['details'] == {'trials': 3}
    assert [c['check_name'] for c in monitor.check_history] == ['normal_form', 'filtration']


def test_monitor_history_limit():
    monitor = CheckMonitor(max_history=2)
    for n in range(3):
        monitor.start_check(str(n), f"suite{n}")
        monitor.complete_check(str(n), True)
    assert [c['check_id'] for c in monitor.check_history] == ['1', '2']
    assert monitor.get_statistics()['total_executed'] == 2


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes(name):
    [result] = SuiteRunner(seed=1, trials=SMALL_TRIALS).run([name])
    assert result.passed, result.details
    assert result.trials == SMALL_TRIALS[name]


def test_threaded_run_matches_sequential():
    names = ['normal_form', 'kernel_theorem', 'unity_decomposition']
    sequential = SuiteRunner(thread_pool_size=0, seed=5, trials=SMALL_TRIALS).run(names)
    monitor = CheckMonitor()
    threaded = SuiteRunner(thread_pool_size=2, seed=5, trials=SMALL_TRIALS, monitor=monitor).run(names)
    assert [r.describe() for r in sequential] == [r.describe() for r in threaded]
    assert monitor.get_statistics()['success_count'] == 3


def test_unknown_suite():
    with pytest.raises(ConfigError):
        SuiteRunner().run(['no_such_suite'])


def test_example_check():
    report = run_example_check()
    assert report['status'] == 'PASS'
    assert report['failures'] == 'none'
    assert report['printed_h_y'] == 'match'
    assert report['relation_residue'] == '0'
    assert report['h_x'] == 'X'
    assert report['unity_decomposition'] == 'i=2, s=4, h=X^5 + 2*X^4 + X^2 - 2'


def test_example_check_detects_bad_golden(tmp_path):
    goldens = load_goldens()
    goldens['h_y'] = 'Y'
    path = tmp_path / 'example.yaml'
    path.write_text(yaml.dump(goldens, allow_unicode=True), encoding='utf-8')
    report = run_example_check(path)
    assert report['status'] == 'FAIL'
    assert report['failures'] == 'h_y'


def test_missing_goldens(tmp_path):
    with pytest.raises(ConfigError):
        load_goldens(tmp_path / 'missing.yaml')
