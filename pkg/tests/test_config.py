import logging
import logging.handlers

import pytest
import yaml

from config.config_manager import CAP_ENV_VAR, DEFAULT_NILPOTENCY_CAP, ConfigManager
from config.logging_config import LoggingConfig
from errors import ConfigError


def write_config(path, **overrides):
    config = ConfigManager(str(path.parent / 'defaults.yaml')).config
    for key, value in overrides.items():
        section, name = key.split('__')
        config[section][name] = value
    path.write_text(yaml.dump(config, allow_unicode=True), encoding='utf-8')
    return path


def test_missing_config_is_created(tmp_path):
    path = tmp_path / 'conf' / 'config.yaml'
    manager = ConfigManager(str(path))
    assert path.exists()
    assert manager.get('lnd.nilpotency_cap') == DEFAULT_NILPOTENCY_CAP
    assert manager.get_output_format() == 'text'
    assert manager.get('surface.f') == 'X^2 - 1'


def test_empty_config_uses_defaults(tmp_path):
    path = tmp_path / 'config.yaml'
    path.write_text('', encoding='utf-8')
    assert ConfigManager(str(path)).get('verify.thread_pool_size') == 0


def test_optional_sections_are_filled(tmp_path):
    path = tmp_path / 'config.yaml'
    path.write_text(yaml.dump({'surface': {'file': ''}, 'logging': {'level': 'INFO'}}), encoding='utf-8')
    manager = ConfigManager(str(path))
    assert manager.get_nilpotency_cap() == DEFAULT_NILPOTENCY_CAP
    assert manager.get_report_config()['sample_size'] == 50


def test_malformed_yaml(tmp_path):
    path = tmp_path / 'config.yaml'
    path.write_text('surface: [unclosed', encoding='utf-8')
    with pytest.raises(ConfigError):
        ConfigManager(str(path))


@pytest.mark.parametrize("overrides", [
    {'lnd__nilpotency_cap': 0},
    {'output__format': 'xml'},
    {'verify__thread_pool_size': -2},
    {'verify__trials': [1, 2]},
])
def test_invalid_values(tmp_path, overrides):
    path = write_config(tmp_path / 'config.yaml', **overrides)
    with pytest.raises(ConfigError):
        ConfigManager(str(path))


def test_get_and_set(tmp_path):
    path = tmp_path / 'config.yaml'
    manager = ConfigManager(str(path))
    assert manager.get('no.such.key', 'fallback') == 'fallback'
    manager.set('report.seed', 7)
    assert ConfigManager(str(path)).get('report.seed') == 7


def test_cap_precedence(tmp_path, monkeypatch):
    path = write_config(tmp_path / 'config.yaml', lnd__nilpotency_cap=10)
    manager = ConfigManager(str(path))
    monkeypatch.delenv(CAP_ENV_VAR, raising=False)
    assert manager.get_nilpotency_cap() == 10
    monkeypatch.setenv(CAP_ENV_VAR, '5')
    assert manager.get_nilpotency_cap() == 5
    assert manager.get_nilpotency_cap(3) == 3
    monkeypatch.setenv(CAP_ENV_VAR, 'many')
    with pytest.raises(ConfigError):
        manager.get_nilpotency_cap()
    with pytest.raises(ConfigError):
        manager.get_nilpotency_cap(0)


def test_logging_setup(tmp_path):
    log_file = tmp_path / 'logs' / 'toolkit.log'
    LoggingConfig.setup_logging({'level': 'INFO', 'log_file': str(log_file)})
    root = logging.getLogger()
    assert any(isinstance(h, logging.handlers.RotatingFileHandler) for h in root.handlers)
    assert log_file.exists()
    assert logging.getLogger('sympy').level == logging.WARNING

    LoggingConfig.setup_logging({'level': 'WARNING', 'log_file': ''})
    assert not any(isinstance(h, logging.handlers.RotatingFileHandler) for h in root.handlers)
    assert root.level == logging.WARNING


def test_invalid_log_level():
    with pytest.raises(ConfigError):
        LoggingConfig.setup_logging({'level': 'LOUD'})


def test_surface_file_relative_to_config(tmp_path):
    path = tmp_path / 'conf' / 'config.yaml'
    manager = ConfigManager(str(path))
    assert manager.get_surface_file() == ''
    manager.set('surface.file', 'surfaces/s.json')
    assert manager.get_surface_file() == str(tmp_path / 'conf' / 'surfaces' / 's.json')
    manager.set('surface.file', str(tmp_path / 'abs.json'))
    assert manager.get_surface_file() == str(tmp_path / 'abs.json')
