import random
from pathlib import Path

import pytest
import yaml

from algebra.field import FieldModulus
from checks.suites import SIGMA0, SIGMA1, standard_surface

ROOT = Path(__file__).parent


@pytest.fixture
def rational():
    return FieldModulus.rational()


@pytest.fixture
def phi3():
    return FieldModulus.cyclotomic(3)


@pytest.fixture
def phi4():
    return FieldModulus.cyclotomic(4)


@pytest.fixture
def sigma0():
    return standard_surface(SIGMA0)


@pytest.fixture
def sigma1():
    return standard_surface(SIGMA1)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def config_file(tmp_path):
    """指向 Σ₀ 的临时配置文件，不写日志文件"""
    path = tmp_path / 'config.yaml'
    config = {
        'surface': {'file': str(ROOT / 'conf' / 'surfaces' / 'sigma0.json')},
        'lnd': {'nilpotency_cap': 64},
        'output': {'format': 'text'},
        'report': {'sample_size': 20, 'seed': 0},
        'verify': {'thread_pool_size': 0, 'seed': 0, 'trials': {}},
        'logging': {'level': 'WARNING', 'log_file': ''},
    }
    path.write_text(yaml.dump(config, allow_unicode=True), encoding='utf-8')
    return path
