import os
import tempfile

import pytest
import toml

from orbispec.configuration import Configuration


@pytest.fixture(scope="function")
def temp_dotenv_file():

    with tempfile.NamedTemporaryFile(mode="w+", delete=False) as file:
        path = file.name

    before = set(os.environ)
    yield path
    os.remove(path)

    # load_dotenv writes straight into os.environ
    for key in set(os.environ) - before:
        if key.startswith("ORBISPEC_"):
            del os.environ[key]


def test_defaults():
    config = Configuration()

    assert config.truncation == 6
    assert config.truncation_cap == 12
    assert config.mode == "substitution"
    assert config.shift == "audit"
    assert config.order == 1
    assert config.n_max == 3
    assert config.workers == 1


def test_load_environment_config(temp_dotenv_file, monkeypatch):
    monkeypatch.setenv("ORBISPEC_TRUNCATION", "8")
    with open(temp_dotenv_file, "w+") as file:
        file.write("ORBISPEC_N_MAX=2\nORBISPEC_MODE=geometric")
    config = Configuration()
    config.load_environment(dotenv_file_path=temp_dotenv_file)
    assert config.truncation == 8
    assert config.n_max == 2
    assert config.mode == "geometric"


def test_env_variables_precedence(monkeypatch, temp_dotenv_file):
    monkeypatch.setenv("ORBISPEC_TRUNCATION_CAP", "9")
    with open(temp_dotenv_file, "w+") as file:
        file.write("ORBISPEC_TRUNCATION_CAP=31")

    config = Configuration()
    config.load_environment(dotenv_file_path=temp_dotenv_file)
    assert config.truncation_cap == 9


def test_load_file_config():
    with tempfile.NamedTemporaryFile(suffix="", delete=False) as temp:

        props = toml.load(temp.name)
        props["wreath_bound"] = 500
        props["shift"] = "reduced"

        with open(temp.name, "w") as config_file:
            toml.dump(props, config_file)
            config: Configuration = Configuration()

        config.load_config_file(temp.name)
        assert config.wreath_bound == 500
        assert config.shift == "reduced"

    os.remove(temp.name)
