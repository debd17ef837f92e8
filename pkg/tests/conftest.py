import pytest


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Keep the configuration file of every test inside its temporary directory"""
    config_file = tmp_path / "levelfrac" / "config.json"
    monkeypatch.setenv("LEVELFRAC_CONFIG", str(config_file))
    return config_file
