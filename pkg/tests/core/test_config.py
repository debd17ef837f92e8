import json
from levelfrac.core.config.config import Config, DEFAULTS


def test_first_load_writes_defaults(isolated_config):
    cfg = Config()
    assert cfg.load() == 0
    assert json.loads(isolated_config.read_text()) == DEFAULTS


def test_load_keeps_known_keys(isolated_config):
    isolated_config.parent.mkdir(parents=True)
    isolated_config.write_text(json.dumps({"threads": 3, "colour": "blue"}))
    cfg = Config()
    assert cfg.load() == 0
    assert cfg["threads"] == 3
    assert "colour" not in cfg
    assert cfg["subdivision_depth"] == DEFAULTS["subdivision_depth"]


def test_unreadable_config_keeps_defaults(isolated_config):
    isolated_config.parent.mkdir(parents=True)
    isolated_config.write_text("{not json")
    cfg = Config()
    assert cfg.load() == 1
    assert dict(cfg) == DEFAULTS


def test_get_int_override():
    cfg = Config(threads=2)
    assert cfg.get_int("threads") == 2
    assert cfg.get_int("threads", 5) == 5
    assert cfg.get_int("threads", 0) == 0
