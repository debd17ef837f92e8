import os
import json
import levelfrac.core.messages.messages as msg

DEFAULTS = {
    "threads": 0,
    "subdivision_depth": 6,
    "oracle_depth": 12,
    "strict": False,
    "default_method": "analytic",
}

CONFIG_ENV = "LEVELFRAC_CONFIG"


class Config(dict):
    """Config class to manage levelfrac configurations"""

    def __init__(self, *args, **kwargs):
        """
        Initialize configuration.

        The file is $HOME/.levelfrac/config.json unless LEVELFRAC_CONFIG names another one.

        :param args:
        :param kwargs:
        """
        config_file = os.getenv(CONFIG_ENV)
        if not config_file:
            config_file = os.path.join(os.getenv("HOME", "."), ".levelfrac", "config.json")

        self.config_file = config_file
        self.config_dir = os.path.dirname(os.path.abspath(config_file))

        super(Config, self).__init__(DEFAULTS)
        self.update(*args, **kwargs)

    def load(self) -> int:
        """
        Load levelfrac configurations, writing the defaults on first use.

        :return: int status code
        """
        if not os.path.isfile(self.config_file):
            self.first_configuration()
            return 0

        try:
            with open(self.config_file, "r") as cfg:
                stored = json.loads(cfg.read() or "{}")
        except (OSError, ValueError) as e:
            msg.Prints.warning("ignoring unreadable configuration {}: {}".format(self.config_file, e))
            return 1

        unknown = set(stored) - set(DEFAULTS)
        if unknown:
            msg.Prints.warning("unknown configuration keys: {}".format(", ".join(sorted(unknown))))
        self.update({k: v for k, v in stored.items() if k in DEFAULTS})
        return 0

    def save(self) -> None:
        """
        Save levelfrac configuration.

        :return: None
        """
        if not os.path.isdir(self.config_dir):
            os.makedirs(self.config_dir)

        with open(self.config_file, "w") as cfg:
            cfg.write(json.dumps(self, indent=2))

    def first_configuration(self) -> None:
        """
        Write the default configuration, silently skipping read-only homes.

        :return: None
        """
        try:
            self.save()
        except OSError:
            pass

    def get_int(self, key: str, override: int = None) -> int:
        """
        Integer setting, with a command-line override taking precedence.

        :param str key: configuration key
        :param int override: value given on the command line
        :return int: setting
        """
        return int(override) if override is not None else int(self[key])
