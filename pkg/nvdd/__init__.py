from nvdd.config import config

name = "nvdd"

__version__ = "0.1.0"
