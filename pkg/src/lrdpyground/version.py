"""Version of the lrdpyground tool, written to every JSON artifact."""

__version__ = "0.1.0"
