"""
Optional INI configuration for the parideals CLI.

Reads ``parideals.ini`` from the current directory.  Supported keys in the
``[parideals]`` section: threads (int), format (pretty|json|csv), verbose (bool).
Values that fail to parse are ignored so a broken file never stops the tool.
"""

import configparser
from pathlib import Path
from typing import Any, Dict

# Global dictionary for configuration values.
_config: Dict[str, Any] = {}

SECTION = "parideals"
FORMATS = ("pretty", "json", "csv")


def _load_config(path: Path = Path.cwd() / "parideals.ini") -> Dict[str, Any]:
    """Parse *path* into a fresh dict of recognised settings."""
    values: Dict[str, Any] = {}
    parser = configparser.ConfigParser()
    if path.is_file():
        try:
            parser.read(path)
        except configparser.Error:
            return values
    if not parser.has_section(SECTION):
        return values
    if parser.has_option(SECTION, "threads"):
        try:
            values["threads"] = max(0, parser.getint(SECTION, "threads"))
        except ValueError:
            pass
    if parser.has_option(SECTION, "format"):
        fmt = parser.get(SECTION, "format").strip().lower()
        if fmt in FORMATS:
            values["format"] = fmt
    if parser.has_option(SECTION, "verbose"):
        try:
            values["verbose"] = parser.getboolean(SECTION, "verbose")
        except ValueError:
            pass
    return values


_config.update(_load_config())
