"""Utility functions for managing files."""

from pathlib import Path

import yaml

from tdgmine.parser import parse_corpus
from tdgmine.emit import emit_corpus
from tdgmine.settings import make_config

###################################################################################################
###################################################################################################

TRACE_EXT = '.trace'


def load_corpus(file_path):
    """Load a corpus from a trace file."""

    with open(file_path, 'r', encoding='utf-8') as trace_file:
        return parse_corpus(trace_file.read())


def save_corpus(corpus, file_path):
    """Save a corpus to a trace file, as UTF-8 with LF line endings."""

    with open(file_path, 'w', encoding='utf-8', newline='\n') as trace_file:
        trace_file.write(emit_corpus(corpus))


def load_config(file_path):
    """Load run settings from a YAML file into a Config.

    Parameters
    ----------
    file_path : str or Path
        Path to the YAML file.

    Returns
    -------
    Config
        Configuration, with defaults for settings not in the file.
    """

    with open(file_path, 'r', encoding='utf-8') as config_file:
        settings = yaml.safe_load(config_file)

    return make_config(settings)


def save_report(report, file_path):
    """Save a report dictionary as a YAML file, with sorted keys."""

    with open(file_path, 'w', encoding='utf-8', newline='\n') as report_file:
        yaml.safe_dump(report, report_file, sort_keys=True, default_flow_style=False)


def load_report(file_path):
    """Load a report dictionary from a YAML file."""

    with open(file_path, 'r', encoding='utf-8') as report_file:
        return yaml.safe_load(report_file)


def get_files(folder, ext=TRACE_EXT):
    """Get a sorted list of the names of files in a folder with a given extension."""

    return sorted(path.name for path in Path(folder).iterdir()
                  if path.is_file() and path.suffix == ext)
