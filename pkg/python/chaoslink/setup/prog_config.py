import collections
import configparser
import logging
import os

from chaoslink.utilities import ConfigurationError, expand_path

__all__ = ["FILE_SECTIONS", "PIPELINE_SETTINGS", "apply_file_config", "format_option", "parse_option",
           "read_file_config", "write_file_config"]

CONFIG_FILE_NAME = "chaoslink"

log = logging.getLogger("setup.prog_config")

def _to_bool(text):
    try:
        return configparser.ConfigParser.BOOLEAN_STATES[text.strip().lower()]
    except KeyError:
        raise ConfigurationError("Not a boolean value: {}".format(text))

def _to_float_tuple(text):
    return tuple(float(v) for v in text.replace(",", " ").split())

PIPELINE_SETTINGS = collections.OrderedDict([
    ("image", ("input", str)),
    ("key", ("input", str)),
    ("reference", ("input", str)),
    ("rounds", ("cipher", int)),
    ("n0", ("cipher", int)),
    ("q_exponent", ("cipher", int)),
    ("step_size", ("cipher", float)),
    ("layout", ("cipher", str)),
    ("literal_key", ("cipher", _to_bool)),
    ("fft_length", ("ofdm", int)),
    ("cp_length", ("ofdm", int)),
    ("mapping", ("ofdm", str)),
    ("snr_db", ("channel", float)),
    ("snr_grid", ("channel", _to_float_tuple)),
    ("seed", ("channel", int)),
    ("kind", ("dynamics", str)),
    ("param", ("dynamics", str)),
    ("grid_start", ("dynamics", float)),
    ("grid_stop", ("dynamics", float)),
    ("grid_count", ("dynamics", int)),
    ("transient", ("dynamics", int)),
    ("total", ("dynamics", int)),
    ("record", ("dynamics", int)),
    ("out_dir", ("output", str)),
    ("dump_samples", ("output", _to_bool)),
    ("workers", ("output", int)),
])
"""Section and text converter of every pipeline setting"""

TRACKING_SETTINGS = collections.OrderedDict([
    ("track", ("tracking", _to_bool)),
    ("db_path", ("tracking", str)),
])

FILE_SECTIONS = ("cipher", "ofdm", "channel", "dynamics", "output", "tracking")
"""Sections read from the program configuration file. Input files are always given per run."""

def _all_settings():
    settings = collections.OrderedDict(PIPELINE_SETTINGS)
    settings.update(TRACKING_SETTINGS)
    return settings

def format_option(value):
    """Render a setting for a configuration or manifest file.

    Parameters
    ----------
    value : object
        A setting value.

    Returns
    -------
    str
        An empty string for None.
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (tuple, list)):
        return ", ".join(repr(float(v)) for v in value)
    return str(value)

def parse_option(name, text):
    """Convert the text form of a setting back to its value.

    Parameters
    ----------
    name : str
        The setting name.
    text : str
        The text from a configuration or manifest file.

    Returns
    -------
    object
        None for an empty string.
    """
    try:
        _, converter = _all_settings()[name]
    except KeyError:
        raise ConfigurationError("Unknown pipeline setting: {}".format(name))
    text = text.strip()
    if text == "":
        return None
    try:
        return converter(text)
    except ValueError:
        raise ConfigurationError("Bad value for {}: {}".format(name, text))

def apply_file_config(config, options):
    """Apply configuration file values to the command-line options.

    Only options left unset on the command line are filled, so a flag always wins over the
    file.

    Parameters
    ----------
    config : configparser.ConfigParser
        The configuration file instance.
    options : argparse.Namespace
        The command-line options instance.
    """
    for section in config.sections():
        if section not in FILE_SECTIONS:
            log.warning("Ignoring unknown configuration section [{}]".format(section))
    for name, (section, _) in _all_settings().items():
        if section not in FILE_SECTIONS or not config.has_option(section, name):
            continue
        if getattr(options, name, None) is None:
            setattr(options, name, parse_option(name, config.get(section, name)))

def write_file_config(options, conf_dir=None):
    """Write a configuration file from the given options.

    Parameters
    ----------
    options : argparse.Namespace
        The options from ArgumentParser. Unset options are left out.
    conf_dir : str, optional
        A directory for saving the configuration file in. Default is $HOME/.config.

    Returns
    -------
    str
        The written file.
    """
    parser = configparser.ConfigParser(interpolation=None)
    for name, (section, _) in _all_settings().items():
        value = getattr(options, name, None)
        if section not in FILE_SECTIONS or value is None:
            continue
        if not parser.has_section(section):
            parser.add_section(section)
        parser.set(section, name, format_option(value))

    if conf_dir is None:
        conf_dir = expand_path(os.path.join("$HOME", ".config"))
    filename = os.path.join(conf_dir, CONFIG_FILE_NAME)
    with open(filename, 'w') as cfile:
        parser.write(cfile)
    return filename

def read_file_config(conf_file=None, conf_dir=None):
    """Read in a configuration file.

    Parameters
    ----------
    conf_file : str, optional
        The name of the configuration file. Default is chaoslink.
    conf_dir : str, optional
        The directory location of the configuration file. Default is $HOME/.config

    Returns
    -------
    configparser.ConfigParser or None
        None when the file does not exist.
    """
    if conf_file is None:
        conf_file = CONFIG_FILE_NAME
    if conf_dir is None:
        conf_dir = expand_path(os.path.join("$HOME", ".config"))

    full_conf_file = os.path.join(conf_dir, conf_file)
    if not os.path.exists(full_conf_file):
        return None

    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read(full_conf_file)
    except configparser.Error as err:
        raise ConfigurationError("Cannot parse configuration file {}: {}".format(full_conf_file, err))
    return parser
