import collections
import configparser
import logging
import os

from chaoslink.pipeline.pipeline_config import PipelineConfig
from chaoslink.setup.prog_config import format_option
from chaoslink.utilities import ConfigurationError, get_version

__all__ = ["FrameHeader", "RunManifest", "manifest_path"]

log = logging.getLogger("pipeline.RunManifest")

FrameHeader = collections.namedtuple("FrameHeader", "height width payload_bits pad_bits")
"""Bookkeeping of a transmitted image, kept out of band.

Attributes
----------
height, width : int
    The image dimensions.
payload_bits : int
    The image bits sent, 8 * height * width.
pad_bits : int
    Zero bits appended to fill the last OFDM symbol.
"""

MANIFEST_SECTIONS = ("run", "config", "seeds", "files", "metrics")

def manifest_path(out_dir, command):
    """str: Where a command writes its manifest, <out_dir>/<command>_manifest.ini.
    """
    return os.path.join(out_dir, "{}_manifest.ini".format(command.replace("-", "_")))

class RunManifest(object):
    """Everything needed to repeat one pipeline command and check its outputs.

    The manifest holds no timestamps, so repeating a run rewrites it byte for byte.

    Attributes
    ----------
    command : str
        The pipeline command.
    config : PipelineConfig
        The resolved settings.
    seeds : collections.OrderedDict
        The master seed and the seed of every channel realization.
    files : collections.OrderedDict
        Output label to file path.
    metrics : collections.OrderedDict
        Summary values of the run.
    frame : FrameHeader or None
        The bookkeeping of a transmitted image.
    """

    def __init__(self, command, config):
        self.command = command
        self.config = config
        self.seeds = collections.OrderedDict()
        self.files = collections.OrderedDict()
        self.metrics = collections.OrderedDict()
        self.frame = None

    def add_file(self, label, filename):
        self.files[label] = filename

    def add_metric(self, name, value):
        self.metrics[name] = value

    def add_seed(self, name, seed):
        self.seeds[name] = int(seed)

    def missing_files(self):
        """list[str]: Listed files that do not exist.
        """
        return [f for f in self.files.values() if not os.path.exists(f)]

    def to_parser(self):
        parser = configparser.ConfigParser(interpolation=None)
        parser.optionxform = str
        parser.add_section("run")
        parser.set("run", "command", self.command)
        parser.set("run", "version", get_version())
        if self.frame is not None:
            for name, value in zip(FrameHeader._fields, self.frame):
                parser.set("run", name, str(value))
        parser.add_section("config")
        for name, text in self.config.to_items():
            parser.set("config", name, text)
        for section, values in (("seeds", self.seeds), ("files", self.files), ("metrics", self.metrics)):
            parser.add_section(section)
            for name, value in values.items():
                parser.set(section, name, format_option(value))
        return parser

    def write(self, filename):
        """Write the manifest as an INI file.

        Parameters
        ----------
        filename : str
            The manifest file.
        """
        with open(filename, "w") as mfile:
            self.to_parser().write(mfile)
        log.debug("Wrote manifest {}".format(filename))

    @classmethod
    def read(cls, filename):
        """Read a manifest back.

        Metric values are returned as text.

        Parameters
        ----------
        filename : str
            The manifest file.

        Returns
        -------
        RunManifest

        Raises
        ------
        ConfigurationError
            The file is not a pipeline manifest.
        """
        parser = configparser.ConfigParser(interpolation=None)
        parser.optionxform = str
        try:
            if not parser.read(filename):
                raise IOError("Cannot read manifest {}".format(filename))
        except (configparser.Error, UnicodeDecodeError) as err:
            raise ConfigurationError("{} is not a run manifest: {}".format(filename, err))
        missing = [s for s in MANIFEST_SECTIONS if not parser.has_section(s)]
        if missing or not parser.has_option("run", "command"):
            raise ConfigurationError("{} is not a run manifest".format(filename))

        manifest = cls(parser.get("run", "command"), PipelineConfig.from_items(parser.items("config")))
        if all(parser.has_option("run", name) for name in FrameHeader._fields):
            manifest.frame = FrameHeader(*[parser.getint("run", name) for name in FrameHeader._fields])
        for name, value in parser.items("seeds"):
            manifest.add_seed(name, value)
        for name, value in parser.items("files"):
            manifest.add_file(name, value)
        for name, value in parser.items("metrics"):
            manifest.add_metric(name, value)
        return manifest
