import collections
import math

import numpy

from chaoslink.cipher import KeyBundle
from chaoslink.hyperchaos import IntegratorConfig, SystemParams
from chaoslink.modem import ChannelModel, OfdmConfig, derive_seed
from chaoslink.setup.prog_config import PIPELINE_SETTINGS, format_option, parse_option
from chaoslink.utilities import (ConfigurationError, DEFAULT_BIFURCATION_RECORD,
                                 DEFAULT_BIFURCATION_TRANSIENT, DEFAULT_CP_LENGTH, DEFAULT_FFT_LENGTH,
                                 DEFAULT_GRID_COUNT, DEFAULT_GRID_START,
                                 DEFAULT_GRID_STOP, DEFAULT_LAYOUT, DEFAULT_LYAPUNOV_TOTAL,
                                 DEFAULT_LYAPUNOV_TRANSIENT, DEFAULT_MAPPING, DEFAULT_N0, DEFAULT_OUTPUT_DIR,
                                 DEFAULT_Q_EXPONENT, DEFAULT_ROUNDS, DEFAULT_SEED, DEFAULT_SNR_DB,
                                 DEFAULT_STEP_SIZE, DEFAULT_TRAJECTORY_STEPS, DEFAULT_WORKERS)

__all__ = ["DYNAMICS_KINDS", "PipelineConfig"]

DYNAMICS_KINDS = ("lyapunov", "bifurcation", "trajectory")

DEFAULTS = {
    "image": None,
    "key": None,
    "reference": None,
    "rounds": DEFAULT_ROUNDS,
    "n0": DEFAULT_N0,
    "q_exponent": DEFAULT_Q_EXPONENT,
    "step_size": DEFAULT_STEP_SIZE,
    "layout": DEFAULT_LAYOUT,
    "literal_key": False,
    "fft_length": DEFAULT_FFT_LENGTH,
    "cp_length": DEFAULT_CP_LENGTH,
    "mapping": DEFAULT_MAPPING,
    "snr_db": DEFAULT_SNR_DB,
    "snr_grid": None,
    "seed": DEFAULT_SEED,
    "kind": "lyapunov",
    "param": "r",
    "grid_start": DEFAULT_GRID_START,
    "grid_stop": DEFAULT_GRID_STOP,
    "grid_count": DEFAULT_GRID_COUNT,
    "transient": None,
    "total": None,
    "record": None,
    "out_dir": DEFAULT_OUTPUT_DIR,
    "dump_samples": False,
    "workers": DEFAULT_WORKERS,
}

KIND_COUNTS = {
    "lyapunov": (DEFAULT_LYAPUNOV_TRANSIENT, DEFAULT_LYAPUNOV_TOTAL, None),
    "bifurcation": (DEFAULT_BIFURCATION_TRANSIENT, None, DEFAULT_BIFURCATION_RECORD),
    "trajectory": (0, DEFAULT_TRAJECTORY_STEPS, None),
}
"""Transient, total and record step counts used when a dynamics run does not set them"""

class PipelineConfig(collections.namedtuple("PipelineConfig", list(PIPELINE_SETTINGS))):
    """The resolved settings of one pipeline run.

    Settings given as None take their built-in default. The defaults reproduce the reference
    simulation: 1024 subcarriers, a 256 sample cyclic prefix, QPSK over AWGN and a four
    round cipher.
    """
    __slots__ = ()

    def __new__(cls, **kwargs):
        unknown = set(kwargs) - set(PIPELINE_SETTINGS)
        if unknown:
            raise ConfigurationError("Unknown pipeline settings: {}".format(", ".join(sorted(unknown))))
        values = dict(DEFAULTS)
        values.update((k, v) for k, v in kwargs.items() if v is not None)
        if values["snr_grid"] is not None:
            values["snr_grid"] = tuple(float(v) for v in values["snr_grid"])
        values["snr_db"] = float(values["snr_db"])
        self = super(PipelineConfig, cls).__new__(cls, **values)
        self._validate()
        return self

    def _validate(self):
        grid = self.snr_grid
        if grid is not None:
            if not grid:
                raise ConfigurationError("SNR grid cannot be empty")
            if any(math.isnan(v) for v in grid) or any(b <= a for a, b in zip(grid, grid[1:])):
                raise ConfigurationError("SNR grid must be strictly increasing, got {}".format(list(grid)))
        if self.kind not in DYNAMICS_KINDS:
            raise ConfigurationError("Unknown dynamics kind {}. Choices are {}.".format(
                                     self.kind, ", ".join(DYNAMICS_KINDS)))
        if self.param not in SystemParams._fields:
            raise ConfigurationError("Unknown system parameter {}. Choices are {}.".format(
                                     self.param, ", ".join(SystemParams._fields)))
        if self.grid_count < 1:
            raise ConfigurationError("Parameter grid needs at least one point, got {}".format(
                                     self.grid_count))
        if self.grid_count > 1 and not self.grid_stop > self.grid_start:
            raise ConfigurationError("Parameter grid stop must exceed its start")
        if self.workers < 1:
            raise ConfigurationError("Need at least one worker, got {}".format(self.workers))
        OfdmConfig(self.fft_length, self.cp_length, self.mapping)
        self.new_key_bundle()

    @classmethod
    def from_options(cls, options):
        """Build the configuration from parsed command-line options.

        Parameters
        ----------
        options : argparse.Namespace
            Options not given on the command line (or in the configuration file) are None.

        Returns
        -------
        PipelineConfig
        """
        return cls(**{name: getattr(options, name, None) for name in PIPELINE_SETTINGS})

    @classmethod
    def from_items(cls, items):
        """Build the configuration from (name, text) pairs, e.g. a manifest section.
        """
        return cls(**{name: parse_option(name, text) for name, text in items})

    def to_items(self):
        """list[(str, str)]: Every setting in text form, in a fixed order.
        """
        return [(name, format_option(getattr(self, name))) for name in PIPELINE_SETTINGS]

    @property
    def ofdm(self):
        return OfdmConfig(self.fft_length, self.cp_length, self.mapping)

    @property
    def integrator(self):
        return IntegratorConfig(self.step_size)

    def new_key_bundle(self):
        """Create an empty key bundle carrying the cipher settings.
        """
        return KeyBundle(self.rounds, self.n0, self.q_exponent, self.step_size, self.layout)

    @property
    def snr_points(self):
        """tuple: The SNR grid when set, else the single SNR.
        """
        return self.snr_grid if self.snr_grid is not None else (self.snr_db,)

    def channel(self, index):
        """The channel of grid point ``index``, seeded with derive_seed(seed, index).
        """
        return ChannelModel(self.snr_points[index], derive_seed(self.seed, index))

    @property
    def parameter_grid(self):
        """numpy.ndarray: The bifurcation grid, evenly spaced over [grid_start, grid_stop].
        """
        if self.grid_count == 1:
            return numpy.array([self.grid_start])
        return numpy.linspace(self.grid_start, self.grid_stop, self.grid_count)

    @property
    def step_counts(self):
        """(int, int, int): Transient, total and record steps of the dynamics run.
        """
        transient, total, record = KIND_COUNTS[self.kind]
        return (self.transient if self.transient is not None else transient,
                self.total if self.total is not None else total,
                self.record if self.record is not None else record)
