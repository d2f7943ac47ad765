import collections
import logging
import math

import numpy

from chaoslink.setup.log import LoggingLevel
from chaoslink.utilities import ConfigurationError, DegenerateSignalError

__all__ = ["ChannelModel", "awgn", "derive_seed"]

log = logging.getLogger("modem.channel")

class ChannelModel(collections.namedtuple("ChannelModel", "kind snr_db seed")):
    """An additive white Gaussian noise channel.

    Attributes
    ----------
    kind : str
        Always awgn.
    snr_db : float
        Signal-to-noise power ratio in dB over time-domain samples. +inf means noiseless.
    seed : int
        The noise generator seed.
    """
    __slots__ = ()

    def __new__(cls, snr_db, seed, kind="awgn"):
        if kind != "awgn":
            raise ConfigurationError("Only the awgn channel is available, got {}".format(kind))
        snr_db = float(snr_db)
        if math.isnan(snr_db) or snr_db == -math.inf:
            raise ConfigurationError("SNR must be a number or +inf, got {}".format(snr_db))
        if seed is None:
            raise ConfigurationError("A channel needs a seed")
        return super(ChannelModel, cls).__new__(cls, kind, snr_db, int(seed))

    @property
    def noiseless(self):
        return self.snr_db == math.inf

def derive_seed(seed, index):
    """Derive the seed of one task of a seeded batch.

    Parameters
    ----------
    seed : int
        The master seed.
    index : int
        The task position, e.g. an SNR grid index.

    Returns
    -------
    int
        A 32-bit seed that depends only on (seed, index).
    """
    return int(numpy.random.SeedSequence([int(seed), int(index)]).generate_state(1)[0])

def awgn(samples, channel):
    """Add circularly symmetric complex Gaussian noise.

    The per-sample noise variance is P / 10^(snr_db / 10), P being the measured mean power of
    the input, split equally between the real and imaginary parts.

    Parameters
    ----------
    samples : array_like
        The complex time samples.
    channel : ChannelModel
        The channel settings.

    Returns
    -------
    numpy.ndarray
        The noisy samples, or a copy of the input on a noiseless channel.
    """
    samples = numpy.asarray(samples, dtype=complex)
    if samples.size == 0:
        raise ConfigurationError("Cannot add noise to an empty signal")
    if channel.noiseless:
        return samples.copy()
    power = float(numpy.mean(numpy.abs(samples) ** 2))
    if power == 0.0:
        raise DegenerateSignalError("Signal has zero power, cannot scale noise to {} dB".format(
                                    channel.snr_db))
    variance = power / 10.0 ** (channel.snr_db / 10.0)
    rng = numpy.random.default_rng(channel.seed)
    noise = rng.standard_normal((2,) + samples.shape)
    log.log(LoggingLevel.TRACE.value, "Signal power {:.6g}, noise variance {:.6g}".format(power, variance))
    return samples + math.sqrt(variance / 2.0) * (noise[0] + 1j * noise[1])
