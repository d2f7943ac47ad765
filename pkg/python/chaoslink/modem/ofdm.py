import collections
import math

import numpy

from chaoslink.modem.constellation import get_constellation
from chaoslink.utilities import (ConfigurationError, DEFAULT_CP_LENGTH, DEFAULT_FFT_LENGTH, DEFAULT_MAPPING,
                                 DegenerateSignalError, DimensionMismatchError)

__all__ = ["OfdmConfig", "ofdm_demodulate", "ofdm_modulate"]

class OfdmConfig(collections.namedtuple("OfdmConfig", "fft_length cp_length mapping symbol_interval")):
    """OFDM modem settings.

    Attributes
    ----------
    fft_length : int
        The number of subcarriers N, a power of two.
    cp_length : int
        The cyclic prefix length, 0 <= cp_length < N.
    mapping : str
        The constellation, qpsk or psk16.
    symbol_interval : float
        The OFDM symbol duration Ts in abstract time units.
    """
    __slots__ = ()

    def __new__(cls, fft_length=DEFAULT_FFT_LENGTH, cp_length=DEFAULT_CP_LENGTH, mapping=DEFAULT_MAPPING,
                symbol_interval=1.0):
        fft_length = int(fft_length)
        cp_length = int(cp_length)
        if fft_length < 1 or fft_length & (fft_length - 1):
            raise ConfigurationError("FFT length must be a power of two, got {}".format(fft_length))
        if not 0 <= cp_length < fft_length:
            raise ConfigurationError("Cyclic prefix length must be in [0, {}), got {}".format(fft_length,
                                                                                           cp_length))
        symbol_interval = float(symbol_interval)
        if not math.isfinite(symbol_interval) or symbol_interval <= 0.0:
            raise ConfigurationError("Symbol interval must be positive, got {}".format(symbol_interval))
        get_constellation(mapping)
        return super(OfdmConfig, cls).__new__(cls, fft_length, cp_length, mapping, symbol_interval)

    @property
    def constellation(self):
        return get_constellation(self.mapping)

    @property
    def bits_per_block(self):
        """int: The payload bits carried by one OFDM symbol.
        """
        return self.fft_length * self.constellation.bits_per_symbol

    @property
    def samples_per_block(self):
        return self.fft_length + self.cp_length

    def sample_times(self, with_prefix=False):
        """Sample instants k Ts / N of one OFDM symbol.

        Parameters
        ----------
        with_prefix : bool, optional
            Start the time axis at the first cyclic prefix sample (negative times).

        Returns
        -------
        numpy.ndarray
        """
        start = -self.cp_length if with_prefix else 0
        return numpy.arange(start, self.fft_length) * self.symbol_interval / self.fft_length

def ofdm_modulate(symbols, cfg):
    """Turn blocks of N frequency-domain symbols into time samples with a cyclic prefix.

    The body is the inverse DFT with the 1/N factor, s(k) = 1/N sum_n x(n) exp(2 pi j n k / N),
    and its last cp_length samples are prepended.

    Parameters
    ----------
    symbols : array_like
        One block of N symbols, or an array of shape (blocks, N).
    cfg : OfdmConfig
        The modem settings.

    Returns
    -------
    numpy.ndarray
        N + cp_length samples per block, same leading shape as the input.
    """
    symbols = numpy.asarray(symbols, dtype=complex)
    if symbols.shape[-1:] != (cfg.fft_length,):
        raise DimensionMismatchError("OFDM blocks need {} symbols, got shape {}".format(cfg.fft_length,
                                                                                      symbols.shape))
    if not numpy.all(numpy.isfinite(symbols)):
        raise DegenerateSignalError("OFDM symbols must be finite")
    body = numpy.fft.ifft(symbols, axis=-1)
    prefix = body[..., cfg.fft_length - cfg.cp_length:]
    return numpy.concatenate((prefix, body), axis=-1)

def ofdm_demodulate(samples, cfg):
    """Drop the cyclic prefix and return to the frequency domain with the unscaled DFT.

    Parameters
    ----------
    samples : array_like
        N + cp_length samples, or an array of shape (blocks, N + cp_length).
    cfg : OfdmConfig
        The modem settings.

    Returns
    -------
    numpy.ndarray
        N symbols per block.
    """
    samples = numpy.asarray(samples, dtype=complex)
    if samples.shape[-1:] != (cfg.samples_per_block,):
        raise DimensionMismatchError("OFDM blocks need {} samples, got shape {}".format(cfg.samples_per_block,
                                                                                      samples.shape))
    if not numpy.all(numpy.isfinite(samples)):
        raise DegenerateSignalError("OFDM samples must be finite")
    return numpy.fft.fft(samples[..., cfg.cp_length:], axis=-1)
