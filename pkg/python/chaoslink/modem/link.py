import collections
from concurrent.futures import ThreadPoolExecutor
import logging
import math

import numpy

from chaoslink.modem.channel import ChannelModel, awgn, derive_seed
from chaoslink.modem.ofdm import ofdm_demodulate, ofdm_modulate
from chaoslink.setup.log import LoggingLevel
from chaoslink.utilities import ConfigurationError

__all__ = ["LinkReport", "LinkSignals", "Transmission", "ber_sweep", "transmit_bits"]

log = logging.getLogger("modem.link")

class LinkReport(collections.namedtuple("LinkReport", "snr_db bit_errors total_bits ber psnr_db")):
    """Bit error count of one transmission.

    Attributes
    ----------
    snr_db : float
        The channel SNR, +inf when noiseless.
    bit_errors : int
        Payload bits received wrong.
    total_bits : int
        Payload bits sent.
    ber : float
        bit_errors / total_bits, 0 for an empty payload.
    psnr_db : float or None
        Quality of the reconstructed image when the payload is one.
    """
    __slots__ = ()

    def __new__(cls, snr_db, bit_errors, total_bits, ber=None, psnr_db=None):
        if ber is None:
            ber = bit_errors / total_bits if total_bits else 0.0
        return super(LinkReport, cls).__new__(cls, float(snr_db), int(bit_errors), int(total_bits),
                                              float(ber), psnr_db)

    def with_psnr(self, psnr_db):
        return self._replace(psnr_db=psnr_db)

LinkSignals = collections.namedtuple("LinkSignals", "tx_symbols body with_prefix received rx_symbols")
"""Signals of the first OFDM symbol of a transmission, for plotting.

Attributes
----------
tx_symbols : numpy.ndarray
    The mapped constellation points.
body : numpy.ndarray
    The inverse DFT output.
with_prefix : numpy.ndarray
    The body with the cyclic prefix in front.
received : numpy.ndarray
    The samples after the channel.
rx_symbols : numpy.ndarray
    The demodulated constellation points.
"""

Transmission = collections.namedtuple("Transmission", "report received pad_bits signals")
"""Outcome of :func:`transmit_bits`: the report, the received payload bits, the number of
zero bits padded onto the last OFDM symbol and, on request, the first symbol's signals."""

def transmit_bits(bits, cfg, channel, keep_signals=False):
    """Send bits through map, IFFT, cyclic prefix, channel, FFT and demap.

    The payload is zero-padded to whole OFDM symbols; the padding is stripped on receive and
    does not count toward the errors.

    Parameters
    ----------
    bits : array_like
        The 0/1 payload, any length.
    cfg : OfdmConfig
        The modem settings.
    channel : ChannelModel
        The channel settings.
    keep_signals : bool, optional
        Keep the signals of the first OFDM symbol.

    Returns
    -------
    Transmission
    """
    bits = numpy.asarray(bits, dtype=numpy.uint8).ravel()
    if bits.size and numpy.any(bits > 1):
        raise ConfigurationError("Payload must hold only 0 and 1 values")
    if bits.size == 0:
        log.debug("Empty payload, nothing sent")
        return Transmission(LinkReport(channel.snr_db, 0, 0), bits.copy(), 0, None)

    constellation = cfg.constellation
    pad = -bits.size % cfg.bits_per_block
    frame = numpy.concatenate((bits, numpy.zeros(pad, dtype=numpy.uint8)))
    symbols = constellation.map(frame).reshape(-1, cfg.fft_length)
    tx = ofdm_modulate(symbols, cfg)
    rx = awgn(tx.ravel(), channel).reshape(tx.shape)
    rx_symbols = ofdm_demodulate(rx, cfg)
    received = constellation.demap(rx_symbols)[:bits.size]

    errors = int(numpy.count_nonzero(received != bits))
    report = LinkReport(channel.snr_db, errors, bits.size)
    log.log(LoggingLevel.EXTENSIVE.value, "SNR {} dB: {} OFDM symbols, {} pad bits, {} errors in {} "
            "bits".format(channel.snr_db, symbols.shape[0], pad, errors, bits.size))

    signals = None
    if keep_signals:
        signals = LinkSignals(symbols[0], tx[0, cfg.cp_length:], tx[0], rx[0], rx_symbols[0])
    return Transmission(report, received, pad, signals)

def ber_sweep(bits, cfg, snr_grid, seed, evaluate=None, workers=1):
    """Measure the bit error rate over a grid of SNR values.

    Point i uses the channel seed derive_seed(seed, i).

    Parameters
    ----------
    bits : array_like
        The payload sent at every point.
    cfg : OfdmConfig
        The modem settings.
    snr_grid : sequence of float
        Strictly increasing SNR values in dB.
    seed : int
        The master seed.
    evaluate : callable, optional
        Maps the received bits to a PSNR stored in the report.
    workers : int, optional
        Threads used across grid points. Reports keep grid order.

    Returns
    -------
    list[LinkReport]
    """
    grid = [float(v) for v in snr_grid]
    if not grid:
        raise ConfigurationError("SNR grid cannot be empty")
    if any(math.isnan(v) for v in grid) or any(b <= a for a, b in zip(grid, grid[1:])):
        raise ConfigurationError("SNR grid must be strictly increasing, got {}".format(grid))
    bits = numpy.asarray(bits, dtype=numpy.uint8).ravel()

    def run(index):
        channel = ChannelModel(grid[index], derive_seed(seed, index))
        result = transmit_bits(bits, cfg, channel)
        report = result.report
        if evaluate is not None:
            report = report.with_psnr(evaluate(result.received))
        log.info("SNR {} dB: BER {:.6g} ({} of {} bits)".format(report.snr_db, report.ber, report.bit_errors,
                                                              report.total_bits))
        return report

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(run, range(len(grid))))
    return [run(i) for i in range(len(grid))]
