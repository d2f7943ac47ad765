import math

import scipy.special

__all__ = ["ebn0_to_snr_db", "psk_ber_approx", "q_function", "qpsk_ber_theory", "snr_to_ebn0_db"]

def q_function(x):
    """Gaussian tail probability Q(x) = erfc(x / sqrt(2)) / 2.
    """
    return 0.5 * scipy.special.erfc(x / math.sqrt(2.0))

def _prefix_loss_db(cfg):
    return 10.0 * math.log10(cfg.samples_per_block / cfg.fft_length)

def ebn0_to_snr_db(ebn0_db, cfg, include_cp=False):
    """Convert Eb/N0 into the per-sample SNR the channel is driven with.

    With the 1/N inverse DFT and unscaled forward DFT, the per-subcarrier Es/N0 equals the
    time-domain sample SNR, so SNR = Eb/N0 + 10 log10(bits per symbol). When ``include_cp`` is
    set, the energy spent on the cyclic prefix is charged to the payload bits as well.

    Parameters
    ----------
    ebn0_db : float
        Energy per bit over noise density, dB.
    cfg : OfdmConfig
        The modem settings.
    include_cp : bool, optional
        Charge the cyclic prefix overhead.

    Returns
    -------
    float
    """
    snr = ebn0_db + 10.0 * math.log10(cfg.constellation.bits_per_symbol)
    if include_cp:
        snr -= _prefix_loss_db(cfg)
    return snr

def snr_to_ebn0_db(snr_db, cfg, include_cp=False):
    """Inverse of :func:`ebn0_to_snr_db`.
    """
    ebn0 = snr_db - 10.0 * math.log10(cfg.constellation.bits_per_symbol)
    if include_cp:
        ebn0 += _prefix_loss_db(cfg)
    return ebn0

def qpsk_ber_theory(ebn0_db):
    """Bit error rate of Gray-coded QPSK on AWGN, Q(sqrt(2 Eb/N0)).
    """
    return q_function(math.sqrt(2.0 * 10.0 ** (ebn0_db / 10.0)))

def psk_ber_approx(ebn0_db, order):
    """Nearest-neighbor approximation of the Gray-coded M-PSK bit error rate.

    Parameters
    ----------
    ebn0_db : float
        Energy per bit over noise density, dB.
    order : int
        The constellation size M.

    Returns
    -------
    float
    """
    if order == 4:
        return qpsk_ber_theory(ebn0_db)
    k = math.log2(order)
    esn0 = k * 10.0 ** (ebn0_db / 10.0)
    return 2.0 / k * q_function(math.sqrt(2.0 * esn0) * math.sin(math.pi / order))
