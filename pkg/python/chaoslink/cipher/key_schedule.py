import logging
import math

import numpy

from chaoslink.hyperchaos import IntegratorConfig, advance, generate_trajectory
from chaoslink.setup.log import LoggingLevel
from chaoslink.utilities import ConfigurationError, KEY_FALLBACK_BASE, KEY_FALLBACK_THRESHOLD, KEY_SCALE

__all__ = ["derive_round_key", "keystream"]

log = logging.getLogger("cipher.key_schedule")

KEYSTREAM_COLUMNS = [0, 2, 4]

def _chain_components(x1):
    key = [x1]
    for i in range(2, 7):
        value = (key[-1] * 1.0e6) % 1.0
        if value < KEY_FALLBACK_THRESHOLD:
            value = KEY_FALLBACK_BASE * i
        key.append(value)
    return tuple(key)

def derive_round_key(image, literal_denominator=False):
    """Derive the six initial conditions of a round from the image content.

    The first component is (sum(P) + M N) / (2^8 M N), which lies in (0, 1]. Each further
    component is the fractional part of the previous one times 10^6; a result below 1e-12
    is replaced by 0.123456789 times the component index.

    Parameters
    ----------
    image : GrayImage
        The round input image.
    literal_denominator : bool, optional
        Use (sum(P) + M^3 N) / 2^(8 (M^2 + N)) for the first component instead. That value
        underflows to zero for any realistic image size.

    Returns
    -------
    tuple of float
    """
    m, n = image.height, image.width
    total = int(image.pixels.sum(dtype=numpy.int64))
    if literal_denominator:
        x1 = math.ldexp(float(total + m ** 3 * n), -8 * (m * m + n))
        log.warning("Deriving the round key with the literal denominator 2^{}, x1 = {!r}".format(
                    8 * (m * m + n), x1))
    else:
        x1 = (total + m * n) / (KEY_SCALE * m * n)
    key = _chain_components(x1)
    log.log(LoggingLevel.EXTENSIVE.value, "Round key: {}".format(key))
    return key

def keystream(key, n0, length, params=None, cfg=None, layout="interleaved"):
    """Sample the chaotic sequence L used to build a permutation.

    The system is integrated for n0 + ceil(length / 3) steps starting at the key and the first
    n0 steps are discarded. The x1, x3 and x5 values of the remaining steps are either
    interleaved per step or concatenated as whole sequences, then truncated to ``length``.

    Parameters
    ----------
    key : sequence of float
        The six initial conditions.
    n0 : int
        The number of discarded steps.
    length : int
        The number of values to return.
    params : SystemParams, optional
        The system coefficients.
    cfg : IntegratorConfig, optional
        The integration settings.
    layout : str, optional
        interleaved (x1, x3, x5 of step 1, then of step 2, ...) or concatenated (all x1,
        then all x3, then all x5).

    Returns
    -------
    numpy.ndarray
    """
    if length < 1:
        raise ConfigurationError("Keystream length must be at least 1, got {}".format(length))
    if n0 < 0:
        raise ConfigurationError("Discard count N0 cannot be negative, got {}".format(n0))
    cfg = cfg if cfg is not None else IntegratorConfig()
    steps = -(-length // 3)
    start = advance(key, params, cfg, n0)
    samples = generate_trajectory(start, params, cfg, steps)[:, KEYSTREAM_COLUMNS]
    if layout == "interleaved":
        values = samples.ravel()
    elif layout == "concatenated":
        values = samples.ravel(order='F')
    else:
        raise ConfigurationError("Unknown keystream layout: {}".format(layout))
    return values[:length]
