import collections
import math

import numpy
import scipy.stats

from chaoslink.utilities import BYTE_LEVELS, DimensionMismatchError

__all__ = ["ChiSquareResult", "Histogram", "chi_square_uniformity", "histogram", "mean_squared_error", "psnr",
           "shannon_entropy"]

Histogram = collections.namedtuple("Histogram", "counts total")
"""Pixel value counts of an image.

Attributes
----------
counts : numpy.ndarray
    256 bin counts, one per gray level.
total : int
    The number of pixels.
"""

ChiSquareResult = collections.namedtuple("ChiSquareResult", "statistic p_value degrees_of_freedom")

def histogram(image):
    """Count the pixels at each gray level.

    Parameters
    ----------
    image : GrayImage

    Returns
    -------
    Histogram
    """
    counts = numpy.bincount(image.vector, minlength=BYTE_LEVELS).astype(numpy.int64)
    return Histogram(counts, int(image.size))

def chi_square_uniformity(hist):
    """Test a histogram against the uniform distribution over 256 levels.

    Parameters
    ----------
    hist : Histogram

    Returns
    -------
    ChiSquareResult
        The statistic sum((count - total / 256)^2 / (total / 256)) and its upper tail
        probability with 255 degrees of freedom.
    """
    expected = hist.total / float(BYTE_LEVELS)
    statistic = float(numpy.sum((hist.counts - expected) ** 2) / expected)
    dof = BYTE_LEVELS - 1
    return ChiSquareResult(statistic, float(scipy.stats.chi2.sf(statistic, dof)), dof)

def mean_squared_error(reference, reconstructed):
    if reference.shape != reconstructed.shape:
        raise DimensionMismatchError("Cannot compare a {} image with a {} image".format(reference.shape,
                                                                                      reconstructed.shape))
    diff = reference.pixels.astype(numpy.float64) - reconstructed.pixels.astype(numpy.float64)
    return float(numpy.mean(diff ** 2))

def psnr(reference, reconstructed):
    """Peak signal-to-noise ratio 10 log10(255^2 / MSE) in dB.

    Parameters
    ----------
    reference : GrayImage
    reconstructed : GrayImage

    Returns
    -------
    float
        +inf for identical images.
    """
    mse = mean_squared_error(reference, reconstructed)
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(255.0 ** 2 / mse)

def shannon_entropy(image):
    """Entropy of the gray level distribution in bits per pixel, between 0 and 8.
    """
    hist = histogram(image)
    p = hist.counts[hist.counts > 0] / float(hist.total)
    return float(abs(-numpy.sum(p * numpy.log2(p))))
