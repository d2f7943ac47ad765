import logging
import os
import shutil
import tempfile

import numpy

from chaoslink.cipher import GrayImage
from chaoslink.pipeline import write_pgm

"""Run the long statistical checks when this environment variable is set.
"""
SLOW_TESTS = os.getenv("CHAOSLINK_SLOW_TESTS") not in (None, "", "0")
"""Reason shown for skipped slow tests.
"""
SLOW_REASON = "set CHAOSLINK_SLOW_TESTS=1 to run the long statistical checks"
"""Round key used where a test needs a fixed key rather than an image-derived one.
"""
SAMPLE_KEY = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6)

def natural_image(height=64, width=64, shift=0):
    """A smooth, dark test image with some texture, standing in for a photograph.

    The values stay below 80, so the bit planes are strongly biased like real images.
    """
    i, j = numpy.mgrid[0:height, 0:width]
    pixels = 20 + ((i // 2 + j // 3 + shift) % 40) + ((i * j + shift) % 7)
    return GrayImage(pixels)

def ramp_image(height=16, width=16):
    """An image holding each gray level in turn, row-major."""
    return GrayImage((numpy.arange(height * width) % 256).reshape(height, width))

def constant_image(height, width, value=0):
    return GrayImage(numpy.full((height, width), value, dtype=numpy.uint8))

def make_temp_dir(testcase):
    """Create a temporary directory removed when the test finishes.
    """
    tmp_dir = tempfile.mkdtemp(prefix="chaoslink_")
    testcase.addCleanup(shutil.rmtree, tmp_dir, True)
    return tmp_dir

def write_image(directory, name, image):
    filename = os.path.join(directory, name)
    write_pgm(filename, image)
    return filename

def reset_logging():
    """Drop the handlers the driver attaches to the root logger.
    """
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
        handler.close()
