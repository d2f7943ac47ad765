import logging

import numpy
from PIL import Image

from chaoslink.cipher import GrayImage
from chaoslink.utilities import InvalidImageError

__all__ = ["read_pgm", "write_pgm"]

log = logging.getLogger("pipeline.image_files")

PGM_MAGIC = b"P5"
PGM_MAXVAL = 255

def read_pgm(filename):
    """Read an 8-bit binary PGM (P5) image.

    Parameters
    ----------
    filename : str
        The image file.

    Returns
    -------
    GrayImage

    Raises
    ------
    InvalidImageError
        If the file is not an 8-bit P5 image or is truncated.
    """
    with open(filename, "rb") as pfile:
        if pfile.read(len(PGM_MAGIC)) != PGM_MAGIC:
            raise InvalidImageError("{} is not a binary PGM (P5) file".format(filename))
        pfile.seek(0)
        try:
            with Image.open(pfile) as img:
                if img.mode != "L":
                    raise InvalidImageError("{} is a {} image, only 8-bit gray is "
                                            "supported".format(filename, img.mode))
                img.load()
                pixels = numpy.array(img, dtype=numpy.uint8)
        except (OSError, SyntaxError, ValueError) as error:
            raise InvalidImageError("{} is not a readable PGM file: {}".format(filename, error))
    log.debug("Read {}x{} image from {}".format(pixels.shape[0], pixels.shape[1], filename))
    return GrayImage(pixels)

def write_pgm(filename, image):
    """Write an image as an 8-bit binary PGM (P5) file.
    """
    header = "P5\n{} {}\n{}\n".format(image.width, image.height, PGM_MAXVAL).encode("ascii")
    with open(filename, "wb") as pfile:
        pfile.write(header)
        pfile.write(image.pixels.tobytes())
    log.debug("Wrote {}x{} image to {}".format(image.height, image.width, filename))
