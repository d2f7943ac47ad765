import numpy

from chaoslink.cipher import GrayImage
from chaoslink.utilities import ConfigurationError, InvalidImageError

__all__ = ["BitSequence", "bits_from_image", "image_from_bits"]

class BitSequence(object):
    """An ordered sequence of 0/1 values.

    Parameters
    ----------
    bits : array_like
        The 0/1 values.
    """

    def __init__(self, bits):
        bits = numpy.asarray(bits).ravel()
        if bits.size and (numpy.any(bits < 0) or numpy.any(bits > 1)):
            raise ConfigurationError("A bit sequence holds only 0 and 1 values")
        self.bits = bits.astype(numpy.uint8)
        self.bits.setflags(write=False)

    @classmethod
    def from_string(cls, text):
        """Build a sequence from a string such as '1011010101'; whitespace is ignored.
        """
        text = "".join(text.split())
        if set(text) - set("01"):
            raise ConfigurationError("Bit strings may only contain 0 and 1")
        return cls(numpy.frombuffer(text.encode("ascii"), dtype=numpy.uint8) - ord("0"))

    def __len__(self):
        return self.bits.size

    @property
    def n(self):
        return self.bits.size

    def to_signs(self):
        """Map 0 to -1 and 1 to +1.

        Returns
        -------
        numpy.ndarray
            int64 values.
        """
        return 2 * self.bits.astype(numpy.int64) - 1

def bits_from_image(image):
    """Unpack an image into bits, row-major, most significant bit first.

    Parameters
    ----------
    image : GrayImage
        Any image, odd dimensions included.

    Returns
    -------
    BitSequence
        8 M N bits.
    """
    return BitSequence(numpy.unpackbits(image.vector))

def image_from_bits(bits, height, width):
    """Pack bits back into an image, the inverse of :func:`bits_from_image`.

    Parameters
    ----------
    bits : BitSequence or array_like
        8 * height * width bits.
    height, width : int
        The image dimensions.

    Returns
    -------
    GrayImage
    """
    values = bits.bits if isinstance(bits, BitSequence) else numpy.asarray(bits, dtype=numpy.uint8).ravel()
    if values.size != 8 * height * width:
        raise InvalidImageError("{} bits do not fill a {}x{} image".format(values.size, height, width))
    return GrayImage.from_vector(numpy.packbits(values), height, width)
