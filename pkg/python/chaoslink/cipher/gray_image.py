import numpy

from chaoslink.utilities import InvalidImageError

__all__ = ["GrayImage"]

class GrayImage(object):
    """An 8-bit grayscale image.

    Parameters
    ----------
    pixels : array_like
        A 2-D array of integer values in [0, 255], one row per image line.

    Attributes
    ----------
    pixels : numpy.ndarray
        The (height, width) array of uint8 pixels.
    """

    def __init__(self, pixels):
        values = numpy.asarray(pixels)
        if values.ndim != 2 or values.size == 0:
            raise InvalidImageError("Image pixels must form a non-empty 2-D array, got shape {}".format(
                                    values.shape))
        if values.dtype != numpy.uint8:
            if numpy.any(values < 0) or numpy.any(values > 255) or numpy.any(values != numpy.round(values)):
                raise InvalidImageError("Image pixels must be integers in [0, 255]")
            values = values.astype(numpy.uint8)
        self.pixels = numpy.array(values, dtype=numpy.uint8)
        self.pixels.setflags(write=False)

    @classmethod
    def from_vector(cls, vector, height, width):
        """Build an image from a row-major pixel vector.

        Parameters
        ----------
        vector : array_like
            The height * width pixels.
        height : int
            The number of rows M.
        width : int
            The number of columns N.

        Returns
        -------
        GrayImage
        """
        vector = numpy.asarray(vector)
        if vector.size != height * width:
            raise InvalidImageError("Cannot shape {} pixels into {}x{}".format(vector.size, height, width))
        return cls(vector.reshape(height, width))

    @property
    def height(self):
        """int: The number of rows M.
        """
        return self.pixels.shape[0]

    @property
    def width(self):
        """int: The number of columns N.
        """
        return self.pixels.shape[1]

    @property
    def shape(self):
        return self.pixels.shape

    @property
    def size(self):
        return self.pixels.size

    @property
    def vector(self):
        """numpy.ndarray: The row-major pixel vector P.
        """
        return self.pixels.ravel()

    def check_cipher_dimensions(self):
        """Check the image can be tiled by 2x2 blocks.

        Raises
        ------
        InvalidImageError
            If either dimension is odd or smaller than 2.
        """
        if self.height < 2 or self.width < 2 or self.height % 2 or self.width % 2:
            raise InvalidImageError("Image dimensions must be even and at least 2, got height={} "
                                    "width={}".format(self.height, self.width))

    def count_differences(self, other):
        """Count the pixels that differ from another image of the same size.
        """
        if self.shape != other.shape:
            raise InvalidImageError("Cannot compare a {} image with a {} image".format(self.shape,
                                                                                      other.shape))
        return int(numpy.count_nonzero(self.pixels != other.pixels))

    def __eq__(self, other):
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.shape == other.shape and bool(numpy.array_equal(self.pixels, other.pixels))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return "GrayImage(height={}, width={})".format(self.height, self.width)
