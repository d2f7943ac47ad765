import math

import numpy

from chaoslink.utilities import ConfigurationError

__all__ = ["Constellation", "MAPPINGS", "demap", "get_constellation", "gray_code", "map_bits"]

def gray_code(m):
    """Binary reflected Gray code of an index.
    """
    return m ^ (m >> 1)

class Constellation(object):
    """A Gray-coded M-PSK constellation of unit-modulus points.

    Point m sits at angle offset + 2 pi m / M and carries the bit pattern gray_code(m), most
    significant bit first, so neighboring points differ in exactly one bit.

    Parameters
    ----------
    name : str
        The mapping name.
    bits_per_symbol : int
        The number of bits carried by a point.
    offset : float
        The angle of point 0 in radians.
    """

    def __init__(self, name, bits_per_symbol, offset):
        self.name = name
        self.bits_per_symbol = bits_per_symbol
        self.order = 2 ** bits_per_symbol
        self.offset = offset
        indices = numpy.arange(self.order)
        self.points = numpy.exp(1j * (offset + 2.0 * math.pi * indices / self.order))
        codes = numpy.array([gray_code(m) for m in indices])
        # symbol value -> point index
        self._point_of_value = numpy.empty(self.order, dtype=numpy.int64)
        self._point_of_value[codes] = indices
        self._value_of_point = codes
        self._weights = 2 ** numpy.arange(bits_per_symbol - 1, -1, -1)

    def point_for_bits(self, bits):
        """Return the point carrying a bit pattern.
        """
        value = int(numpy.dot(numpy.asarray(bits), self._weights))
        return self.points[self._point_of_value[value]]

    def map(self, bits):
        """Map bits onto constellation points.

        Parameters
        ----------
        bits : array_like
            0/1 values, a multiple of bits_per_symbol long.

        Returns
        -------
        numpy.ndarray
            The complex symbols.
        """
        bits = numpy.asarray(bits, dtype=numpy.int64).ravel()
        if bits.size % self.bits_per_symbol:
            raise ConfigurationError("{} bits cannot be split into {}-bit symbols".format(bits.size,
                                                                                        self.bits_per_symbol))
        values = bits.reshape(-1, self.bits_per_symbol).dot(self._weights)
        return self.points[self._point_of_value[values]]

    def demap(self, symbols):
        """Hard-decide symbols to bits at the nearest constellation point.

        Parameters
        ----------
        symbols : array_like
            The received complex symbols.

        Returns
        -------
        numpy.ndarray
            The uint8 bits, bits_per_symbol per symbol.
        """
        symbols = numpy.asarray(symbols, dtype=complex).ravel()
        step = 2.0 * math.pi / self.order
        point = numpy.round((numpy.angle(symbols) - self.offset) / step).astype(numpy.int64) % self.order
        values = self._value_of_point[point]
        bits = (values[:, None] >> numpy.arange(self.bits_per_symbol - 1, -1, -1)) & 1
        return bits.astype(numpy.uint8).ravel()

MAPPINGS = {
    "qpsk": Constellation("qpsk", 2, math.pi / 4.0),
    "psk16": Constellation("psk16", 4, 0.0),
}

def get_constellation(scheme):
    """Look up a constellation by name.

    Parameters
    ----------
    scheme : str or Constellation
        qpsk or psk16.

    Returns
    -------
    Constellation
    """
    if isinstance(scheme, Constellation):
        return scheme
    try:
        return MAPPINGS[scheme]
    except KeyError:
        raise ConfigurationError("Unknown mapping {}. Choices are {}.".format(scheme,
                                                                          ", ".join(sorted(MAPPINGS))))

def map_bits(bits, scheme="qpsk"):
    """Map bits onto a Gray-coded PSK constellation.
    """
    return get_constellation(scheme).map(bits)

def demap(symbols, scheme="qpsk"):
    """Minimum-distance hard decision of PSK symbols back to bits.
    """
    return get_constellation(scheme).demap(symbols)
