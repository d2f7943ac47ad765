import numpy

from chaoslink.utilities import BYTE_LEVELS, ConfigurationError, InvalidImageError

__all__ = ["QMatrix", "diffuse", "fibonacci", "q_inverse_mod256", "q_power", "undiffuse"]

def fibonacci(n):
    """Compute the Fibonacci number F(n) exactly, F(0) = 0 and F(1) = 1.
    """
    if n < 0:
        raise ConfigurationError("Fibonacci index must be non-negative, got {}".format(n))
    previous, current = 0, 1
    for _ in range(n):
        previous, current = current, previous + current
    return previous

class QMatrix(object):
    """A 2x2 integer matrix tied to a power of the Fibonacci Q-matrix [[1, 1], [1, 0]].

    Parameters
    ----------
    entries : sequence of sequence of int
        The 2x2 entries.
    exponent : int
        The power n of Q the matrix represents. Inverses carry -n.
    modulus : int, optional
        Set when the entries are already reduced.
    """

    def __init__(self, entries, exponent, modulus=None):
        (a, b), (c, d) = entries
        self.entries = ((int(a), int(b)), (int(c), int(d)))
        self.exponent = exponent
        self.modulus = modulus

    @property
    def determinant(self):
        (a, b), (c, d) = self.entries
        return a * d - b * c

    def reduce(self, modulus=BYTE_LEVELS):
        """Reduce the entries modulo ``modulus``.

        Returns
        -------
        QMatrix
        """
        return QMatrix([[v % modulus for v in row] for row in self.entries], self.exponent, modulus)

    def as_array(self):
        """Return the entries reduced mod 256 as an int64 array.
        """
        return numpy.array([[v % BYTE_LEVELS for v in row] for row in self.entries], dtype=numpy.int64)

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.entries == other.entries and self.exponent == other.exponent

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return "QMatrix({}, exponent={})".format([list(r) for r in self.entries], self.exponent)

def q_power(n):
    """Compute Q^n = [[F(n+1), F(n)], [F(n), F(n-1)]] exactly.

    Parameters
    ----------
    n : int
        An even exponent, at least 2.

    Returns
    -------
    QMatrix
    """
    if n < 2 or n % 2:
        raise ConfigurationError("Q-matrix exponent must be even and at least 2, got {}".format(n))
    return QMatrix([[fibonacci(n + 1), fibonacci(n)], [fibonacci(n), fibonacci(n - 1)]], n)

def q_inverse_mod256(q):
    """Invert an even power of Q modulo 256.

    For even n the determinant is +1, so the inverse is the adjugate
    [[F(n-1), -F(n)], [-F(n), F(n+1)]].

    Parameters
    ----------
    q : QMatrix
        Q^n for even n, reduced or not.

    Returns
    -------
    QMatrix
        The inverse reduced mod 256.
    """
    if q.exponent % 2:
        raise ConfigurationError("Only even powers of Q can be inverted, got exponent {}".format(q.exponent))
    (a, b), (c, d) = q.entries
    return QMatrix([[d, -b], [-c, a]], -q.exponent).reduce(BYTE_LEVELS)

def _block_multiply(matrix, q):
    matrix = numpy.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] % 2 or matrix.shape[1] % 2:
        raise InvalidImageError("Diffusion needs even dimensions, got shape {}".format(matrix.shape))
    m, n = matrix.shape
    blocks = matrix.astype(numpy.int64).reshape(m // 2, 2, n // 2, 2).swapaxes(1, 2)
    mixed = numpy.matmul(blocks, q.as_array()) % BYTE_LEVELS
    return mixed.swapaxes(1, 2).reshape(m, n).astype(numpy.uint8)

def diffuse(matrix, q):
    """Right-multiply every 2x2 block of a byte matrix by Q^n mod 256.

    Parameters
    ----------
    matrix : numpy.ndarray
        An (M, N) byte matrix with M and N even.
    q : QMatrix
        The diffusion matrix.

    Returns
    -------
    numpy.ndarray
        The diffused (M, N) uint8 matrix.
    """
    return _block_multiply(matrix, q)

def undiffuse(matrix, q):
    """Undo :func:`diffuse` with the modular inverse of ``q``.
    """
    return _block_multiply(matrix, q_inverse_mod256(q))
