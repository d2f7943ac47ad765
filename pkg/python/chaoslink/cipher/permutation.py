import numpy

from chaoslink.utilities import ConfigurationError, DimensionMismatchError

__all__ = ["PermutationMap", "permutation_from_keystream", "permute", "unpermute"]

class PermutationMap(object):
    """A permutation of the positions 1..K.

    Parameters
    ----------
    indices : array_like
        The 1-based positions S, each of 1..K exactly once.
    """

    def __init__(self, indices):
        indices = numpy.asarray(indices, dtype=numpy.int64)
        if indices.ndim != 1 or indices.size == 0:
            raise ConfigurationError("A permutation needs a non-empty 1-D index sequence")
        if not numpy.array_equal(numpy.sort(indices), numpy.arange(1, indices.size + 1)):
            raise ConfigurationError("Indices are not a permutation of 1..{}".format(indices.size))
        self.indices = indices
        self.indices.setflags(write=False)

    def __len__(self):
        return self.indices.size

    @property
    def zero_based(self):
        """numpy.ndarray: The positions shifted to start at 0.
        """
        return self.indices - 1

    def is_identity(self):
        return bool(numpy.array_equal(self.indices, numpy.arange(1, self.indices.size + 1)))

def permutation_from_keystream(values):
    """Rank a chaotic sequence into a permutation.

    Element k of the result is the 1-based original position of the k-th smallest value. Equal
    values keep their original order.

    Parameters
    ----------
    values : array_like
        The non-empty sequence L.

    Returns
    -------
    PermutationMap
    """
    values = numpy.asarray(values, dtype=float)
    if values.ndim != 1 or values.size == 0:
        raise ConfigurationError("Cannot build a permutation from an empty sequence")
    return PermutationMap(numpy.argsort(values, kind="stable") + 1)

def _check_lengths(data, permutation):
    data = numpy.asarray(data)
    if data.ndim != 1 or data.size != len(permutation):
        raise DimensionMismatchError("Sequence of length {} does not match permutation of length {}".format(
                                     data.size, len(permutation)))
    return data

def permute(data, permutation):
    """Shuffle a sequence: R[i] = P[S[i]].

    Parameters
    ----------
    data : array_like
        The sequence P.
    permutation : PermutationMap
        The positions S.

    Returns
    -------
    numpy.ndarray
    """
    data = _check_lengths(data, permutation)
    return data[permutation.zero_based]

def unpermute(data, permutation):
    """Undo :func:`permute`: P[S[i]] = R[i].
    """
    data = _check_lengths(data, permutation)
    result = numpy.empty_like(data)
    result[permutation.zero_based] = data
    return result
