import logging
import math

from chaoslink.hyperchaos import IntegratorConfig
from chaoslink.utilities import (ConfigurationError, DEFAULT_LAYOUT, DEFAULT_N0, DEFAULT_Q_EXPONENT,
                                 DEFAULT_ROUNDS, DEFAULT_STEP_SIZE, KeyFileError)

__all__ = ["KEY_FORMAT_VERSION", "KeyBundle", "LAYOUTS"]

KEY_FORMAT_VERSION = 1
KEY_HEADER = "chaoslink-key"
LAYOUTS = ("interleaved", "concatenated")

log = logging.getLogger("cipher.KeyBundle")

class KeyBundle(object):
    """The secret key of the cipher: per-round initial conditions plus integration settings.

    A bundle starts out empty and the encryption records one initial condition per round.

    Parameters
    ----------
    rounds : int, optional
        The number of permutation-diffusion rounds.
    n0 : int, optional
        The integration steps discarded before sampling the keystream.
    q_exponent : int, optional
        The even power of the Fibonacci Q-matrix.
    step_size : float, optional
        The RK4 step used for the keystream.
    layout : str, optional
        How the x1, x3 and x5 sequences are combined: interleaved or concatenated.

    Attributes
    ----------
    round_keys : list[tuple]
        One 6-tuple of initial conditions for each finished round.
    height, width : int or None
        The image dimensions, set by the first recorded round.
    """

    def __init__(self, rounds=DEFAULT_ROUNDS, n0=DEFAULT_N0, q_exponent=DEFAULT_Q_EXPONENT,
                 step_size=DEFAULT_STEP_SIZE, layout=DEFAULT_LAYOUT):
        if rounds < 1:
            raise ConfigurationError("A key bundle needs at least one round, got {}".format(rounds))
        if n0 < 0:
            raise ConfigurationError("Discard count N0 cannot be negative, got {}".format(n0))
        if q_exponent < 2 or q_exponent % 2:
            raise ConfigurationError("Q-matrix exponent must be even and at least 2, got {}".format(
                                     q_exponent))
        if layout not in LAYOUTS:
            raise ConfigurationError("Unknown keystream layout {}. Choices are {}.".format(layout,
                                                                                         ", ".join(LAYOUTS)))
        self.rounds = int(rounds)
        self.n0 = int(n0)
        self.q_exponent = int(q_exponent)
        self.integrator = IntegratorConfig(step_size)
        self.layout = layout
        self.round_keys = []
        self.height = None
        self.width = None

    @property
    def step_size(self):
        return self.integrator.step_size

    @property
    def is_complete(self):
        """bool: Whether every round has its initial conditions.
        """
        return len(self.round_keys) == self.rounds

    def record_shape(self, height, width):
        """Store the dimensions of the image the key belongs to.
        """
        self.height = int(height)
        self.width = int(width)

    def record_round_key(self, key):
        """Append the initial conditions of the next round.

        Parameters
        ----------
        key : sequence of float
            Six components in [0, 1], only the first may equal 1.
        """
        if self.is_complete:
            raise ConfigurationError("Key bundle already holds {} round keys".format(self.rounds))
        key = tuple(float(v) for v in key)
        if len(key) != 6:
            raise ConfigurationError("A round key needs 6 components, got {}".format(len(key)))
        for i, value in enumerate(key):
            upper_ok = value <= 1.0 if i == 0 else value < 1.0
            if not math.isfinite(value) or value < 0.0 or not upper_ok:
                raise ConfigurationError("Round key component x{} out of range: {!r}".format(i + 1, value))
        self.round_keys.append(key)

    def perturbed(self, round_index, component, delta):
        """Copy the bundle with one key component shifted.

        Parameters
        ----------
        round_index : int
            The 0-based round.
        component : int
            The 0-based component of that round's key.
        delta : float
            The shift to add.

        Returns
        -------
        KeyBundle
        """
        other = self.copy()
        key = list(other.round_keys[round_index])
        key[component] += delta
        other.round_keys[round_index] = tuple(key)
        return other

    def copy(self):
        other = KeyBundle(self.rounds, self.n0, self.q_exponent, self.step_size, self.layout)
        other.round_keys = list(self.round_keys)
        other.height = self.height
        other.width = self.width
        return other

    def to_text(self):
        """Serialize the bundle.

        Every real is printed with 17 significant digits so reading it back gives the same
        64-bit floats.

        Returns
        -------
        str
        """
        if not self.is_complete or self.height is None:
            raise ConfigurationError("Only a filled key bundle can be serialized")
        lines = ["{} {}".format(KEY_HEADER, KEY_FORMAT_VERSION),
                 "rounds {}".format(self.rounds),
                 "n0 {}".format(self.n0),
                 "q_exponent {}".format(self.q_exponent),
                 "step {:.17g}".format(self.step_size),
                 "shape {} {}".format(self.height, self.width),
                 "layout {}".format(self.layout)]
        for key in self.round_keys:
            lines.append(" ".join("{:.17g}".format(v) for v in key))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        """Parse a serialized bundle.

        Parameters
        ----------
        text : str
            The output of :meth:`to_text`.

        Returns
        -------
        KeyBundle

        Raises
        ------
        KeyFileError
            If the text is malformed.
        ConfigurationError
            If a value is out of range.
        """
        lines = [line.strip() for line in text.strip().splitlines()]
        if len(lines) < 7:
            raise KeyFileError("Key file is truncated")
        header = lines[0].split()
        if header != [KEY_HEADER, str(KEY_FORMAT_VERSION)]:
            raise KeyFileError("Unknown key file header: {}".format(lines[0]))

        def field(line, name, count=1):
            parts = line.split()
            if len(parts) != count + 1 or parts[0] != name:
                raise KeyFileError("Expected '{}' line, got: {}".format(name, line))
            return parts[1:]

        try:
            rounds = int(field(lines[1], "rounds")[0])
            n0 = int(field(lines[2], "n0")[0])
            q_exponent = int(field(lines[3], "q_exponent")[0])
            step = float(field(lines[4], "step")[0])
            height, width = [int(v) for v in field(lines[5], "shape", 2)]
            layout = field(lines[6], "layout")[0]
        except ValueError as err:
            raise KeyFileError("Bad value in key file header: {}".format(err))

        bundle = cls(rounds, n0, q_exponent, step, layout)
        bundle.record_shape(height, width)
        key_lines = lines[7:]
        if len(key_lines) != rounds:
            raise KeyFileError("Key file declares {} rounds but holds {} keys".format(rounds, len(key_lines)))
        for line in key_lines:
            try:
                bundle.record_round_key([float(v) for v in line.split()])
            except ValueError as err:
                raise KeyFileError("Bad round key line '{}': {}".format(line, err))
        log.debug("Read key bundle with {} rounds for a {}x{} image".format(rounds, height, width))
        return bundle

    def write(self, filename):
        with open(filename, 'w') as kfile:
            kfile.write(self.to_text())

    @classmethod
    def read(cls, filename):
        try:
            with open(filename) as kfile:
                text = kfile.read()
        except UnicodeDecodeError:
            raise KeyFileError("{} is not a text key file".format(filename))
        return cls.from_text(text)

    def __eq__(self, other):
        if not isinstance(other, KeyBundle):
            return NotImplemented
        return (self.rounds, self.n0, self.q_exponent, self.step_size, self.layout, self.round_keys,
                self.height, self.width) == (other.rounds, other.n0, other.q_exponent, other.step_size,
                                             other.layout, other.round_keys, other.height, other.width)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None
