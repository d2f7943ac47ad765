import logging

from chaoslink.cipher.gray_image import GrayImage
from chaoslink.cipher.key_schedule import derive_round_key, keystream
from chaoslink.cipher.permutation import permutation_from_keystream, permute, unpermute
from chaoslink.cipher.q_matrix import diffuse, q_power, undiffuse
from chaoslink.setup.log import LoggingLevel
from chaoslink.utilities import ConfigurationError, DimensionMismatchError

__all__ = ["decrypt", "encrypt"]

log = logging.getLogger("cipher.engine")

def _round_permutation(key, bundle, size, params, cfg):
    values = keystream(key, bundle.n0, size, params, cfg, bundle.layout)
    return permutation_from_keystream(values)

def encrypt(image, bundle_out, params=None, cfg=None, literal_denominator=False):
    """Encrypt an image with the permutation-diffusion rounds.

    Each round derives its key from the round input, shuffles the pixels with the
    permutation sorted out of the keystream and diffuses the shuffled image with Q^n in
    2x2 blocks. The round output is the next round input.

    Parameters
    ----------
    image : GrayImage
        The plaintext image, both dimensions even.
    bundle_out : KeyBundle
        An empty bundle holding the cipher settings. The round keys and image shape are
        recorded into it.
    params : SystemParams, optional
        The system coefficients.
    cfg : IntegratorConfig, optional
        The integration settings, the bundle's step by default.
    literal_denominator : bool, optional
        Derive round keys with the literal denominator, see :func:`derive_round_key`.

    Returns
    -------
    GrayImage
        The cipher image.
    """
    image.check_cipher_dimensions()
    if bundle_out.round_keys:
        raise ConfigurationError("Encryption needs an empty key bundle")
    cfg = cfg if cfg is not None else bundle_out.integrator
    bundle_out.integrator = cfg
    q = q_power(bundle_out.q_exponent)
    bundle_out.record_shape(image.height, image.width)

    current = image
    for rd in range(bundle_out.rounds):
        key = derive_round_key(current, literal_denominator)
        bundle_out.record_round_key(key)
        permutation = _round_permutation(key, bundle_out, current.size, params, cfg)
        shuffled = permute(current.vector, permutation).reshape(current.shape)
        current = GrayImage(diffuse(shuffled, q))
        log.log(LoggingLevel.EXTENSIVE.value, "Finished encryption round {}".format(rd + 1))

    log.debug("Encrypted a {}x{} image in {} rounds".format(image.height, image.width, bundle_out.rounds))
    return current

def decrypt(cipher, bundle, params=None, cfg=None):
    """Invert :func:`encrypt` with the stored round keys.

    A wrong key gives a valid image full of garbage, not an error.

    Parameters
    ----------
    cipher : GrayImage
        The cipher image.
    bundle : KeyBundle
        The filled bundle from the encryption.
    params : SystemParams, optional
        The system coefficients.
    cfg : IntegratorConfig, optional
        The integration settings, the bundle's step by default.

    Returns
    -------
    GrayImage
        The plaintext image.
    """
    if not bundle.is_complete:
        raise ConfigurationError("Key bundle holds {} of {} round keys".format(len(bundle.round_keys),
                                                                             bundle.rounds))
    cipher.check_cipher_dimensions()
    if bundle.height is not None and (bundle.height, bundle.width) != cipher.shape:
        raise DimensionMismatchError("Key is for a {}x{} image, cipher image is {}x{}".format(
                                     bundle.height, bundle.width, cipher.height, cipher.width))
    cfg = cfg if cfg is not None else bundle.integrator
    q = q_power(bundle.q_exponent)

    current = cipher
    for rd in reversed(range(bundle.rounds)):
        mixed = undiffuse(current.pixels, q)
        permutation = _round_permutation(bundle.round_keys[rd], bundle, current.size, params, cfg)
        current = GrayImage.from_vector(unpermute(mixed.ravel(), permutation), cipher.height, cipher.width)
        log.log(LoggingLevel.EXTENSIVE.value, "Finished decryption round {}".format(rd + 1))

    log.debug("Decrypted a {}x{} image".format(cipher.height, cipher.width))
    return current
