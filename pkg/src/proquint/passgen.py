"""Mnemonic password generation of declared entropy.

A password of n*16 bits is n random 16-bit words rendered as dash-joined
quints.  The randomness source is injected: pass ``system_source`` for real
passwords or ``seeded_source(seed)`` for reproducible tests.
"""

import os
import random
from dataclasses import dataclass

from . import codec
from .codec import ProquintError


class InvalidSpec(ProquintError):
    pass


class RandomnessUnavailable(ProquintError):
    pass


@dataclass(frozen=True)
class PasswordSpec:
    """Requested strength in bits of entropy; must be a positive multiple of 16."""

    entropy_bits: int
    with_prefix: bool = False


def system_source(nbytes):
    """Cryptographically secure byte source (the OS CSPRNG)."""
    return os.urandom(nbytes)


def seeded_source(seed):
    """Deterministic byte source for testing; NOT secure."""
    return random.Random(seed).randbytes


def generate_password(spec, source=system_source):
    """Draw exactly entropy_bits/8 bytes from ``source`` and encode them.

    Source failures propagate as RandomnessUnavailable; the output is never
    silently weaker than requested.
    """
    if spec.entropy_bits <= 0 or spec.entropy_bits % 16 != 0:
        raise InvalidSpec(
            "entropy_bits must be a positive multiple of 16, got %r"
            % (spec.entropy_bits,)
        )
    nbytes = spec.entropy_bits // 8
    try:
        data = source(nbytes)
    except Exception as exc:
        raise RandomnessUnavailable("randomness source failed: %s" % exc) from exc
    if len(data) != nbytes:
        raise RandomnessUnavailable(
            "randomness source returned %d bytes, wanted %d" % (len(data), nbytes)
        )
    return codec.encode_stream(codec.bytes_to_words(data), spec.with_prefix)


def password_strength(text):
    """Entropy in bits of an existing quint password: 16 per quint."""
    return 16 * len(codec.decode_stream(text))
