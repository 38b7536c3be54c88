"""Codec between 16-bit words and pronounceable five-letter CVCVC tokens.

A quint is five lowercase letters: consonant, vowel, consonant, vowel,
consonant.  Each quint encodes exactly one unsigned 16-bit word, packed
most-significant field first: 4 bits (consonant), 2 bits (vowel), 4 bits,
2 bits, 4 bits.  Sequences of quints are joined with dashes and may carry
the magic prefix "0q-".
"""

from dataclasses import dataclass

CONSONANTS = "bdfghjklmnprstvz"
VOWELS = "aiou"
MAGIC_PREFIX = "0q-"

_CONSONANT_INDEX = {c: i for i, c in enumerate(CONSONANTS)}
_VOWEL_INDEX = {v: i for i, v in enumerate(VOWELS)}
_ALPHABET = frozenset(CONSONANTS) | frozenset(VOWELS)

# positions 0, 2, 4 are consonants; 1, 3 are vowels
_CLASS_BY_POSITION = (
    _CONSONANT_INDEX,
    _VOWEL_INDEX,
    _CONSONANT_INDEX,
    _VOWEL_INDEX,
    _CONSONANT_INDEX,
)


class ProquintError(ValueError):
    """Base class for every parse/validation error raised by this package."""


class DecodeError(ProquintError):
    """A quint or quint sequence failed to decode.

    ``position`` is the absolute character offset of the first offending
    character in the input string, or None when no single character is to
    blame (e.g. a truncated token).
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class WrongLength(DecodeError):
    pass


class InvalidCharacter(DecodeError):
    def __init__(self, position, char):
        super().__init__(
            "invalid character %r at offset %d: not in the proquint alphabet"
            % (char, position),
            position,
        )
        self.char = char


class WrongClass(DecodeError):
    def __init__(self, position, char, expected):
        super().__init__(
            "character %r at offset %d should be a %s" % (char, position, expected),
            position,
        )
        self.char = char


class CaseViolation(DecodeError):
    def __init__(self, position, char):
        super().__init__(
            "uppercase %r at offset %d (strict-lower policy)" % (char, position),
            position,
        )
        self.char = char


class MalformedSeparator(DecodeError):
    def __init__(self, position, char):
        super().__init__(
            "expected '-' between quints at offset %d, found %r" % (position, char),
            position,
        )
        self.char = char


class OddLength(ProquintError):
    """Byte input whose length is not a multiple of 2; never padded."""


@dataclass(frozen=True)
class ParsePolicy:
    """How strictly quint text is parsed.

    separator_mode: "lenient" accepts dash, single space, or nothing between
    quints (unambiguous because quints are fixed-width); "strict" requires
    exactly one dash.  case_mode: "fold" lowercases input first;
    "strict-lower" rejects uppercase letters.
    """

    separator_mode: str = "lenient"
    case_mode: str = "fold"


LENIENT = ParsePolicy()
STRICT = ParsePolicy(separator_mode="strict", case_mode="strict-lower")


def encode_word(word):
    """Encode one unsigned 16-bit word as a five-letter quint."""
    if not 0 <= word <= 0xFFFF:
        raise ValueError("word out of range [0, 65535]: %r" % (word,))
    return (
        CONSONANTS[(word >> 12) & 0xF]
        + VOWELS[(word >> 10) & 0x3]
        + CONSONANTS[(word >> 6) & 0xF]
        + VOWELS[(word >> 4) & 0x3]
        + CONSONANTS[word & 0xF]
    )


def _decode_quint_at(text, start, policy):
    """Decode the five characters of ``text`` beginning at ``start``.

    Offsets in raised errors are absolute within ``text``.
    """
    if len(text) - start < 5:
        raise WrongLength(
            "truncated quint at offset %d: need 5 characters, have %d"
            % (start, len(text) - start),
            start,
        )
    word = 0
    for i in range(5):
        ch = text[start + i]
        if ch.isupper():
            if policy.case_mode == "strict-lower":
                raise CaseViolation(start + i, ch)
            ch = ch.lower()
        table = _CLASS_BY_POSITION[i]
        if ch not in _ALPHABET:
            raise InvalidCharacter(start + i, text[start + i])
        if ch not in table:
            expected = "consonant" if table is _CONSONANT_INDEX else "vowel"
            raise WrongClass(start + i, text[start + i], expected)
        if table is _CONSONANT_INDEX:
            word = (word << 4) | table[ch]
        else:
            word = (word << 2) | table[ch]
    return word


def decode_quint(token, policy=LENIENT):
    """Decode a single five-letter quint to its 16-bit word."""
    if len(token) != 5:
        raise WrongLength(
            "quint must be exactly 5 characters, got %d" % len(token)
        )
    return _decode_quint_at(token, 0, policy)


def bytes_to_words(data):
    """Pair consecutive bytes big-endian into a list of 16-bit words."""
    if len(data) % 2 != 0:
        raise OddLength(
            "byte input length must be even, got %d bytes" % len(data)
        )
    return [data[i] << 8 | data[i + 1] for i in range(0, len(data), 2)]


def words_to_bytes(words):
    """Split each 16-bit word big-endian; exact inverse of bytes_to_words."""
    out = bytearray()
    for w in words:
        if not 0 <= w <= 0xFFFF:
            raise ValueError("word out of range [0, 65535]: %r" % (w,))
        out.append(w >> 8)
        out.append(w & 0xFF)
    return bytes(out)


def encode_stream(words, with_prefix=False):
    """Render a word sequence as dash-separated quints.

    The "0q-" magic prefix is prepended once when requested; an empty
    sequence renders as the empty string with no prefix.
    """
    if not words:
        return ""
    text = "-".join(encode_word(w) for w in words)
    return MAGIC_PREFIX + text if with_prefix else text


def decode_stream(text, policy=LENIENT):
    """Decode quint text (optionally "0q-"-prefixed) to a word list.

    Error offsets refer to positions in the original, unstripped text.
    """
    pos = 0
    if text.startswith(MAGIC_PREFIX):
        pos = len(MAGIC_PREFIX)
    elif policy.case_mode == "fold" and text[:3].lower() == MAGIC_PREFIX:
        pos = len(MAGIC_PREFIX)
    words = []
    while pos < len(text):
        if words:
            ch = text[pos]
            if ch == "-":
                pos += 1
            elif policy.separator_mode == "strict":
                raise MalformedSeparator(pos, ch)
            elif ch == " ":
                pos += 1
        words.append(_decode_quint_at(text, pos, policy))
        pos += 5
    return words
