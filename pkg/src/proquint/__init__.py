"""Pronounceable quint identifiers: 16 bits per five-letter CVCVC token."""

from .codec import (
    CONSONANTS,
    LENIENT,
    MAGIC_PREFIX,
    STRICT,
    VOWELS,
    CaseViolation,
    DecodeError,
    InvalidCharacter,
    MalformedSeparator,
    OddLength,
    ParsePolicy,
    ProquintError,
    WrongClass,
    WrongLength,
    bytes_to_words,
    decode_quint,
    decode_stream,
    encode_stream,
    encode_word,
    words_to_bytes,
)
from .formats import (
    FormatError,
    IncompatibleWidth,
    UnrecognizedFormat,
    convert,
    detect_format,
    parse_ipv4,
    parse_ipv6,
    parse_hex,
    parse_decimal,
    render_ipv4,
    render_ipv6,
    render_hex,
    render_decimal,
)
from .passgen import (
    InvalidSpec,
    PasswordSpec,
    RandomnessUnavailable,
    generate_password,
    password_strength,
    seeded_source,
    system_source,
)

__version__ = "0.1.0"
