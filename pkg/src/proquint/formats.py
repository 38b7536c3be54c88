"""Converters between quint text and external value notations.

Supported notations: dotted-quad IPv4, colon-grouped IPv6, "0x" hex,
unsigned decimal, and quint text itself.  Everything converts through a
list of unsigned 16-bit words.
"""

from . import codec
from .codec import ProquintError

FORMATS = ("ipv4", "ipv6", "hex", "decimal", "proquint")

DEFAULT_DECIMAL_BITS = 32
DECIMAL_WIDTHS = (16, 32, 48, 64)

_HEX_DIGITS = frozenset("0123456789abcdefABCDEF")


class FormatError(ProquintError):
    pass


class MalformedDottedQuad(FormatError):
    pass


class MalformedIPv6(FormatError):
    pass


class NotWordAligned(FormatError):
    pass


class InvalidHexDigit(FormatError):
    pass


class Overflow(FormatError):
    pass


class InvalidDecimalDigit(FormatError):
    pass


class WrongWordCount(FormatError):
    pass


class UnrecognizedFormat(FormatError):
    pass


class IncompatibleWidth(FormatError):
    pass


def parse_ipv4(text):
    """Parse a dotted quad into two 16-bit words."""
    fields = text.split(".")
    if len(fields) != 4:
        raise MalformedDottedQuad(
            "expected 4 dotted fields, got %d in %r" % (len(fields), text)
        )
    octets = []
    for field in fields:
        if not field.isdigit():
            raise MalformedDottedQuad("non-numeric octet %r in %r" % (field, text))
        value = int(field)
        if value > 255:
            raise MalformedDottedQuad("octet %s out of range in %r" % (field, text))
        octets.append(value)
    a, b, c, d = octets
    return [a << 8 | b, c << 8 | d]


def render_ipv4(words):
    """Render two words as a dotted quad, octets unpadded."""
    if len(words) != 2:
        raise WrongWordCount("IPv4 needs exactly 2 words, got %d" % len(words))
    data = codec.words_to_bytes(words)
    return "%d.%d.%d.%d" % tuple(data)


def _parse_ipv6_group(group, text):
    if not 1 <= len(group) <= 4 or any(c not in _HEX_DIGITS for c in group):
        raise MalformedIPv6("bad group %r in %r" % (group, text))
    return int(group, 16)


def parse_ipv6(text):
    """Parse a colon-grouped IPv6 literal into eight 16-bit words.

    One "::" zero-run abbreviation is allowed.  Embedded dotted-quad
    notation and zone indices are not supported.
    """
    if "." in text or "%" in text:
        raise MalformedIPv6("unsupported IPv6 notation: %r" % (text,))
    parts = text.split("::")
    if len(parts) > 2:
        raise MalformedIPv6('more than one "::" in %r' % (text,))
    if len(parts) == 2:
        head, tail = parts
        heads = head.split(":") if head else []
        tails = tail.split(":") if tail else []
        if len(heads) + len(tails) > 7:
            raise MalformedIPv6('"::" must stand for at least one group: %r' % (text,))
        groups = heads + ["0"] * (8 - len(heads) - len(tails)) + tails
    else:
        groups = text.split(":")
        if len(groups) != 8:
            raise MalformedIPv6(
                "expected 8 groups, got %d in %r" % (len(groups), text)
            )
    return [_parse_ipv6_group(g, text) for g in groups]


def render_ipv6(words):
    """Render eight words as a canonical IPv6 literal.

    Lowercase hex groups; the longest zero run of length >= 2 is compressed
    to "::", ties broken to the leftmost run.
    """
    if len(words) != 8:
        raise WrongWordCount("IPv6 needs exactly 8 words, got %d" % len(words))
    groups = ["%x" % w for w in words]
    best_start, best_len = -1, 1
    i = 0
    while i < 8:
        if words[i] == 0:
            j = i
            while j < 8 and words[j] == 0:
                j += 1
            if j - i > best_len:
                best_start, best_len = i, j - i
            i = j
        else:
            i += 1
    if best_start < 0:
        return ":".join(groups)
    left = ":".join(groups[:best_start])
    right = ":".join(groups[best_start + best_len:])
    return left + "::" + right


def parse_hex(text):
    """Parse a hex string (optional "0x" prefix) into words, 4 digits each."""
    digits = text
    if digits[:2] in ("0x", "0X"):
        digits = digits[2:]
    if len(digits) == 0 or len(digits) % 4 != 0:
        raise NotWordAligned(
            "hex digit count must be a positive multiple of 4, got %d"
            % len(digits)
        )
    for ch in digits:
        if ch not in _HEX_DIGITS:
            raise InvalidHexDigit("invalid hex digit %r in %r" % (ch, text))
    return [int(digits[i:i + 4], 16) for i in range(0, len(digits), 4)]


def render_hex(words, with_prefix=False):
    """Render words as lowercase zero-padded hex, 4 digits per word."""
    if not words:
        return ""
    text = "".join("%04x" % w for w in words)
    return "0x" + text if with_prefix else text


def parse_decimal(text, width_bits=DEFAULT_DECIMAL_BITS):
    """Parse an unsigned decimal string into width_bits/16 words, big-endian."""
    if width_bits not in DECIMAL_WIDTHS:
        raise ValueError("width_bits must be one of %r" % (DECIMAL_WIDTHS,))
    if not text or not text.isdigit():
        raise InvalidDecimalDigit("not an unsigned decimal integer: %r" % (text,))
    value = int(text)
    if value >= 1 << width_bits:
        raise Overflow("%s does not fit in %d bits" % (text, width_bits))
    count = width_bits // 16
    return [(value >> (16 * i)) & 0xFFFF for i in reversed(range(count))]


def render_decimal(words):
    """Render 1 to 4 words as the unsigned decimal of their concatenation."""
    if not 1 <= len(words) <= 4:
        raise WrongWordCount(
            "decimal rendering needs 1 to 4 words, got %d" % len(words)
        )
    value = 0
    for w in words:
        value = value << 16 | w
    return str(value)


def _looks_like_ipv4(text):
    fields = text.split(".")
    return len(fields) == 4 and all(
        f.isdigit() and int(f) <= 255 for f in fields
    )


def detect_format(text):
    """Classify a trimmed input string as one of FORMATS.

    Precedence: "0q-" prefix, "0x" prefix, dotted quad, colon-grouped IPv6,
    decodable quint text, all-decimal digits.  Bare hex without "0x" is
    never detected: its alphabet overlaps the quint letters.
    """
    text = text.strip()
    if not text:
        raise UnrecognizedFormat("empty input")
    if text[:3].lower() == codec.MAGIC_PREFIX:
        return "proquint"
    if text[:2] in ("0x", "0X"):
        return "hex"
    if "." in text and _looks_like_ipv4(text):
        return "ipv4"
    if ":" in text:
        return "ipv6"
    try:
        codec.decode_stream(text)
        return "proquint"
    except ProquintError:
        pass
    if text.isdigit():
        return "decimal"
    raise UnrecognizedFormat("unrecognized value format: %r" % (text,))


def parse_value(text, fmt, width_bits=DEFAULT_DECIMAL_BITS):
    """Parse ``text`` as the given format tag into a word list."""
    if fmt == "ipv4":
        return parse_ipv4(text)
    if fmt == "ipv6":
        return parse_ipv6(text)
    if fmt == "hex":
        return parse_hex(text)
    if fmt == "decimal":
        return parse_decimal(text, width_bits)
    if fmt == "proquint":
        return codec.decode_stream(text.strip())
    raise ValueError("unknown format tag %r" % (fmt,))


def render_value(words, fmt, with_prefix=False):
    """Render a word list in the given format tag.

    Raises IncompatibleWidth when the word count does not fit the target.
    """
    if fmt == "ipv4":
        if len(words) != 2:
            raise IncompatibleWidth(
                "IPv4 needs a 32-bit value (2 words), got %d" % len(words)
            )
        return render_ipv4(words)
    if fmt == "ipv6":
        if len(words) != 8:
            raise IncompatibleWidth(
                "IPv6 needs a 128-bit value (8 words), got %d" % len(words)
            )
        return render_ipv6(words)
    if fmt == "hex":
        return render_hex(words, with_prefix=True)
    if fmt == "decimal":
        if not 1 <= len(words) <= 4:
            raise IncompatibleWidth(
                "decimal rendering supports 16 to 64 bits, got %d words"
                % len(words)
            )
        return render_decimal(words)
    if fmt == "proquint":
        return codec.encode_stream(words, with_prefix)
    raise ValueError("unknown format tag %r" % (fmt,))


def convert(text, target, width_bits=DEFAULT_DECIMAL_BITS):
    """Auto-detect the format of ``text`` and re-render it as ``target``.

    Converting a value to its own format canonicalizes it (case folded,
    separators normalized, magic prefix stripped).
    """
    fmt = detect_format(text)
    words = parse_value(text.strip(), fmt, width_bits)
    return render_value(words, target)
