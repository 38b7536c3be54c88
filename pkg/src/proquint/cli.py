"""Line-oriented command-line tool for quint encoding.

Reads values from positional arguments or, when none are given, one per
line from standard input.  Emits one result line per input line on stdout;
diagnostics go to stderr.  Exit codes: 0 success, 1 any line failed,
2 usage error.
"""

import argparse
import sys

from . import codec, formats, passgen

_FLAG_TO_TAG = {"ipv4": "ipv4", "ipv6": "ipv6", "hex": "hex", "dec": "decimal"}


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="proquint",
        description="Convert identifiers to and from pronounceable quint text.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encode", help="value -> quint text")
    enc.add_argument(
        "--from",
        dest="source_format",
        choices=["ipv4", "ipv6", "hex", "dec", "auto"],
        default="auto",
        help="input format (default: auto-detect; bare digits parse as decimal)",
    )
    enc.add_argument(
        "--width",
        type=int,
        choices=formats.DECIMAL_WIDTHS,
        default=formats.DEFAULT_DECIMAL_BITS,
        help="bit width for decimal input (default: 32)",
    )
    enc.add_argument("--prefix", action="store_true", help='emit the "0q-" prefix')
    enc.add_argument("values", nargs="*")

    dec = sub.add_parser("decode", help="quint text -> value")
    dec.add_argument(
        "--to",
        dest="target_format",
        choices=["ipv4", "ipv6", "hex", "dec"],
        default="hex",
        help="output format (default: hex, which fits any width)",
    )
    dec.add_argument(
        "--strict",
        action="store_true",
        help="require lowercase input and single-dash separators",
    )
    dec.add_argument("values", nargs="*")

    conv = sub.add_parser("convert", help="auto-detect, then render as --to")
    conv.add_argument(
        "--to",
        dest="target_format",
        choices=["ipv4", "ipv6", "hex", "dec", "proquint"],
        required=True,
    )
    conv.add_argument(
        "--width",
        type=int,
        choices=formats.DECIMAL_WIDTHS,
        default=formats.DEFAULT_DECIMAL_BITS,
        help="bit width for decimal input (default: 32)",
    )
    conv.add_argument("values", nargs="*")

    det = sub.add_parser("detect", help="print the detected format tag")
    det.add_argument("values", nargs="*")

    gen = sub.add_parser("gen", help="generate mnemonic passwords")
    gen.add_argument("--bits", type=int, required=True, help="entropy in bits (multiple of 16)")
    gen.add_argument("--count", type=int, default=1, help="number of passwords")
    gen.add_argument(
        "--seed",
        type=int,
        default=None,
        help="deterministic source for testing only; INSECURE for real passwords",
    )
    return parser


def _input_lines(values):
    if values:
        yield from values
    else:
        for line in sys.stdin:
            yield line.rstrip("\n")


def _process_lines(values, handler):
    """Run handler per non-blank line; print results, report failures."""
    status = 0
    for line in _input_lines(values):
        line = line.strip()
        if not line:
            continue
        try:
            print(handler(line))
        except codec.ProquintError as exc:
            status = 1
            print("error: %r: %s" % (line, exc), file=sys.stderr)
    return status


def _cmd_encode(args):
    def handler(line):
        if args.source_format == "auto":
            fmt = formats.detect_format(line)
        else:
            fmt = _FLAG_TO_TAG[args.source_format]
        words = formats.parse_value(line, fmt, args.width)
        return codec.encode_stream(words, args.prefix)

    return _process_lines(args.values, handler)


def _cmd_decode(args):
    policy = codec.STRICT if args.strict else codec.LENIENT

    def handler(line):
        words = codec.decode_stream(line, policy)
        return formats.render_value(words, _FLAG_TO_TAG[args.target_format])

    return _process_lines(args.values, handler)


def _cmd_convert(args):
    target = _FLAG_TO_TAG.get(args.target_format, args.target_format)

    def handler(line):
        return formats.convert(line, target, args.width)

    return _process_lines(args.values, handler)


def _cmd_detect(args):
    return _process_lines(args.values, formats.detect_format)


def _cmd_gen(args, parser):
    if args.bits <= 0 or args.bits % 16 != 0:
        parser.error("--bits must be a positive multiple of 16")
    if args.count < 1:
        parser.error("--count must be at least 1")
    source = (
        passgen.system_source if args.seed is None else passgen.seeded_source(args.seed)
    )
    spec = passgen.PasswordSpec(entropy_bits=args.bits)
    for _ in range(args.count):
        print(passgen.generate_password(spec, source))
    return 0


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "encode":
        return _cmd_encode(args)
    if args.command == "decode":
        return _cmd_decode(args)
    if args.command == "convert":
        return _cmd_convert(args)
    if args.command == "detect":
        return _cmd_detect(args)
    return _cmd_gen(args, parser)


if __name__ == "__main__":
    sys.exit(main())
