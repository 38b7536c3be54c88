"""Acceptance suite: one test per criterion, one PASS line per test.

Run with ``pytest tests/test_acceptance.py -s`` to see the PASS lines.
"""

import math
import random
import string
import time

import pytest

from proquint import codec, formats, passgen
from proquint.passgen import PasswordSpec

from conftest import GOLDEN_ROWS


def test_criterion_1_golden_vectors():
    start = time.perf_counter()
    for ip, quint in GOLDEN_ROWS:
        assert formats.convert(ip, "proquint") == quint
        assert formats.convert(quint, "ipv4") == ip
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    print("PASS criterion 1: 12 golden IPv4<->quint rows, byte-exact, %.3fs" % elapsed)


def test_criterion_2_exhaustive_roundtrip():
    start = time.perf_counter()
    failures = sum(
        1 for w in range(0x10000) if codec.decode_quint(codec.encode_word(w)) != w
    )
    elapsed = time.perf_counter() - start
    assert failures == 0
    assert elapsed < 1.0
    print("PASS criterion 2: 65,536-word roundtrip, 0 failures, %.3fs" % elapsed)


def test_criterion_3_order_preservation():
    previous = codec.encode_word(0)
    for w in range(1, 0x10000):
        current = codec.encode_word(w)
        assert previous < current
        previous = current
    print("PASS criterion 3: encoding is strictly monotone over all 65,536 words")


def test_criterion_4_information_density():
    rng = random.Random(4)
    for n in (0, 1, 2, 3, 8, 50):
        words = [rng.randrange(0x10000) for _ in range(n)]
        bare = codec.encode_stream(words).replace("-", "")
        assert len(bare) == 5 * n
    assert 16 / 5 == 3.2

    # a 3-quint dashed sequence is 17 characters carrying 48 bits
    three = codec.encode_stream([1, 2, 3])
    assert len(three) == 17
    ours = math.log2((2**16) ** 3) / 17
    assert ours == 48 / 17
    assert abs(ours - 2.8235294117647058) < 1e-12

    # documented check: the published separator-inclusive density figure was
    # computed with a 6-vowel alphabet (16*6*16*6*16 = 147456 per quint),
    # which contradicts the final 4-vowel alphabet; we reproduce that
    # arithmetic as printed, and assert the 4-vowel value above independently
    per_quint_6v = 16.0 * 6.0 * 16.0 * 6.0 * 16.0
    assert per_quint_6v == 147456.0
    published = math.log2(per_quint_6v**3) / (3 * 5 + 2 * 1)
    assert abs(published - 3.0299867649604084) < 1e-12
    print("PASS criterion 4: 3.2 bits/letter bare; 48/17 ~ 2.82 dashed; "
          "6-vowel published figure 3.0300 reproduced as printed")


def test_criterion_5_password_scheme():
    for bits, quints in ((32, 2), (48, 3), (64, 4)):
        draws = []

        def counting(nbytes, _inner=passgen.seeded_source(5)):
            draws.append(nbytes)
            return _inner(nbytes)

        pw = passgen.generate_password(PasswordSpec(bits), counting)
        assert len(codec.decode_stream(pw)) == quints
        assert draws == [bits // 8]
        again = passgen.generate_password(PasswordSpec(bits), passgen.seeded_source(5))
        assert again == pw
    print("PASS criterion 5: 32/48/64-bit passwords give 2/3/4 quints, "
          "consume exactly 4/6/8 bytes, reproducible")


def test_criterion_6_property_loops():
    rng = random.Random(6)
    for _ in range(10_000):
        value = rng.getrandbits(32)
        text = str(value)
        ip = formats.convert(text, "ipv4")
        quint = formats.convert(ip, "proquint")
        hexa = formats.convert(quint, "hex")
        assert formats.convert(hexa, "decimal") == text
    for _ in range(10_000):
        data = rng.randbytes(2 * rng.randrange(0, 33))
        words = codec.bytes_to_words(data)
        text = codec.encode_stream(words, with_prefix=rng.random() < 0.5)
        assert codec.words_to_bytes(codec.decode_stream(text)) == data
    print("PASS criterion 6: 10,000 decimal->ipv4->proquint->hex->decimal loops "
          "and 10,000 byte-stream roundtrips")


def test_criterion_7_rejection_suite():
    rng = random.Random(7)
    alphabet = set(codec.CONSONANTS) | set(codec.VOWELS)
    outside = [c for c in string.printable if c.lower() not in alphabet]

    for _ in range(2_000):
        quint = codec.encode_word(rng.randrange(0x10000))
        pos = rng.randrange(5)

        # out-of-alphabet character
        bad = quint[:pos] + rng.choice(outside) + quint[pos + 1:]
        with pytest.raises(codec.InvalidCharacter) as exc:
            codec.decode_quint(bad)
        assert exc.value.position == pos

        # class violation: swap in a letter of the other class
        other = codec.VOWELS if pos in (0, 2, 4) else codec.CONSONANTS
        bad = quint[:pos] + rng.choice(other) + quint[pos + 1:]
        with pytest.raises(codec.WrongClass) as exc:
            codec.decode_quint(bad)
        assert exc.value.position == pos

    for _ in range(200):
        data = rng.randbytes(2 * rng.randrange(0, 16) + 1)
        with pytest.raises(codec.OddLength):
            codec.bytes_to_words(data)
    print("PASS criterion 7: mutated quints rejected with positions; "
          "odd byte inputs rejected")
