import random

import pytest
from hypothesis import given

from conftest import graphs, random_graph
from turanlab.canon import is_isomorphic
from turanlab.errors import ParseError
from turanlab.graph import complete, cycle, empty, path, petersen
from turanlab.graph6 import decode_graph6, encode_graph6

GOLDEN = {"Bw": complete(3), "C~": complete(4), "Bg": path(3), "Dhc": cycle(5), "IheA@GUAo": petersen()}


@pytest.mark.parametrize("text", sorted(GOLDEN))
def test_golden_strings(text):
    g = decode_graph6(text)
    assert is_isomorphic(g, GOLDEN[text])
    assert encode_graph6(g) == text


def test_exact_encodings():
    assert encode_graph6(complete(3)) == "Bw"
    assert encode_graph6(path(3)) == "Bg"
    assert encode_graph6(complete(4)) == "C~"
    assert encode_graph6(empty(0)) == "?"
    assert encode_graph6(empty(1)) == "@"


def test_header_prefix_and_bytes():
    assert decode_graph6(">>graph6<<Bw") == complete(3)
    assert decode_graph6(b"C~\n") == complete(4)


def test_seeded_round_trip_corpus():
    rng = random.Random(6)
    for _ in range(500):
        g = random_graph(rng, rng.randint(0, 20), rng.random())
        assert decode_graph6(encode_graph6(g)) == g


@given(graphs(max_n=30))
def test_round_trip_property(g):
    text = encode_graph6(g)
    assert all(63 <= ord(c) <= 126 for c in text)
    assert decode_graph6(text) == g


@pytest.mark.parametrize("bad,offset", [
    ("", 0),          # nothing
    ("B", None),      # truncated
    ("Bww", 2),       # trailing byte
    ("Bx", 1),        # nonzero padding
    ("B\x20", 1),     # byte below range
    ("~??", 0),       # multi-byte header
])
def test_malformed_strings(bad, offset):
    with pytest.raises(ParseError) as info:
        decode_graph6(bad)
    if offset is not None:
        assert info.value.offset == offset
