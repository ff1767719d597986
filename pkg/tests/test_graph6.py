"""graph6 format checks against a from-scratch reference encoder.

The reference builds the column-major upper-triangle bit string character
by character straight from the format definition, sharing no bit-packing
code with the library.
"""

import pytest
from hypothesis import given

from isogame import (
    Graph,
    MalformedGraph6,
    OrderTooLarge,
    build_graph,
    complete_graph,
    encode_graph6,
    enumerate_connected,
    parse_graph6,
)
from strategies import graphs


def reference_encode(g: Graph) -> str:
    if g.n <= 62:
        head = chr(g.n + 63)
    else:
        head = "~" + "".join(
            chr(((g.n >> shift) & 63) + 63) for shift in (12, 6, 0)
        )
    bits = ""
    for col in range(1, g.n):
        for row in range(col):
            bits += "1" if g.has_edge(row, col) else "0"
    while len(bits) % 6:
        bits += "0"
    body = "".join(chr(int(bits[i : i + 6], 2) + 63) for i in range(0, len(bits), 6))
    return head + body


def test_k4_is_c_tilde():
    # all six upper-triangle bits set: one body character of value 63
    assert reference_encode(complete_graph(4)) == "C~"
    assert encode_graph6(complete_graph(4)) == "C~"
    g = parse_graph6("C~")
    assert g.n == 4 and g.num_edges == 6


def test_k2_is_a_underscore():
    assert reference_encode(complete_graph(2)) == "A_"
    assert encode_graph6(complete_graph(2)) == "A_"
    assert parse_graph6("A_").num_edges == 1


def test_empty_pair_is_a_question_mark():
    g = parse_graph6("A?")
    assert g.n == 2 and g.num_edges == 0


@given(graphs(max_n=8))
def test_encoder_matches_reference_and_round_trips(g):
    text = encode_graph6(g)
    assert text == reference_encode(g)
    assert parse_graph6(text) == g


def test_round_trip_on_connected_catalog_small():
    for n in range(1, 7):
        for g in enumerate_connected(n):
            assert parse_graph6(encode_graph6(g)) == g


def test_order_63_uses_long_form():
    g = build_graph(63, [(0, 62), (10, 20)])
    text = encode_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


def test_malformed_records_rejected():
    with pytest.raises(MalformedGraph6):
        parse_graph6("")
    with pytest.raises(MalformedGraph6):
        parse_graph6("A")  # missing body character
    with pytest.raises(MalformedGraph6):
        parse_graph6("C~~")  # too many body characters
    with pytest.raises(MalformedGraph6):
        parse_graph6("A" + chr(32))  # character below the graph6 range
    with pytest.raises(MalformedGraph6):
        parse_graph6("AO")  # nonzero padding bits for n=2


def test_order_above_63_rejected():
    # 18-bit long form encoding order 64
    with pytest.raises(OrderTooLarge):
        parse_graph6("~?@?" + "?" * 336)
