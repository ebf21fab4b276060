"""graph6 and edge-list round-trips plus diagnostics with line and
column positions.

The round-trip check runs over every isomorphism class up to order 7,
so the encoder and decoder cannot drift apart silently.
"""

import pytest

from redrank.census import enumerate_graphs
from redrank.formats import (FormatError, graph6_decode, graph6_encode,
                             parse_edge_list, parse_graph6,
                             serialize_edge_list, sniff_format)
from redrank.graphs import Graph


def test_known_encodings():
    assert graph6_encode(Graph.complete(4)) == "C~"
    assert graph6_encode(Graph.path(4)) == "Ch"
    assert graph6_encode(Graph.from_edges(1, [])) == "@"
    assert graph6_decode("C~") == Graph.complete(4)
    assert graph6_decode("Ch") == Graph.path(4)


def test_round_trip_every_class_up_to_seven():
    for order in range(1, 8):
        for g in enumerate_graphs(order):
            assert graph6_decode(graph6_encode(g)) == g


def test_long_form_orders():
    g = Graph.path(63)
    text = graph6_encode(g)
    assert text.startswith("~")
    assert graph6_decode(text) == g
    h = Graph.cycle(100)
    assert graph6_decode(graph6_encode(h)) == h


def test_decode_rejects_garbage():
    with pytest.raises(FormatError):
        graph6_decode("")
    with pytest.raises(FormatError):
        graph6_decode("C")          # truncated body
    with pytest.raises(FormatError):
        graph6_decode("C~extra")    # trailing bytes
    with pytest.raises(FormatError):
        graph6_decode("C!")         # byte below range
    err = None
    try:
        graph6_decode("C\x7f")
    except FormatError as e:
        err = e
    assert err is not None
    assert err.line == 1 and err.column == 2
    assert "line 1, column 2" in str(err)


def test_decode_rejects_nonzero_padding():
    # order 5 leaves two padding bits in the final 6-bit group
    text = graph6_encode(Graph.path(5))
    tampered = text[:-1] + chr(((ord(text[-1]) - 63) | 1) + 63)
    assert tampered != text
    with pytest.raises(FormatError) as exc:
        graph6_decode(tampered)
    assert "padding" in str(exc.value)


def test_parse_graph6_stream():
    text = ">>graph6<<\nC~\n\nCh\n"
    graphs = parse_graph6(text)
    assert graphs == [Graph.complete(4), Graph.path(4)]
    assert parse_graph6("") == []
    with pytest.raises(FormatError) as exc:
        parse_graph6("C~\nC!\n")
    assert exc.value.line == 2


def test_edge_list_parse_and_serialize():
    g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n")
    assert g == Graph.path(4)
    text = serialize_edge_list(g)
    assert parse_edge_list(text) == g
    assert text.splitlines()[0] == "4 3"
    # comments and blank lines are tolerated
    g = parse_edge_list("# a path\n3 2\n\n0 1\n1 2\n")
    assert g == Graph.path(3)


def test_edge_list_diagnostics():
    with pytest.raises(FormatError) as exc:
        parse_edge_list("4 3\n0 1\n1 2\n")          # fewer edges than stated
    assert "2" in str(exc.value)
    with pytest.raises(FormatError):
        parse_edge_list("4 1\n0 9\n")               # endpoint out of range
    with pytest.raises(FormatError):
        parse_edge_list("4 1\n2 2\n")               # loop
    with pytest.raises(FormatError):
        parse_edge_list("4 2\n0 1\n1 0\n")          # duplicate edge
    with pytest.raises(FormatError):
        parse_edge_list("banana\n")                 # bad header
    with pytest.raises(FormatError):
        parse_edge_list("")


def test_sniff_format():
    assert sniff_format("3 2\n0 1\n1 2\n") == "edges"
    assert sniff_format("C~\n") == "graph6"
    assert sniff_format(">>graph6<<\nC~\n") == "graph6"
