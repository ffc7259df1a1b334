import pytest

from chainthm import graph6
from chainthm.graph import complete_graph, cycle_graph, make_graph, petersen_graph


def test_known_strings():
    # standard reference strings
    assert graph6.encode(complete_graph(4)) == "C~"
    assert graph6.encode(petersen_graph()) == "IheA@GUAo"
    assert graph6.decode("C~") == complete_graph(4)


def test_empty_and_single():
    assert graph6.encode(make_graph(0, [])) == "?"
    assert graph6.decode("@") == make_graph(1, [])


def test_header_accepted():
    assert graph6.decode(">>graph6<<C~") == complete_graph(4)


def test_large_n_form():
    g = cycle_graph(63)
    s = graph6.encode(g)
    assert s[0] == "~"
    assert graph6.decode(s) == g


@pytest.mark.parametrize("bad", ["C}!", "C", "C~~", "A_\x7f", "Bx"])
def test_rejects_malformed(bad):
    with pytest.raises(graph6.Graph6Error):
        graph6.decode(bad)


def test_read_lines_skips_and_names_line():
    out = graph6.read_lines(["# comment", "", "C~", "D~{"])
    assert [ln for ln, _ in out] == [3, 4]
    with pytest.raises(graph6.Graph6Error, match="line 2"):
        graph6.read_lines(["C~", "C!"])


def test_write_read_file(tmp_path):
    p = tmp_path / "g.g6"
    graphs = [complete_graph(5), cycle_graph(7)]
    graph6.write_file(p, graphs)
    assert [g for _, g in graph6.read_file(p)] == graphs
