import io
import json

import pytest

from cmc.cospectral import CoalescenceSpec
from cmc.formats import (
    FormatError,
    class_record,
    format_sidecar_line,
    parse_sidecar_line,
    read_dot,
    read_sidecar,
    write_dot,
)
from cmc.graph import graph6_decode, path_graph, star_graph
from cmc.poly import IntPoly
from cmc.search import find_matches


def test_sidecar_line_roundtrip():
    line = format_sidecar_line("Bw", IntPoly.from_high([1, 0, -3, -2]))
    assert line == "Bw 1 0 -3 -2"
    parsed = parse_sidecar_line(line, 4)
    assert parsed.coeffs == (1, 0, -3, -2) and parsed.lineno == 4
    assert parsed.graph == graph6_decode("Bw")


@pytest.mark.parametrize("text", ["Bw", "Bw 1 0 -3", "Bw 2 0 -3 -2", "Bw 1 0 x -2", "!! 1 0"])
def test_sidecar_line_errors(text):
    with pytest.raises(FormatError) as info:
        parse_sidecar_line(text, 7)
    assert info.value.line == 7 and "line 7" in str(info.value)


def test_read_sidecar_collects_errors():
    errors = []
    lines = list(read_sidecar(io.StringIO("A_ 1 0 -1\n\nbad\nBw 1 0 -3 -2\n"), errors))
    assert [l.graph6 for l in lines] == ["A_", "Bw"]
    assert len(errors) == 1 and errors[0].startswith("line 3")
    with pytest.raises(FormatError):
        list(read_sidecar(io.StringIO("bad\n")))


def test_class_record_field_order():
    cls = find_matches([path_graph(8)], 1)[0]
    rec = json.loads(class_record(5, cls))
    assert list(rec) == ["class", "size", "signature", "removal_cospectral", "members", "equivalents", "vector"]
    assert rec["class"] == 5 and rec["size"] == 2
    assert rec["vector"][0] == [1, 0, -7, 0, 15, 0, -10, 0, 1]


def test_dot_roundtrip():
    specs = [CoalescenceSpec(star_graph(4), (0, 3, 1), (3, 1, 1)), CoalescenceSpec(path_graph(6), (5,), (1,))]
    buf = io.StringIO()
    write_dot(buf, specs, name="demo")
    text = buf.getvalue()
    assert text.count("graph demo_") == 2
    assert "droplet=true" in text
    assert read_dot(text) == specs


def test_dot_parses_with_pydot():
    pydot = pytest.importorskip("pydot")
    spec = CoalescenceSpec(path_graph(5), (1, 3), (2, 1))
    buf = io.StringIO()
    write_dot(buf, [spec, spec])
    parsed = pydot.graph_from_dot_data(buf.getvalue())
    assert len(parsed) == 2
    g = parsed[0]
    nodes = {n.get_name(): n for n in g.get_nodes()}
    assert nodes["v1"].get("mult") == "2" and nodes["v3"].get("mult") == "1"
    assert nodes["v0"].get("mult") is None
    plain = [e for e in g.get_edges() if e.get("style") is None]
    assert len(plain) == 4
