import io
import json

import pytest

from conftest import TETRAHEDRON, simplicial
from slc_dual.builtins import NAMES, UnknownExample, builtin_example, load_builtin
from slc_dual.cell_complex import boundary_matrix, isomorphic
from slc_dual.cli import run_cli
from slc_dual.construction import build_dual_complex
from slc_dual.io import (
    ParseError,
    data_from_document,
    dumps,
    export_complex,
    export_off,
    format_report,
    load_complex,
    parse_gluing_data,
    parse_off,
    report_document,
    to_document,
)
from slc_dual.slc_data import validate


def cli(*argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run_cli(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def example_file(tmp_path):
    def write(name, doc=None):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(doc if doc is not None else builtin_example(name)))
        return str(path)
    return write


def test_every_builtin_validates():
    for name in NAMES:
        assert validate(load_builtin(name)).violations == ()


def test_unknown_builtin():
    with pytest.raises(UnknownExample):
        builtin_example("nope")


def test_builtin_contents():
    doc = builtin_example("pinch-point")
    assert len(doc["components"]) == 1 and len(doc["points"]) == 1
    assert doc["involution"]["curve_pairs"] == [["s", "s"], ["t", "t"]]
    assert all(a == b for a, b in doc["involution"]["incidence_pairs"])
    # handing out copies, not the stored document
    doc["components"].append("junk")
    assert builtin_example("pinch-point")["components"] == ["A2"]


def test_document_round_trip():
    for name in NAMES:
        d = load_builtin(name)
        assert data_from_document(to_document(d)) == d
        assert data_from_document(json.loads(dumps(to_document(d)))) == d


def test_pairs_normalized_on_load():
    doc = {
        "components": ["D"],
        "curves": [{"id": "b", "component": "D"}, {"id": "a", "component": "D"}],
        "points": [],
        "involution": {"curve_pairs": [["b", "a"]]},
    }
    d = data_from_document(doc)
    assert tuple(d.curve_matching) == (("a", "b"),)


def test_only_components_required():
    d = parse_gluing_data('{"components": ["D"]}')
    assert validate(d).ok
    assert build_dual_complex(d).complex.counts() == (1, 0, 0)


@pytest.mark.parametrize(
    "text, field",
    [
        ("{}", "components"),
        ('{"components": "D"}', "components"),
        ('{"components": [1]}', "components[0]"),
        ('{"components": ["D"], "curves": [{"id": "c", "component": "E"}]}', "curves[0].component"),
        ('{"components": ["D"], "curves": [{"id": "c"}]}', "curves[0].component"),
        ('{"components": ["D"], "points": [{"id": "p", "component": "D", "curves": ["x", "y"]}]}',
         "points[0].curves[0]"),
        ('{"components": ["D"], "curves": [{"id": "c", "component": "D"}], '
         '"points": [{"id": "p", "component": "D", "curves": ["c"]}]}', "points[0].curves"),
        ('{"components": ["D"], "involution": {"curve_pairs": [["x", "x"]]}}', "involution.curve_pairs[0][0]"),
        ('{"components": ["D"], "involution": {"incidence_pairs": [[["p", "c"], ["p", "c"]]]}}',
         "involution.incidence_pairs[0][0][0]"),
    ],
)
def test_parse_errors_name_the_field(text, field):
    with pytest.raises(ParseError) as exc:
        parse_gluing_data(text)
    assert exc.value.field == field


def test_json_syntax_error_has_line():
    with pytest.raises(ParseError) as exc:
        parse_gluing_data('{\n  "components": [\n')
    assert exc.value.line is not None


def test_export_complex_round_trip():
    for name in NAMES:
        r = build_dual_complex(load_builtin(name))
        doc = json.loads(dumps(export_complex(r)))
        assert doc["format"] == "slc-dual-complex"
        back = load_complex(doc)
        assert isomorphic(back, r.complex)
        for k in (1, 2):
            assert boundary_matrix(back, k) == boundary_matrix(r.complex, k)


def test_export_counts_and_provenance():
    doc = export_complex(build_dual_complex(load_builtin("pinch-point")))
    assert (len(doc["vertices"]), len(doc["edges"]), len(doc["triangles"])) == (4, 5, 2)
    prov = {v["id"]: v.get("provenance") for v in doc["vertices"]}
    assert prov["Z:O"] == {"kind": "ZeroCenter", "ref": "O"}
    doc = export_complex(build_dual_complex(load_builtin("x31-figure")))
    assert (len(doc["vertices"]), len(doc["edges"]), len(doc["triangles"])) == (7, 16, 12)
    empty = export_complex(build_dual_complex(parse_gluing_data('{"components": []}')))
    assert empty["vertices"] == [] and empty["edges"] == [] and empty["triangles"] == []


def test_load_complex_rejects_other_documents():
    with pytest.raises(ParseError):
        load_complex({"format": "other"})
    with pytest.raises(ParseError):
        load_complex({"format": "slc-dual-complex", "vertices": []})


def test_off_export():
    verts, faces = parse_off(export_off(simplicial(TETRAHEDRON)))
    assert len(verts) == 4 and len(faces) == 4
    assert all(abs(sum(x * x for x in v) - 1) < 1e-5 for v in verts)
    text = export_off(build_dual_complex(load_builtin("pinch-point")))
    assert text.splitlines()[:2] == ["OFF", "4 2 5"]
    assert len(parse_off(text)[1]) == 2
    assert text.rstrip().endswith("omitted 0 face(s) with repeated vertices")
    verts, faces = parse_off(export_off(build_dual_complex(load_builtin("x31-figure"))))
    assert len(faces) == 12


def test_off_omits_degenerate_faces():
    from slc_dual.cell_complex import CellComplex, Edge, Triangle, Vertex

    c = CellComplex(
        (Vertex("a"), Vertex("b")),
        (Edge("x", ("a", "b")), Edge("l", ("b", "b"))),
        (Triangle("t", ("x", "l", "x"), ("a", "b", "b")),),
    )
    text = export_off(c)
    assert text.splitlines()[1] == "2 0 2"
    assert "omitted 1 face(s)" in text
    with pytest.raises(ParseError):
        parse_off("NOFF\n")


def test_report_document_fields():
    doc = report_document(load_builtin("x31-figure"))
    assert doc["euler_characteristic"] == 3
    assert doc["betti"] == [1, 0, 2]
    assert doc["torsion"] == [[], [], []]
    assert doc["cells"] == {"vertices": 7, "edges": 16, "triangles": 12}
    assert [z["link_type"] for z in doc["zero_centers"]] == ["Circle"] * 4
    assert doc["surface_type"]["tag"] == "NotSurface"
    doc = report_document(load_builtin("pinch-point"))
    assert doc["surface_type"] == {"tag": "Disk", "orientable": True, "genus": 0, "boundary_components": 1}
    assert doc["zero_centers"] == [{"id": "O", "link_type": "Interval"}]


def test_report_on_disconnected_and_empty():
    d = parse_gluing_data('{"components": ["A", "B"]}')
    assert report_document(d)["surface_type"]["tag"] == "Disconnected"
    assert report_document(parse_gluing_data('{"components": []}'))["surface_type"] is None
    assert "surface type: empty" in format_report(report_document(parse_gluing_data('{"components": []}')))


def test_cli_report(example_file):
    code, out, _ = cli("report", example_file("x31-figure"))
    assert code == 0
    assert "euler characteristic: 3" in out and "betti=(1, 0, 2)" in out
    code, out, _ = cli("report", example_file("pinch-point"), "--json")
    doc = json.loads(out)
    assert code == 0 and doc["surface_type"]["tag"] == "Disk" and doc["euler_characteristic"] == 1


def test_cli_report_is_byte_identical(example_file):
    path = example_file("x31-text")
    runs = [cli("report", path, "--json")[1] for _ in range(3)] + [cli("report", path)[1] for _ in range(2)]
    assert runs[0] == runs[1] == runs[2] and runs[3] == runs[4]


def test_cli_validate(example_file):
    assert cli("validate", example_file("snc-triangle"))[:2] == (0, "valid\n")
    code, _, err = cli("validate", example_file("x31-text"))
    assert code == 0 and "W01-endpoint-rule" in err
    broken = builtin_example("snc-triangle")
    broken["involution"]["incidence_pairs"].append([["q1", "c12"], ["q3", "c31"]])
    code, _, err = cli("validate", example_file("broken", broken))
    assert code == 1 and "R07-involution" in err
    code, _, err = cli("report", example_file("broken", broken))
    assert code == 1 and "R07-involution" in err


def test_cli_parse_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    assert cli("validate", str(bad))[0] == 2
    assert cli("build", str(tmp_path / "missing.json"))[0] == 2
    assert cli("report", str(bad))[0] == 2
    assert cli("frobnicate")[0] == 2
    assert cli("example", "nope")[0] == 2


def test_cli_stdin(monkeypatch):
    code, out, _ = cli("validate", "-", stdin=json.dumps(builtin_example("loop-pair")), monkeypatch=monkeypatch)
    assert code == 0 and out == "valid\n"


def test_cli_build_writes_exports(example_file, tmp_path):
    cj, off = tmp_path / "c.json", tmp_path / "c.off"
    code, out, _ = cli("build", example_file("pinch-point"), "--complex", str(cj), "--off", str(off))
    assert code == 0 and out == "V=4 E=5 T=2 chi=1\n"
    back = load_complex(json.loads(cj.read_text()))
    assert back.counts() == (4, 5, 2)
    assert off.read_text().startswith("OFF\n4 2 5\n")


def test_cli_example(tmp_path):
    code, out, _ = cli("example", "x31-figure")
    assert code == 0 and json.loads(out) == builtin_example("x31-figure")
    target = tmp_path / "x.json"
    assert cli("example", "loop-pair", "--write", str(target))[0] == 0
    assert parse_gluing_data(target.read_text()) == load_builtin("loop-pair")
