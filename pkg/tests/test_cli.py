import xml.etree.ElementTree as ET

from tropical_patchwork.cli import main
from tropical_patchwork.datasets import instance_path


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_betti_example1(capsys):
    status, out, _ = run(capsys, "betti", instance_path("harnack_cubic"))
    assert status == 0
    assert out == "betti: 2 2\nchi: 0\n"


def test_betti_example2(capsys):
    status, out, _ = run(capsys, "betti", instance_path("cubic_surface_212"))
    assert status == 0
    assert out.splitlines()[0] == "betti: 2 1 2"
    assert out.splitlines()[1] == "chi: 3"


def test_betti_parse_error_status(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 3\n1 1 0 5 0\n")
    status, _, err = run(capsys, "betti", str(bad))
    assert status == 2
    assert "error:" in err and len(err.strip().splitlines()) == 1


def test_betti_missing_file_status(capsys):
    status, _, err = run(capsys, "betti", "/nonexistent/file.txt")
    assert status == 2


def test_betti_non_triangulation_status(tmp_path, capsys):
    flat = tmp_path / "flat.txt"
    lines = ["3 2"]
    from tropical_patchwork.core import lattice_points
    for v in lattice_points(3, 2):
        lines.append(" ".join(map(str, v)) + " 0 0")
    flat.write_text("\n".join(lines) + "\n")
    status, _, err = run(capsys, "betti", str(flat))
    assert status == 3
    assert "triangulation" in err


def test_subdivision_report(capsys):
    status, out, _ = run(capsys, "subdivision", instance_path("cubic_surface_212"))
    assert status == 0
    assert out == ("f-vector: 20 60 64 23\n"
                   "full: yes\n"
                   "triangulation: yes\n"
                   "unimodular: no\n")


def test_subdivision_f_vector_flag(capsys):
    status, out, _ = run(capsys, "subdivision", "--f-vector",
                         instance_path("harnack_cubic"))
    assert status == 0
    assert out == "f-vector: 10 18 9\n"


def test_gen_roundtrip_through_betti(tmp_path, capsys):
    path = tmp_path / "gen.txt"
    status, _, _ = run(capsys, "gen", "--canonical", "--n", "3", "--d", "3",
                       "--seed", "5", "-o", str(path))
    assert status == 0
    status, out, _ = run(capsys, "betti", str(path))
    assert status == 0
    assert out.startswith("betti: ")


def test_gen_random_deterministic(tmp_path, capsys):
    p1, p2 = tmp_path / "a.txt", tmp_path / "b.txt"
    for p in (p1, p2):
        status, _, _ = run(capsys, "gen", "--random", "--n", "4", "--d", "3",
                           "--seed", "11", "-o", str(p))
        assert status == 0
    assert p1.read_text() == p2.read_text()


def test_census_csv_and_determinism(tmp_path, capsys):
    outs = []
    for workers, name in ((1, "a.csv"), (2, "b.csv")):
        path = tmp_path / name
        status, out, _ = run(capsys, "census", "--n", "4", "--d", "3",
                             "--triangulations", "3", "--signs", "2",
                             "--seed", "7", "--out", str(path),
                             "--workers", str(workers))
        assert status == 0
        assert "betti histogram:" in out
        outs.append(path.read_text())
    header, *rows_a = outs[0].splitlines()
    assert header == ("tri_index,sign_index,tri_seed,sign_seed,full,unimodular,"
                      "f0,f1,f2,f3,b0,b1,b2,chi,wall_ms")
    assert len(rows_a) == 6
    strip = lambda text: [r.rsplit(",", 1)[0] for r in text.splitlines()]
    assert strip(outs[0]) == strip(outs[1])  # identical apart from wall_ms
    for row in rows_a:
        fields = row.split(",")
        assert fields[4] in ("true", "false") and fields[5] in ("true", "false")
        b = list(map(int, fields[10:13]))
        chi = int(fields[13])
        assert chi == b[0] - b[1] + b[2]


def test_census_header_for_curves(tmp_path, capsys):
    path = tmp_path / "c.csv"
    status, _, _ = run(capsys, "census", "--n", "3", "--d", "2",
                       "--triangulations", "2", "--signs", "2",
                       "--seed", "1", "--out", str(path), "--workers", "1")
    assert status == 0
    header = path.read_text().splitlines()[0]
    assert header == ("tri_index,sign_index,tri_seed,sign_seed,full,unimodular,"
                      "f0,f1,f2,b0,b1,chi,wall_ms")


def test_plot_example1(tmp_path, capsys):
    out_svg = tmp_path / "curve.svg"
    status, _, _ = run(capsys, "plot", instance_path("harnack_cubic"),
                       "-o", str(out_svg))
    assert status == 0
    root = ET.parse(out_svg).getroot()
    assert root.tag.endswith("svg")
    circles = [e for e in root.iter() if e.tag.endswith("circle")
               and e.get("class") == "trop-vertex"]
    assert len(circles) == 9
    arcs = [e for e in root.iter() if e.tag.endswith("line")
            and e.get("class") == "real-arc"]
    assert len({a.get("stroke") for a in arcs}) == 2


def test_plot_rejects_surfaces(tmp_path, capsys):
    status, _, err = run(capsys, "plot", instance_path("cubic_surface_212"),
                         "-o", str(tmp_path / "x.svg"))
    assert status == 3


def test_plot_degree_one(tmp_path, capsys):
    inst = tmp_path / "line.txt"
    inst.write_text("3 1\n1 0 0 0 0\n0 1 0 0 1\n0 0 1 0 0\n")
    out_svg = tmp_path / "line.svg"
    status, _, _ = run(capsys, "plot", str(inst), "-o", str(out_svg))
    assert status == 0
    ET.parse(out_svg)
