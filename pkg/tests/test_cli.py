import json

from hyperzagreb.cli import main
from hyperzagreb.codec import encode_graph6
from hyperzagreb.families import cycle_with_attachments
from hyperzagreb.rooted import path_form


def test_compute_edgelist(tmp_path, capsys):
    # the n = 15 triangle with a 2-edge path and ten leaves
    g = cycle_with_attachments(3, [(0, path_form(2)), (1, 10)])
    f = tmp_path / "g.edges"
    lines = [f"{g.n} {g.num_edges}"] + [f"{u} {v}" for u, v in g.edges()]
    f.write_text("\n".join(lines) + "\n")
    assert main(["compute", str(f)]) == 0
    out = capsys.readouterr().out
    assert "hm: 2170" in out
    assert "identity hm = f + 2*m2: ok" in out


def test_compute_graph6(tmp_path, capsys):
    f = tmp_path / "c3.g6"
    f.write_text("Bw\n")
    assert main(["compute", str(f), "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["hm"] == 48 and payload["n"] == 3


def test_compute_parse_failure(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("3 9\n0 1\n")
    assert main(["compute", str(f)]) == 2


def test_compute_missing_file():
    assert main(["compute", "/nonexistent/path.g6"]) == 5


def test_family_command(capsys):
    assert main(["family", "S_n", "6"]) == 0
    out = capsys.readouterr().out
    assert "hm: 180" in out and "status: EQUAL" in out
    assert main(["family", "T^3_n", "10"]) == 0
    out = capsys.readouterr().out
    assert "hm: 500" in out and "status: EQUAL" in out


def test_family_error_codes(capsys):
    assert main(["family", "T^9_n", "10"]) == 3
    capsys.readouterr()
    assert main(["family", "T^2_n", "5"]) == 4


def test_enumerate_to_file(tmp_path, capsys):
    out = tmp_path / "trees7.g6"
    assert main(["enumerate", "trees", "7", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 11
    assert capsys.readouterr().out == "count: 11\n"

    out = tmp_path / "uni4.g6"
    assert main(["enumerate", "unicyclic", "4", "--out", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 2
    capsys.readouterr()

    out = tmp_path / "tree1.g6"
    assert main(["enumerate", "trees", "1", "--out", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 1


def test_enumerate_stdout_count_on_stderr(capsys):
    assert main(["enumerate", "trees", "4"]) == 0
    captured = capsys.readouterr()
    assert len(captured.out.splitlines()) == 2
    assert captured.err == "count: 2\n"


def test_rank_csv(capsys):
    assert main(["rank", "trees", "8", "-k", "3", "--format", "csv"]) == 0
    rows = capsys.readouterr().out.splitlines()
    assert rows[0] == "rank,hm,family,graph6"
    assert rows[1].startswith("1,448,S_n,")


def test_verify_trees_range(capsys):
    assert main(["verify", "trees", "8..10"]) == 0
    out = capsys.readouterr().out
    assert out.count("verdict: pass") == 3


def test_verify_unicyclic_report_only_exit_zero(capsys):
    # below the claim threshold the verdict is report-only, which passes
    assert main(["verify", "unicyclic", "8"]) == 0
    assert "verdict: report-only" in capsys.readouterr().out


def test_verify_closed_forms(capsys):
    assert main(["verify", "closed-forms", "15..20", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True
    assert payload["scale_check"]["miscounted"] == 2614


def test_verify_lemmas_small(capsys):
    assert main(["verify", "lemmas", "--seed", "1", "--trials", "50"]) == 0
    out = capsys.readouterr().out
    assert "check: attachment-shift status: pass" in out


def test_verify_discover_threshold(capsys):
    assert main(["verify", "trees", "6..8", "--discover-threshold"]) == 0
    assert "discovered_threshold: 6" in capsys.readouterr().out


def test_transform_reduce(tmp_path, capsys):
    from hyperzagreb.families import cycle_with_stars

    g = cycle_with_stars(5, [1, 1, 1, 1, 1])
    f = tmp_path / "g.g6"
    f.write_text(encode_graph6(g) + "\n")
    assert main(["transform", "reduce", str(f)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].endswith("hm: 260")
    assert lines[-1].endswith("hm: 530")


def test_transform_reduce_domain_error(tmp_path, capsys):
    f = tmp_path / "tree.g6"
    from hyperzagreb.families import path

    f.write_text(encode_graph6(path(5)) + "\n")
    assert main(["transform", "reduce", str(f)]) == 4


def test_transform_coalesce(tmp_path, capsys):
    f1 = tmp_path / "a.g6"
    f2 = tmp_path / "b.g6"
    from hyperzagreb.families import cycle, star

    f1.write_text(encode_graph6(cycle(3)) + "\n")
    f2.write_text(encode_graph6(star(13)) + "\n")
    assert main([
        "transform", "coalesce", str(f1), str(f2), "--at", "0", "--to", "0",
    ]) == 0
    assert "hm: 3228" in capsys.readouterr().out


def test_output_deterministic(capsys):
    assert main(["rank", "unicyclic", "8", "-k", "5"]) == 0
    first = capsys.readouterr().out
    assert main(["rank", "unicyclic", "8", "-k", "5"]) == 0
    assert capsys.readouterr().out == first
