import json

from hecke.cli import main
from hecke import corpus


def fixture(tmp_path, name):
    path = tmp_path / f"{name}.json"
    path.write_text(corpus.dumps(corpus.load(name)))
    return str(path)


def test_verify_good_and_bad(tmp_path, capsys):
    good = fixture(tmp_path, "katoB1")
    assert main(["verify", good]) == 0
    assert "module OK" in capsys.readouterr().out
    data = json.loads(open(good).read())
    data["mats"]["X1"][0][1] = "1"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    assert main(["verify", str(bad)]) == 1


def test_usage_errors(tmp_path):
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert main(["char", str(junk)]) == 2
    assert main(["char", str(tmp_path / "missing.json")]) == 2
    assert main(["nonsense"]) == 2
    assert main(["mseg", "(0..1)", "--k", "0"]) == 2
    assert main(["fixtures", "build", "nope", "--out", str(tmp_path)]) == 2


def test_char_text(tmp_path, capsys):
    assert main(["char", fixture(tmp_path, "katoA3")]) == 0
    assert capsys.readouterr().out == "6\t(7,7,7)\n"


def test_crystal_split(tmp_path, capsys):
    assert main(["crystal", "f", fixture(tmp_path, "L-a0-q2"), "--a", "1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["tag"] == "SplitPair" and out["dims"] == [4, 4]


def test_mseg(capsys):
    assert main(["mseg", "[(0)]", "--k", "0", "--op", "e"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["eps"] == 1 and out["e"] == "[]"


def test_graph_is_deterministic(tmp_path):
    a, b = tmp_path / "a.dot", tmp_path / "b.dot"
    for path in (a, b):
        assert main(["graph", "--lambda", "5", "--n", "1", "--window", "1", "--dot", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().startswith("digraph crystal {")


def test_fixtures_rebuild_identically(tmp_path, capsys):
    assert main(["fixtures", "list"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == len(corpus.names())
    one, two = tmp_path / "one", tmp_path / "two"
    assert main(["fixtures", "build", "h1-example", "katoA2", "--out", str(one)]) == 0
    assert main(["fixtures", "build", "h1-example", "katoA2", "--out", str(two)]) == 0
    for name in ("h1-example", "katoA2"):
        assert (one / f"{name}.json").read_bytes() == (two / f"{name}.json").read_bytes()


def test_config_fills_missing_flags(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# defaults\nlambda = 5\nn = 1\nwindow = 1\nseed = 3\n")
    assert main(["graph", "--config", str(cfg)]) == 0
    g = json.loads(capsys.readouterr().out)
    assert len(g["nodes"]) == 7
    cfg.write_text("colour = red\n")
    assert main(["graph", "--config", str(cfg)]) == 2


def test_clifford_command(tmp_path, capsys):
    assert main(["clifford", fixture(tmp_path, "h1-example")]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["outcome"] == "Splits" and out["dims"] == [1, 1]
