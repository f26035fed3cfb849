import pytest

from treeblowup.campaign import CampaignError, load_config, parse_config, run_campaign, validate
from treeblowup.cli import EXIT_UNKNOWN, EXIT_USAGE, run

SMALL = """\
output_dir = out
census = family=aux:k=3 max-n=8 expect=5 graphs=DLo
grid = tree=edges:0-1,1-2,2-3,3-4 p=3 n=11,12
exhaustive = tree=edges:0-1,1-2,2-3 p=1 n=1..5
"""


def _write(tmp_path, text, name="c.cfg"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_empty_tree_list_is_usage_error(tmp_path, capsys):
    cfg = _write(tmp_path, "census = family=aux:k=2 max-n=2 expect=1\n")
    with pytest.raises(CampaignError):
        load_config(cfg)
    assert run(["campaign", "--config", cfg, "--out", str(tmp_path / "o")]) == EXIT_USAGE


def test_bad_configs(tmp_path):
    for text in (
        "grid = tree=edges:0-1,1-2,2-3,3-4 p=3\n",
        "grid = tree=edges:0-1,1-2,2-3,3-4 p=3 n=5\n",  # below the feasible order
        "grid = tree=missing.txt p=3 n=20\n",
        "grid = tree=edges:0-1,1-2,2-0 p=3 n=20\n",  # not a tree
        "budget = -1\n",
        "colour = blue\n",
    ):
        with pytest.raises(CampaignError):
            load_config(_write(tmp_path, text))
    with pytest.raises(CampaignError):
        load_config(str(tmp_path / "nope.cfg"))


def test_tree_file_relative_to_config(tmp_path):
    (tmp_path / "p5.txt").write_text("0 1\n1 2\n2 3\n3 4\n")
    cfg = load_config(_write(tmp_path, "grid = tree=p5.txt p=3 n=11\n"))
    assert len(cfg.grid) == 1


def test_small_campaign_passes_and_is_deterministic(tmp_path):
    path = _write(tmp_path, SMALL)
    first = run_campaign(load_config(path, out_dir=str(tmp_path / "a")))
    again = run_campaign(load_config(path, out_dir=str(tmp_path / "b"), workers=2))
    assert first.outcome == "PASS"
    assert first.path.read_bytes() == again.path.read_bytes()
    keys = [line.split()[0] for line in first.text().splitlines()[2:]]
    assert keys == sorted(keys)


def test_budget_zero_gives_unknown(tmp_path, capsys):
    path = _write(tmp_path, "budget = 0\ngrid = tree=edges:0-1,1-2,2-3,3-4 p=3 n=11\n")
    code = run(["campaign", "--config", path, "--out", str(tmp_path / "o")])
    out = capsys.readouterr().out
    assert code == EXIT_UNKNOWN
    report = (tmp_path / "o" / "campaign-report.txt").read_text().splitlines()
    checks = [line for line in report if "/free " in line or "/reduced " in line]
    assert checks and all(" UNKNOWN " in line for line in checks)
    assert "outcome=UNKNOWN" in out


def test_default_config_parses(tmp_path):
    cfg = load_config("default", out_dir=str(tmp_path))
    validate(cfg)
    points = sum(len(f["n"].split(",")) for f in cfg.grid)
    assert points >= 20
    assert cfg.chvatal_hanson == [3]


def test_parse_comments_and_blank_lines(tmp_path):
    cfg = parse_config("# header\n\nworkers = 2  # inline\n" + SMALL, tmp_path)
    assert cfg.workers == 2 and cfg.item_count() == 3


@pytest.mark.slow
def test_default_campaign_passes(tmp_path):
    report = run_campaign(load_config("default", out_dir=str(tmp_path), workers=2))
    assert report.outcome == "PASS", [r for r in report.rows if r[1] != "PASS"]
    census = {r[0]: r[2] for r in report.rows if r[0].startswith("census/")}
    assert "extremal=F@^V?,FBY^?,FB]eG,FHU^?,GJ?K[W" in census["census/aux:k=4/max-n=18"]
