"""
Command line, settings, exports and the verification report.
"""

import io
import json
from dataclasses import replace

import pytest

from fliplab.errors import InvalidFormatError
from fliplab.flipgraphs import build_edge_flip_graph
from fliplab.generators import convex_gon, random_points
from fliplab.geometry import format_points, write_points
from fliplab.scripts.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main
from fliplab.scripts.export import export_graph
from fliplab.scripts.verify import (
    REFERENCES,
    SUITES,
    CheckRecord,
    VerificationReport,
    resolve_suites,
    run_suites,
)
from fliplab.subdivisions import build_poset
from fliplab.triangulations import seed_full_triangulation
from fliplab.utils import Settings, load_settings

# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv("FLIPLAB_CAP", raising=False)
    monkeypatch.delenv("FLIPLAB_CONFIG", raising=False)


@pytest.fixture
def pentagon_file(tmp_path):
    path = tmp_path / "pentagon.txt"
    write_points(convex_gon(5), path)
    return str(path)


@pytest.fixture
def hexagon_file(tmp_path):
    path = tmp_path / "hexagon.txt"
    write_points(convex_gon(6), path)
    return str(path)


@pytest.fixture
def center_file(tmp_path):
    path = tmp_path / "center.txt"
    path.write_text("0 0\n30 0\n0 30\n10 10\n")
    return str(path)


# ---------------------------------------------------------------------------
# Settings
# ---------------------------------------------------------------------------


def test_default_settings():
    settings = load_settings()
    assert settings == Settings()
    assert settings.edge_flip_cap == 10 and settings.bistellar_cap == 8
    assert settings.seed == 0 and settings.log_level == "INFO"
    assert settings.random_sets_per_size == 50


def test_with_cap_replaces_every_cap():
    settings = Settings().with_cap(5)
    caps = (settings.edge_flip_cap, settings.poset_cap, settings.simflip_cap)
    assert caps == (5, 5, 5)
    assert Settings().with_cap(None) == Settings()


def test_yaml_settings(tmp_path):
    path = tmp_path / "fliplab.yaml"
    path.write_text(
        "edge_flip_cap: 7\nseed: 42\nlog_level: DEBUG\nrandom_sets_per_size: 4\n"
        "unknown: 1\n"
    )
    settings = load_settings(path)
    assert settings.edge_flip_cap == 7
    assert settings.random_sets_per_size == 4
    assert settings.bistellar_cap == 8
    assert settings.seed == 42 and settings.log_level == "DEBUG"


def test_config_from_environment(tmp_path, monkeypatch):
    path = tmp_path / "fliplab.yaml"
    path.write_text("seed: 9\n")
    monkeypatch.setenv("FLIPLAB_CONFIG", str(path))
    monkeypatch.setenv("FLIPLAB_CAP", "6")
    settings = load_settings()
    assert settings.seed == 9
    assert settings.edge_flip_cap == settings.chain_cap == 6


@pytest.mark.parametrize(
    "text", ["edge_flip_cap: [1, 2\n", "- a list\n", "seed: abc\n"]
)
def test_bad_config(tmp_path, text):
    path = tmp_path / "bad.yaml"
    path.write_text(text)
    with pytest.raises(InvalidFormatError):
        load_settings(path)


def test_bad_cap_variable(monkeypatch):
    monkeypatch.setenv("FLIPLAB_CAP", "many")
    with pytest.raises(InvalidFormatError):
        load_settings()


# ---------------------------------------------------------------------------
# Exports
# ---------------------------------------------------------------------------


def test_exports_are_deterministic():
    ps = convex_gon(6)
    a = export_graph(build_edge_flip_graph(ps), "json")
    b = export_graph(build_edge_flip_graph(ps), "json")
    assert a == b
    payload = json.loads(a)
    assert payload["directed"] is False
    assert len(payload["nodes"]) == 14 and len(payload["edges"]) == 21
    ids = [node["id"] for node in payload["nodes"]]
    assert ids == sorted(ids)


def test_export_formats():
    g = build_edge_flip_graph(convex_gon(5))
    assert export_graph(g, "dot").startswith("graph G {")
    assert "<graphml" in export_graph(g, "graphml")
    poset = build_poset(convex_gon(5))
    assert export_graph(poset, "dot").startswith("digraph G {")
    with pytest.raises(InvalidFormatError):
        export_graph(g, "png")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def test_gen_convex(capsys):
    assert main(["gen", "convex", "--n", "5"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 5


def test_gen_random_uses_seed(capsys):
    assert main(["gen", "random", "--n", "5", "--seed", "3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out == format_points(random_points(5, seed=3), "text").rstrip("\n") + "\n"


def test_flipgraph_json(capsys, pentagon_file):
    assert main(["flipgraph", pentagon_file, "--format", "json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["nodes"]) == 5
    assert len(payload["edges"]) == 5
    assert all(e["label"].startswith("e") for e in payload["edges"])


def test_flipgraph_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("0 0\n30 0\n0 30\n10 10\n"))
    assert main(["--format", "json", "flipgraph", "-", "--kind", "bistellar"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["nodes"]) == 2


def test_flipgraph_reads_stdin_without_a_path(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("0 0\n30 0\n0 30\n10 10\n"))
    assert main(["--format", "json", "flipgraph", "--kind", "bistellar"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["nodes"]) == 2 and len(payload["edges"]) == 1


def test_connectivity(capsys, pentagon_file, tmp_path):
    assert main(["connectivity", pentagon_file, "--kind", "edge"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "2"

    exported = tmp_path / "graph.json"
    args = ["-o", str(exported), "--format", "json", "flipgraph", pentagon_file]
    assert main(args) == EXIT_OK
    assert main(["connectivity", str(exported), "--format", "json"]) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert result == {"connectivity": 2, "edges": 5, "min_degree": 2, "nodes": 5}


def test_link_of_given_triangulation(capsys, hexagon_file):
    key = seed_full_triangulation(convex_gon(6)).key.hex()
    args = ["link", hexagon_file, "--triangulation", key, "--format", "json"]
    assert main(args) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["nodes"]) == 3
    assert sorted(e["weight"] for e in payload["edges"]) == [2, 3, 3]


def test_link_rejects_bad_key(hexagon_file):
    assert main(["link", hexagon_file, "--triangulation", "zz"]) == EXIT_USAGE


def test_poset(capsys, center_file):
    assert main(["poset", center_file]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["directed"] is True
    assert len(payload["nodes"]) == 3
    assert "height_max" in payload["graph"]


def test_regular_mother(capsys):
    assert main(["--format", "text", "regular", "--mother", "concurrent"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == [
        "S: regular",
        "T': non-regular",
        "T'': non-regular",
    ]


def test_regular_json_with_certificate(capsys, center_file):
    assert main(["regular", center_file, "--certify"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["T"]["regular"] is True
    assert payload["T"]["witness"] is not None


def test_regular_needs_points():
    assert main(["regular"]) == EXIT_USAGE


# ---------------------------------------------------------------------------
# Exit codes
# ---------------------------------------------------------------------------


def test_malformed_points(tmp_path):
    path = tmp_path / "collinear.txt"
    path.write_text("0 0\n1 1\n2 2\n")
    assert main(["flipgraph", str(path)]) == EXIT_USAGE
    assert main(["flipgraph", str(tmp_path / "missing.txt")]) == EXIT_USAGE


def test_cap_exceeded(hexagon_file, monkeypatch, tmp_path):
    assert main(["--cap", "5", "flipgraph", hexagon_file]) == EXIT_FAILED
    assert main(["flipgraph", hexagon_file, "--cap", "5"]) == EXIT_FAILED
    monkeypatch.setenv("FLIPLAB_CAP", "5")
    assert main(["flipgraph", hexagon_file]) == EXIT_FAILED


def test_config_file_option(hexagon_file, tmp_path):
    path = tmp_path / "fliplab.yaml"
    path.write_text("edge_flip_cap: 4\n")
    assert main(["--config", str(path), "flipgraph", hexagon_file]) == EXIT_FAILED
    path.write_text("edge_flip_cap: [\n")
    assert main(["--config", str(path), "flipgraph", hexagon_file]) == EXIT_USAGE


def test_usage_errors():
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2
    with pytest.raises(SystemExit):
        main(["gen", "hexagonal"])


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def test_verify_mother(capsys):
    args = ["--format", "json", "verify", "--suite", "mother", "--n-max", "6"]
    assert main(args) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True
    assert payload["checks"] == 3
    checks = {r["check"] for r in payload["records"]}
    assert checks == {"mother-verdicts", "mother-order-type"}


def test_report_with_a_failure():
    report = VerificationReport(
        [
            CheckRecord("b-check", "claim", "convex-5", 5, "2", "2", True),
            CheckRecord("a-check", "claim", "convex-5", 5, "1", "0", False),
        ]
    )
    assert not report.passed
    assert [r.check for r in report.failures] == ["a-check"]
    assert [r.check for r in report.sorted_records()] == ["a-check", "b-check"]
    assert list(report.to_frame()["check"]) == ["a-check", "b-check"]
    assert "a-check" in report.to_table()
    assert json.loads(report.to_json())["failures"] == 1


def test_report_traceability():
    report = VerificationReport(
        [
            CheckRecord("b-check", "claim", "convex-5", 5, "2", "2", True, "ref b"),
            CheckRecord("a-check", "claim", "convex-6", 6, "2", "2", True, "ref a"),
        ]
    )
    assert report.traceability() == {"a-check": "ref a", "b-check": "ref b"}
    payload = json.loads(report.to_json())
    assert payload["traceability"] == {"a-check": "ref a", "b-check": "ref b"}
    assert payload["records"][0]["reference"] == "ref a"
    assert report.to_table().splitlines()[-1].split() == ["b-check", "ref", "b"]


def test_empty_report():
    assert VerificationReport().to_table() == "no checks ran"


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suites(["nope"], Settings())


def test_suite_aliases_resolve_once():
    assert resolve_suites(["thm2", "flippable-edges", "thm3ii"]) == [
        "flippable-edges",
        "edge-connectivity",
    ]
    assert resolve_suites(["thm4", "thm5"]) == [
        "bistellar-degree",
        "bistellar-connectivity",
    ]
    assert resolve_suites(["thm5", "all"]) == list(SUITES)


def test_verify_by_alias(capsys):
    args = ["--format", "json", "verify", "--suite", "thm5", "--n-max", "5"]
    assert main(args) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True
    checks = {r["check"] for r in payload["records"]}
    assert checks == {"bistellar-connectivity", "local-menger"}
    assert payload["traceability"]["bistellar-connectivity"].startswith("thm5")


def test_every_record_is_traceable():
    settings = replace(Settings(), random_sets_per_size=1)
    report = run_suites(["thm2", "mother"], settings, n_max=6)
    assert report.passed, report.to_table()
    assert all(r.reference == REFERENCES[r.check] for r in report.records)


def test_random_sets_per_size_is_honoured():
    settings = replace(Settings(), random_sets_per_size=2)
    report = run_suites(["edge-connectivity"], settings, n_max=5)
    random_instances = {r.instance for r in report.records if "random" in r.instance}
    assert random_instances == {"random-5-s0", "random-5-s1"}


@pytest.mark.slow
def test_every_suite_passes_on_small_sets():
    settings = replace(Settings(), random_sets_per_size=2)
    report = run_suites(["all"], settings, n_max=6)
    assert report.passed, report.to_table()


@pytest.mark.slow
def test_predicates_and_partial_links_reach_seven_points():
    settings = replace(Settings(), random_sets_per_size=1)
    report = run_suites(["regularity", "links"], settings, n_max=7)
    assert report.passed, report.to_table()
    seven = {(r.check, r.instance) for r in report.records if r.n == 7}
    assert ("regularity-predicates", "convex-7") in seven
    assert ("links-partial", "convex-7") in seven
    assert ("links-partial", "random-7-s0") in seven


@pytest.mark.slow
def test_twisted_suite_up_to_eight_points():
    report = run_suites(["twisted"], Settings(), n_max=8)
    assert report.passed, report.to_table()
    instances = {r.instance for r in report.records}
    assert instances == {"twisted-3", "twisted-4"}
