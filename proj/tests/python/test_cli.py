import json
import os
import subprocess

import pytest

CLI = os.environ.get("PSILAB_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="PSILAB_CLI not set")


def run(*args, stdin=None):
    return subprocess.run([CLI, "--json-indent", "-1", *args], input=stdin, capture_output=True, text=True)


def test_psi():
    r = run("psi", "Bg")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["schema"] == "psi-lab/psi/1"
    assert doc["psi"] == 2 and doc["exact"]
    assert len(doc["witness"]) == 3 and max(doc["witness"]) == 2
    assert doc["bounds"]


def test_critical():
    doc = json.loads(run("critical", "Bg").stdout)
    assert doc["critical"] is False and doc["weakly_critical"] is True


def test_nabla_pipes_into_psi():
    nabla = run("nabla", "--k", "2", "Bg")
    assert nabla.returncode == 0
    r = run("psi", "-", stdin=nabla.stdout)
    assert r.returncode == 0
    assert json.loads(r.stdout)["psi"] == 5


def test_plain_graph6_on_stdin_and_files(tmp_path):
    assert json.loads(run("omega", "-", stdin="Bw\n").stdout)["omega"] == 3
    f = tmp_path / "g.g6"
    f.write_text(">>graph6<<Bg\n")
    assert json.loads(run("omega", str(f)).stdout)["omega"] == 2


def test_every_subcommand_emits_json():
    for args in (["omega", "Bg"], ["mpd", "Bg"], ["mpd", "--k", "2", "Bg"], ["join", "Bg", "@"],
                 ["witness", "Bg"], ["structure", "Bg"], ["verify", "--list"]):
        r = run(*args)
        assert r.returncode == 0, args
        assert json.loads(r.stdout)["schema"].startswith("psi-lab/")


def test_verify_selected_checks(tmp_path):
    corpus = tmp_path / "corpus.g6"
    corpus.write_text("Bg\nGhCGKC\n")
    out = tmp_path / "report.json"
    r = run("--output", str(out), "verify", "--corpus", str(corpus), "--check", "remark-p3-c8",
            "--check", "lemma-2-upper-bound")
    assert r.returncode == 0
    doc = json.loads(out.read_text())
    assert doc["schema"] == "psi-lab/verify/1" and doc["passed"]
    assert [c["check_id"] for c in doc["checks"]] == ["lemma-2-upper-bound", "remark-p3-c8"]


def test_usage_errors_exit_2():
    assert run("psi", "B").returncode == 2
    assert run("psi").returncode == 2
    assert run("nabla", "Bg").returncode == 2
    assert run("mpd", "--k", "9", "Bg").returncode == 2
    assert run("verify", "--check", "nope").returncode == 2
    assert run("psi", "B").stderr


def test_budget_exhaustion_exits_3():
    r = run("--budget", "1", "psi", "GhCGKC")
    assert r.returncode == 3
    doc = json.loads(r.stdout)
    assert doc["exact"] is False


def test_budget_from_environment():
    env = dict(os.environ, PSILAB_BUDGET="1")
    r = subprocess.run([CLI, "psi", "GhCGKC"], capture_output=True, text=True, env=env)
    assert r.returncode == 3
