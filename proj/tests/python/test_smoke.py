"""End-to-end smoke tests for the python bindings and the CLI.

The ctest harness points HAMSPEC_MODULE_DIR at the build directory holding the
compiled extension and HAMSPEC_CLI at the command-line binary. An installed
wheel needs neither.
"""

import json
import math
import os
import subprocess
import sys
from pathlib import Path

import pytest

_module_dir = os.environ.get("HAMSPEC_MODULE_DIR")
if _module_dir and _module_dir not in sys.path:
    sys.path.insert(0, _module_dir)

_repo_python = Path(__file__).resolve().parents[2] / "python"
if str(_repo_python) not in sys.path:
    sys.path.insert(0, str(_repo_python))

import hamspec  # noqa: E402


def test_graph_roundtrip_and_invariants():
    g = hamspec.complete_graph(5)
    assert g.n == 5
    assert g.m == 10
    assert g.min_degree() == 4
    assert g.is_connected()
    code = g.to_graph6()
    assert hamspec.Graph.from_graph6(code) == g

    h = hamspec.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert h.m == 3
    assert h.degree(1) == 2
    assert not h.has_edge(0, 3)
    assert h.degree_sequence() == [1, 1, 2, 2]


def test_constructions_compose():
    w = hamspec.join(hamspec.complete_graph(1), hamspec.cycle_graph(5))
    assert (w.n, w.m) == (6, 10)
    u = hamspec.disjoint_union(hamspec.path_graph(3), hamspec.complete_graph(2))
    assert (u.n, u.m) == (5, 3)
    assert not u.is_connected()
    c = hamspec.complement(hamspec.complete_graph(4))
    assert c.m == 0


def test_families_and_edge_counts():
    s = hamspec.s_graph(14, 3)
    assert s.n == 14
    assert s.m == hamspec.s_graph_edges(14, 3) == 72
    t = hamspec.t_graph(14, 3)
    assert t.m == hamspec.t_graph_edges(14, 3) == 71

    h3 = hamspec.named_variant("H3", 14)
    assert h3.m == 71

    names = [name for name, _ in hamspec.np1_graphs(12)]
    assert "K6v6K1" in names

    k7 = hamspec.sporadic_exception("K7_K2_K16")
    assert (k7.n, k7.m) == (16, 91)
    ee = hamspec.sporadic_exception("Kn1_ee", 11)
    assert ee.min_degree() == 2


def test_spectra():
    assert hamspec.spectral_radius(hamspec.complete_graph(7)) == pytest.approx(6.0, abs=1e-9)
    assert hamspec.signless_laplacian_radius(hamspec.cycle_graph(8)) == pytest.approx(
        4.0, abs=1e-9
    )
    rho = hamspec.spectral_radius(hamspec.s_graph(14, 7))
    assert rho == pytest.approx(10.6158, abs=1e-3)
    q = hamspec.signless_laplacian_radius(hamspec.s_graph(13, 6))
    assert q == pytest.approx(20.1157, abs=1e-3)


def test_oracle():
    res = hamspec.is_hamilton_connected(hamspec.complete_graph(6))
    assert res["hamilton_connected"] is True
    assert "failing_pair" not in res

    res = hamspec.is_hamilton_connected(hamspec.cycle_graph(6))
    assert res["hamilton_connected"] is False
    assert tuple(res["failing_pair"]) == (0, 2)

    path = hamspec.hamilton_path_between(hamspec.complete_graph(5), 0, 3)
    assert path is not None
    assert sorted(path) == [0, 1, 2, 3, 4]
    assert path[0] == 0 and path[-1] == 3

    # Two join vertices of S_11_3: both independent vertices would need two
    # of the three join vertices as interior neighbours, which starves the
    # big clique of any connection. No spanning path exists.
    assert hamspec.hamilton_path_between(hamspec.s_graph(11, 3), 0, 1) is None


def test_conditions():
    ids = hamspec.condition_ids()
    assert len(ids) == 15
    assert ids[0] == "nhc_scan"

    v = hamspec.evaluate_condition(hamspec.complete_graph(12), "ore")
    assert v["outcome"] == "certified"
    assert v["evidence"]["m"] == 66.0

    v = hamspec.evaluate_condition(hamspec.s_graph(14, 3), "main")
    assert v["outcome"] == "exception_member"
    assert v["exception_id"] == "S_n_3"

    all_verdicts = hamspec.evaluate_all(hamspec.complete_graph(15))
    assert [w["condition_id"] for w in all_verdicts] == ids
    assert all(w["outcome"] == "certified" for w in all_verdicts)


def test_isomorphism():
    a = hamspec.path_graph(6)
    b = hamspec.Graph.from_edges(6, [(5, 3), (3, 1), (1, 0), (0, 2), (2, 4)])
    assert hamspec.are_isomorphic(a, b)
    assert hamspec.fingerprint(a) == hamspec.fingerprint(b)
    assert not hamspec.are_isomorphic(a, hamspec.cycle_graph(6))


def test_reproduce_rows_all_pass():
    rows = hamspec.reproduce_paper_numbers()
    assert len(rows) >= 30
    bad = [r for r in rows if not r["pass"]]
    assert bad == []


def test_run_campaign_families():
    out = hamspec.run_campaign(
        "mode = families\nn_lo = 11\nn_hi = 11\nseed = 3\n"
        "conditions = main, cor15\noracle_policy = always\n"
    )
    assert out["records"] > 10
    assert out["anomalies"] == 0
    assert out["parse_errors"] == 0
    lines = [json.loads(l) for l in out["jsonl"].splitlines()]
    assert len(lines) == out["records"]
    assert all(r["n"] == 11 for r in lines)
    assert out["summary_csv"].startswith("condition_id,")


def test_run_campaign_ingest():
    corpus = "\n".join(
        [
            hamspec.complete_graph(7).to_graph6(),
            "# a comment",
            hamspec.cycle_graph(7).to_graph6(),  # filtered: min degree 2
            "!!!",
        ]
    )
    out = hamspec.run_campaign(
        "mode = ingest\nconditions = nhc_scan, ore\noracle_policy = on_claim\n",
        corpus,
    )
    assert out["records"] == 1
    assert out["parse_errors"] == 1
    assert out["anomalies"] == 0


def test_campaign_rejects_bad_config():
    with pytest.raises(ValueError):
        hamspec.run_campaign("mode = nope\n")


@pytest.mark.skipif("HAMSPEC_CLI" not in os.environ, reason="needs the built CLI")
def test_cli_spectra_and_reproduce():
    cli = os.environ["HAMSPEC_CLI"]
    code = hamspec.s_graph(14, 7).to_graph6()
    out = subprocess.run(
        [cli, "spectra"], input=code + "\n", capture_output=True, text=True, check=True
    )
    fields = dict(tok.split("=", 1) for tok in out.stdout.split())
    assert math.isclose(float(fields["rho"]), 10.6158, abs_tol=1e-3)
    assert math.isclose(float(fields["q"]), 22.2195, abs_tol=1e-3)

    out = subprocess.run([cli, "reproduce"], capture_output=True, text=True, check=True)
    assert out.stdout.startswith("quantity,expected,computed,pass")
    assert ",false" not in out.stdout
