import psilab


def test_named_values():
    assert psilab.psi("Bg")["psi"] == 2
    assert psilab.psi(psilab.cycle_graph(8))["psi"] == 4
    joined = psilab.join(psilab.path_graph(3), psilab.cycle_graph(8))
    assert joined.order == 11 and joined.edge_count == 34
    assert psilab.psi(joined)["psi"] == 6


def test_graph_round_trip():
    g = psilab.Graph.from_graph6("Bw")
    assert g == psilab.complete_graph(3)
    assert g.graph6() == "Bw"
    assert psilab.Graph(3, [(0, 1), (1, 2)]).graph6() == "Bg"


def test_bad_graph6_raises_value_error():
    try:
        psilab.Graph.from_graph6("B")
    except ValueError:
        return
    raise AssertionError("expected ValueError")


def test_criticality():
    p3 = psilab.criticality("Bg")
    assert not p3["critical"] and p3["weakly_critical"]
    assert p3["critical_by_mpd"] is False
    pp = psilab.criticality(psilab.nabla_k("Bg", 2))
    assert pp["critical"] and pp["psi"] == 5


def test_mpd_and_witnesses():
    assert psilab.mpd_profile("Bg") == [0, 0, 1, 2]
    assert psilab.witness_not_weakly_critical("Bg") is None
    w = psilab.witness_not_weakly_critical(psilab.cycle_graph(8))
    assert w is not None and len(w["m2"]) - len(w["m1"]) == 2


def test_constructions():
    colors = psilab.nabla_k_coloring("Bg", 5)
    assert max(colors) == 12
    assert psilab.is_pseudocomplete(psilab.nabla_k("Bg", 5), colors)
    s = psilab.structure(psilab.complete_graph(4))
    assert s["kind"] == "critical" and s["found"]


def test_run_check():
    assert len(psilab.check_ids()) == 22
    r = psilab.run_check("remark-p3-c8", ["Bg", psilab.cycle_graph(8)])
    assert r["passed"] and r["details"]["psi_join"] == 6
