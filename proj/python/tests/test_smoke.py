import pytest

import twocat


def test_quiver_and_paths():
    q = twocat.Quiver(["x"], [])
    assert twocat.paths(q) == ["e:x"]
    a3 = twocat.Quiver.linear(3)
    assert len(twocat.paths(a3)) == 6
    assert a3.arrows[0] == ("a1", "1", "2")
    with pytest.raises(ValueError):
        twocat.Quiver(["1"], [("a", "1", "9")])


def test_documents():
    q = twocat.Quiver.from_json('{"vertices": ["1", "2"], "arrows": [{"id": "a", "source": "1", "target": "2"}], "tree": true}')
    assert q.is_tree and q.vertices == ["1", "2"]
    with pytest.raises(twocat.DocumentError, match="1:"):
        twocat.Quiver.from_json('{"vertices": [')


def test_ideals_round_trip():
    a2 = twocat.Quiver.linear(2)
    ideals = twocat.ideals(a2)
    assert ["a1"] in ideals
    for i in ideals:
        assert twocat.minimal_generators(a2, i) == i
    assert twocat.minimal_generators(a2, ["a1", "e:2"]) == ["e:2"]
    assert twocat.is_idempotent(a2, ["e:1"])
    assert not twocat.is_idempotent(a2, ["a1"])


def test_ideal_two_category():
    a2 = twocat.Quiver.linear(2)
    assert len(twocat.classify_simple_transitive(a2)) == 3
    assert twocat.center_is_trivial(a2)
    assert twocat.twisted_tensor_agrees(a2, ["a1"], [])


def test_an():
    assert twocat.compose_closed(3, (1, 2), (2, 3)) == (2, 2)
    assert twocat.compose_oracle(3, (1, 2), (2, 3)) == [((2, 2), 1)]
    assert twocat.compose_closed(3, (1, 1), (2, 3)) is None
    for a in [(1, 1), (1, 2), (2, 3)]:
        for b in [(1, 2), (2, 2), (1, 3)]:
            assert twocat.hom_dim(3, a, b) == twocat.hom_dim_closed(3, a, b)
    assert twocat.interval_cut(3, ["a1"]) == [(1, 1), (2, 3)]
    pq = twocat.principal_quiver(3)
    assert pq["ok"] and pq["vertices"] == 6 and pq["arrows"] == 6
    assert pq["dot"].startswith("digraph")


def test_trunc():
    assert twocat.center_condition(2, 3, ["1", "7"])
    assert twocat.center_condition(3, 2, ["1", "2", "2"])
    assert not twocat.center_condition(3, 2, ["1", "2", "1"])
    assert twocat.is_diagonalizable(3, 2, ["1", "2", "1"]) is False
    basis = twocat.center_hom(2, 2, ["1", "1"], ["1", "3"])
    assert len(basis) == 1
    free = twocat.center_free_d2(5)
    assert free["free"] == [1, 3] and free["identity_after_substitution"]
    checks, mismatches = twocat.horizontal_oracle(2, 3)
    assert checks > 0 and mismatches == []
    qd = twocat.quiver_QD(2, 4)
    assert (qd["loops"], qd["arrows"]) == (4, 12)
    assert twocat.trunc_hom(3, 3, 1, 2) == ["p_{1,2}"]
    corpus = twocat.center_corpus(2, 3, 10, 1)
    assert len(corpus) == 10 and all(v[0] == "1" for v in corpus)


def test_suites():
    assert len(twocat.suite_names()) == 14
    s = twocat.run_suite("an-oracle", n=3)
    assert s["ok"] and s["passed"] == 36 and s["criterion"] == 1
    assert twocat.run_suite("trunc-d2", kmax=5)["ok"]
    with pytest.raises(ValueError):
        twocat.run_suite("missing")
