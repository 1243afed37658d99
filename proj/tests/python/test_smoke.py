import os
import sys


def _load():
    """Installed package if present, else the module next to the build tree."""
    try:
        import pavingtools

        return pavingtools
    except ImportError:
        pass
    module_dir = os.environ.get("PAVING_MODULE_DIR")
    if module_dir and module_dir not in sys.path:
        sys.path.insert(0, module_dir)
    import _core

    return _core


pt = _load()


def test_mk3_shape():
    m = pt.build_mk(3)
    assert m.n == 9
    assert m.rank == 4
    assert len(m.circuit_hyperplanes) == 8
    assert m.labels[0] == "a1"
    # {a1, a3, c1, c3} is a basis
    assert m.rank_of([0, 2, 6, 8]) == 4
    assert m.is_basis([0, 2, 6, 8])


def test_duality():
    m = pt.build_mk(3)
    d = m.dual()
    assert d.rank == 5
    assert d.n == 9
    assert d.dual() == m
    assert pt.build_tictactoe() == d


def test_pseudomodularity():
    rep = pt.is_pseudomodular_pruned(pt.build_tictactoe())
    assert rep["verdict"] == "pseudomodular"
    assert rep["witness"] is None

    prism = pt.validate(6, 4, [[0, 1, 2, 3], [0, 1, 4, 5], [2, 3, 4, 5]])
    bad = pt.is_pseudomodular_naive(prism)
    assert bad["verdict"] == "violated"
    assert bad["witness"] is not None
    assert {"a", "b", "c", "join_ab"} <= set(bad["witness"].keys())


def test_vamos_and_prisms():
    v = pt.build_vamos()
    triples = pt.prism_triples(v)
    assert len(triples) == 4
    assert sum(1 for t in triples if t["fully_present"]) == 2
    assert sum(1 for t in triples if t["broken"]) == 2

    found = pt.find_vamos(v)
    assert found is not None
    assert found["deleted"] == []

    assert pt.find_vamos(pt.build_mk(3)) is None


def test_minors_and_closure():
    m = pt.build_mk(4)
    sub = m.deleted([1, 5, 9])  # drop a2, b2, c2
    assert sub.n == 9
    assert pt.find_restriction_isomorphic(m, pt.build_mk(3)) is not None

    v = pt.build_vamos()
    assert v.closure_of([0, 1, 2]) == [0, 1, 2, 3]
    assert v.contracted([0]).rank == 3


def test_lattice_counts():
    assert pt.flat_counts(pt.build_mk(3)) == [1, 9, 36, 60, 1]
    assert pt.flat_counts(pt.build_tictactoe()) == [1, 9, 36, 84, 94, 1]


def test_serialization_round_trip():
    m = pt.random_sparse_paving(9, 4, 8, 123)
    text = pt.serialize(m)
    assert pt.parse(text) == m
    assert pt.serialize(pt.parse(text)) == text


def test_graph_prism():
    k3 = pt.graph_prism(3, [(0, 1), (1, 2), (0, 2)])
    assert k3.n == 9
    assert len(k3.circuit_hyperplanes) == 9
    relaxed = pt.graph_prism(3, [(0, 1), (1, 2), (0, 2)], [((0, 2), "ac")])
    assert relaxed == pt.build_mk(3)


def test_errors_raise():
    try:
        pt.build_mk(2)
    except pt.PavingError as e:
        assert "KTooSmall" in str(e)
    else:
        raise AssertionError("expected PavingError")
