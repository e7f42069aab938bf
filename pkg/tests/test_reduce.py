"""The reduction machine: case dispatch, traces, and entry points."""

import pytest

from eulergenus import (
    BEST_EFFORT,
    STRICT,
    CircuitDecomposition,
    Digraph,
    DirectedCircuit,
    EmbeddingError,
    GraphError,
    HypothesisError,
    NoProgressError,
    UndirectedGraph,
    embed_from_decomposition,
    euler_circuit,
    euler_genus,
    reduce_embedding,
    reduce_to_upper_embedding,
    relative_upper_from_partial,
    small_order_embedding,
    undirected_euler_circuit,
    undirected_upper_embedding,
    verify_embedding,
)
from eulergenus.reduce import ReductionStep, ReductionTrace

from conftest import circulant, nth_state


@pytest.fixture(scope="module")
def circ11():
    digraph = circulant(11, (1, 2, 3))
    decomposition = CircuitDecomposition(digraph, [euler_circuit(digraph)])
    return digraph, decomposition


def test_strict_mode_rejects_sparse_digraphs(circ11):
    digraph, decomposition = circ11
    with pytest.raises(HypothesisError) as err:
        reduce_to_upper_embedding(digraph, decomposition, mode=STRICT)
    assert str(err.value) == (
        "strict mode needs order >= 7 and 5 * min_degree >= 4n + 2; "
        "got n = 11, min_degree = 6, k = 4"
    )


def test_strict_mode_rejects_small_orders():
    digraph = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    decomposition = CircuitDecomposition(digraph, [euler_circuit(digraph)])
    with pytest.raises(HypothesisError, match="order >= 7"):
        reduce_to_upper_embedding(digraph, decomposition, mode=STRICT)


def test_unknown_mode_is_a_value_error(tournament7):
    digraph, decomposition = tournament7
    with pytest.raises(ValueError, match="unknown mode"):
        reduce_to_upper_embedding(digraph, decomposition, mode="lenient")


def test_disconnected_digraphs_are_rejected():
    digraph = Digraph(2, [(0, 0), (1, 1)])
    decomposition = CircuitDecomposition.from_arc_lists(digraph, [[0], [1]])
    with pytest.raises(GraphError, match="not connected"):
        reduce_to_upper_embedding(digraph, decomposition)


def test_strict_tournament_reaches_one_antiface(tournament7):
    digraph, decomposition = tournament7
    emb, trace = reduce_to_upper_embedding(
        digraph, decomposition, mode=STRICT, validate_steps=True
    )
    assert len(emb.antifaces) == 1
    assert trace.validate() == []
    assert verify_embedding(emb, decomposition).ok
    assert euler_genus(emb) == 7  # 7 - 21 + 2 = 2 - 2 * 7


def test_trace_steps_serialize(tournament7):
    digraph, decomposition = tournament7
    _, trace = reduce_to_upper_embedding(digraph, decomposition, mode=STRICT)
    rows = trace.to_dicts()
    assert rows
    for row in rows:
        assert set(row) == {
            "case", "operation", "witness", "antifaces_before", "antifaces_after"
        }
        assert row["antifaces_after"] in (
            row["antifaces_before"], row["antifaces_before"] - 2
        )


def test_trace_validation_flags_bad_logs():
    trace = ReductionTrace()
    trace.record("1", "merge_three_at_vertex", {}, 5, 4)
    trace.record("2.2", "blow_up", {}, 3, 3)
    problems = trace.validate()
    assert any("changed the count" in p for p in problems)
    assert any("do not stitch" in p for p in problems)

    stuck = ReductionTrace()
    for i in range(3):
        stuck.record("2.2", "blow_up", {}, 7, 7)
    assert any("three consecutive" in p for p in stuck.validate())

    alien = ReductionTrace()
    alien.record("9", "teleport", {}, 3, 1)
    assert any("unknown operation" in p for p in alien.validate())


def test_step_repr_and_dict_round_trip():
    step = ReductionStep("2.2", "blow_up", {"x": 4}, 5, 5)
    assert step.to_dict()["witness"] == {"x": 4}
    assert "2.2" in repr(step)


def test_case_one_success_exemplar(tournament7):
    digraph, decomposition = tournament7
    emb = nth_state(digraph, decomposition, 0)
    reduced, trace = reduce_embedding(
        emb, decomposition, mode=STRICT, validate_steps=True
    )
    assert [s.case for s in trace.steps] == ["1"]
    assert len(reduced.antifaces) == 1


def test_case_star_success_exemplar(tournament7):
    digraph, decomposition = tournament7
    emb = nth_state(digraph, decomposition, 11)
    reduced, trace = reduce_embedding(
        emb, decomposition, mode=STRICT, validate_steps=True
    )
    assert [s.case for s in trace.steps] == ["2.2"]
    assert len(reduced.antifaces) == 1


def test_case_wide_gap_success_exemplar(sts7):
    digraph, decomposition = sts7
    emb = nth_state(digraph, decomposition, 55)
    reduced, trace = reduce_embedding(
        emb, decomposition, mode=STRICT, validate_steps=True
    )
    assert [s.case for s in trace.steps] == ["2.1.2"]
    assert len(reduced.antifaces) == 1


def test_case_lone_loop_success_exemplar(sts7):
    digraph, decomposition = sts7
    emb = nth_state(digraph, decomposition, 63)
    reduced, trace = reduce_embedding(
        emb, decomposition, mode=STRICT, validate_steps=True
    )
    assert [s.case for s in trace.steps] == ["3.2.2", "1"]
    assert len(reduced.antifaces) == 1
    assert trace.validate() == []


def test_dead_end_applicability_exemplars(circ11):
    digraph, decomposition = circ11
    emb = nth_state(digraph, decomposition, 10)
    with pytest.raises(NoProgressError) as err:
        reduce_embedding(emb, decomposition)
    assert str(err.value) == "case 2.1.4: applicability check failed"
    assert err.value.trace is not None

    emb = nth_state(digraph, decomposition, 1466)
    with pytest.raises(NoProgressError) as err:
        reduce_embedding(emb, decomposition)
    assert str(err.value) == "case 2.1.1: applicability check failed"


def test_dead_end_size_hypotheses_exemplar(circ11):
    digraph, decomposition = circ11
    emb = nth_state(digraph, decomposition, 108)
    with pytest.raises(NoProgressError) as err:
        reduce_embedding(emb, decomposition)
    assert str(err.value) == "case 3.2.2: size hypotheses fail after the blow ups"
    assert [s.case for s in err.value.trace.steps] == ["3.2.2", "3.2.2"]


def test_dead_end_safety_bound_exemplar(circ11):
    digraph, decomposition = circ11
    emb = nth_state(digraph, decomposition, 1369)
    with pytest.raises(NoProgressError) as err:
        reduce_embedding(emb, decomposition)
    assert str(err.value) == "exceeded the safety bound of 24 steps"
    steps = err.value.trace.steps
    assert len(steps) == 24
    assert all(s.case == "2.2" for s in steps)


def test_reduce_embedding_guards_the_profaces(double_digon, four_loops):
    digraph, decomposition = double_digon
    other = CircuitDecomposition.from_arc_lists(digraph, [[0, 3], [2, 1]])
    emb = embed_from_decomposition(digraph, decomposition)
    with pytest.raises(EmbeddingError, match="do not match"):
        reduce_embedding(emb, other)


def test_small_order_rejects_large_or_uneulerian_inputs(tournament7):
    digraph, decomposition = tournament7
    with pytest.raises(GraphError, match="one or two vertices"):
        small_order_embedding(digraph, decomposition)

    loop = Digraph(1, [(0, 0)])
    loop_dec = CircuitDecomposition.from_arc_lists(loop, [[0]])
    unbalanced = Digraph(2, [(0, 1)])
    with pytest.raises(GraphError, match="not eulerian"):
        small_order_embedding(unbalanced, loop_dec)
    with pytest.raises(GraphError, match="different digraph"):
        small_order_embedding(Digraph(1, [(0, 0), (0, 0)]), loop_dec)


def test_small_order_handles_single_vertices(three_loops):
    digraph, decomposition = three_loops
    emb, trace = small_order_embedding(digraph, decomposition)
    assert len(emb.antifaces) == 1
    assert verify_embedding(emb, decomposition).ok


def test_small_order_splices_across_a_two_cut():
    digraph = Digraph(2, [(0, 1), (1, 0), (0, 0), (1, 1)])
    decomposition = CircuitDecomposition.from_arc_lists(digraph, [[0, 1], [2], [3]])
    emb, trace = small_order_embedding(digraph, decomposition)
    splice = trace.metadata["splice"]
    assert splice["cut_arcs"] == [0, 1]
    assert len(emb.antifaces) == sum(splice["side_antifaces"]) - 1
    assert len(emb.antifaces) <= 2
    assert verify_embedding(emb, decomposition).ok


def test_reduce_dispatches_small_orders(double_digon):
    digraph, decomposition = double_digon
    emb, trace = reduce_to_upper_embedding(digraph, decomposition, mode=BEST_EFFORT)
    assert len(emb.antifaces) <= 2
    assert verify_embedding(emb, decomposition).ok


def test_partial_decomposition_completion(tournament7):
    digraph, _ = tournament7
    arc = {digraph.arcs[a]: a for a in range(digraph.m)}
    triangle = DirectedCircuit(
        digraph, [arc[(0, 1)], arc[(1, 4)], arc[(4, 0)]]
    )
    emb, trace = relative_upper_from_partial(digraph, [triangle])
    assert trace.metadata["completion"] == {"given": 1, "added": 1}
    assert len(emb.profaces) == 2
    assert len(emb.antifaces) == 2
    assert verify_embedding(emb).ok


def test_partial_circuits_must_be_arc_disjoint(tournament7):
    digraph, _ = tournament7
    arc = {digraph.arcs[a]: a for a in range(digraph.m)}
    triangle = [arc[(0, 1)], arc[(1, 4)], arc[(4, 0)]]
    with pytest.raises(GraphError, match="appears in two partial circuits"):
        relative_upper_from_partial(digraph, [triangle, triangle])


def test_undirected_complete_graph_upper_embedding():
    k7 = UndirectedGraph(7, [(i, j) for i in range(7) for j in range(i + 1, 7)])
    walk = undirected_euler_circuit(k7)
    emb, trace = undirected_upper_embedding(k7, [walk])
    assert len(emb.profaces) == 1
    assert len(emb.antifaces) == 1
    assert euler_genus(emb) == 7
    assert verify_embedding(emb).ok


def test_undirected_upper_embedding_respects_strict_gate():
    k5 = UndirectedGraph(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    walk = undirected_euler_circuit(k5)
    with pytest.raises(HypothesisError, match="order >= 7"):
        undirected_upper_embedding(k5, [walk])
