"""Shared instance builders for the test suite."""

import itertools

import pytest

from eulergenus import (
    CircuitDecomposition,
    Digraph,
    DirectedCircuit,
    euler_circuit,
    gen_rotational_tournament,
    gen_sts,
    iter_relative_embeddings,
)


def circulant(n, steps):
    """Directed circulant: arcs i -> i + s (mod n) for each step s."""
    return Digraph(n, [(i, (i + s) % n) for s in steps for i in range(n)])


def all_decompositions(digraph):
    """Every circuit decomposition, via the in -> out bijections per vertex.

    Bijection choices whose functional graph does not close into arc-disjoint
    circuits are skipped; the remainder is exactly the decomposition set.
    """
    ins = [digraph.in_half_arcs(v) for v in range(digraph.n)]
    outs = [digraph.out_half_arcs(v) for v in range(digraph.n)]
    pools = [itertools.permutations(outs[v]) for v in range(digraph.n)]
    for perms in itertools.product(*pools):
        fw = {}
        for v in range(digraph.n):
            for h_in, h_out in zip(ins[v], perms[v]):
                fw[h_in] = h_out
        remaining = set(range(digraph.m))
        circuits = []
        closed = True
        while remaining and closed:
            start = min(remaining)
            walk = []
            a = start
            while True:
                if a not in remaining:
                    closed = False
                    break
                walk.append(a)
                remaining.discard(a)
                a = fw[2 * a + 1] >> 1
                if a == start:
                    break
            if closed:
                circuits.append(walk)
        if closed:
            yield CircuitDecomposition.from_arc_lists(digraph, circuits)


def nth_state(digraph, decomposition, index):
    """The index-th embedding in enumeration order over the fixed profaces."""
    for i, emb in enumerate(iter_relative_embeddings(digraph, decomposition, 10**7)):
        if i == index:
            return emb
    raise IndexError(index)


@pytest.fixture
def double_digon():
    """Two vertices joined by two arcs each way; circuits = the two digons."""
    digraph = Digraph(2, [(0, 1), (1, 0), (0, 1), (1, 0)])
    decomposition = CircuitDecomposition.from_arc_lists(digraph, [[0, 1], [2, 3]])
    return digraph, decomposition


@pytest.fixture
def three_loops():
    """One vertex with three loops, all in a single circuit."""
    digraph = Digraph(1, [(0, 0)] * 3)
    decomposition = CircuitDecomposition(
        digraph, [DirectedCircuit(digraph, [0, 1, 2])]
    )
    return digraph, decomposition


@pytest.fixture
def four_loops():
    """One vertex with four loops, all in a single circuit."""
    digraph = Digraph(1, [(0, 0)] * 4)
    decomposition = CircuitDecomposition(
        digraph, [DirectedCircuit(digraph, [0, 1, 2, 3])]
    )
    return digraph, decomposition


@pytest.fixture
def tournament7():
    digraph = gen_rotational_tournament(7)
    decomposition = CircuitDecomposition(digraph, [euler_circuit(digraph)])
    return digraph, decomposition


@pytest.fixture
def sts7():
    return gen_sts(7)
