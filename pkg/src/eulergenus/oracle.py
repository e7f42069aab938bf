"""Exhaustive enumeration of embeddings with a fixed proface family.

Fixing the profaces to a circuit decomposition C pins, at every vertex, the
pairing of each incoming half-arc with the outgoing half-arc its circuit
continues to.  What remains free is the cyclic arrangement of those pairs
around each vertex, so the state space has exactly prod (indeg(v) - 1)!
points.  Enumeration is lexicographic with the lowest pair anchored first,
which makes the stream deterministic.
"""

from itertools import permutations, product
from math import factorial, prod

from .embedding import OrientedDirectedEmbedding
from .errors import EmbeddingError, GraphError, StateSpaceError


def _vertex_pairs(digraph, decomposition):
    fw = decomposition.fw
    return [
        [(fw[h], h) for h in digraph.in_half_arcs(v)]
        for v in range(digraph.n)
    ]


def state_count(digraph):
    """Number of embeddings sharing any fixed proface family."""
    return prod(factorial(digraph.indeg(v) - 1) for v in range(digraph.n) if digraph.indeg(v) > 0)


def _check_feasible(digraph, decomposition, limit):
    if decomposition.digraph != digraph:
        raise GraphError("decomposition belongs to a different digraph")
    states = state_count(digraph)
    if states > limit:
        raise StateSpaceError(
            f"{states} embeddings exceed the enumeration limit of {limit}"
        )
    return states


def _arrangements(pairs):
    if not pairs:
        return [()]
    head = pairs[0]
    return [(head,) + rest for rest in permutations(pairs[1:])]


def iter_relative_embeddings(digraph, decomposition, limit=10_000_000):
    """Yield every embedding whose profaces are the given circuits."""
    _check_feasible(digraph, decomposition, limit)
    options = [_arrangements(pairs) for pairs in _vertex_pairs(digraph, decomposition)]
    for combo in product(*options):
        rotations = []
        for arrangement in combo:
            rot = []
            for g, h in arrangement:
                rot.append(g)
                rot.append(h)
            rotations.append(rot)
        yield OrientedDirectedEmbedding(digraph, rotations)


class OracleSummary:
    """Distribution of antiface counts over the full state space."""

    __slots__ = ("distribution", "states", "min_antifaces", "max_antifaces")

    def __init__(self, distribution, states):
        self.distribution = dict(sorted(distribution.items()))
        self.states = states
        self.min_antifaces = min(distribution)
        self.max_antifaces = max(distribution)

    def to_json_dict(self):
        return {
            "distribution": {str(k): v for k, v in self.distribution.items()},
            "states": self.states,
            "min": self.min_antifaces,
            "max": self.max_antifaces,
        }

    def __repr__(self):
        return (
            f"OracleSummary(states={self.states}, min={self.min_antifaces}, "
            f"max={self.max_antifaces})"
        )


def enumerate_relative_embeddings(digraph, decomposition, limit=10_000_000):
    """Tally antiface counts across all embeddings with profaces C.

    Counting an antiface orbit needs only the successor map on outgoing
    half-arcs, so states are processed on flat arrays without building
    embedding objects.
    """
    states = _check_feasible(digraph, decomposition, limit)
    options = [_arrangements(pairs) for pairs in _vertex_pairs(digraph, decomposition)]
    m = digraph.m
    succ = [0] * (2 * m)  # succ[2a] = antiface departure after traversing arc a
    distribution = {}
    for combo in product(*options):
        for arrangement in combo:
            d = len(arrangement)
            for i in range(d):
                incoming = arrangement[i][1]
                succ[incoming] = arrangement[(i + 1) % d][0]
        seen = [False] * m
        faces = 0
        for a in range(m):
            if seen[a]:
                continue
            faces += 1
            b = a
            while not seen[b]:
                seen[b] = True
                b = succ[2 * b + 1] >> 1
        distribution[faces] = distribution.get(faces, 0) + 1
    if m > 0:
        parities = {count % 2 for count in distribution}
        assert len(parities) == 1
    summary = OracleSummary(distribution, states)
    assert sum(distribution.values()) == states
    return summary


class CertificationResult:
    """Comparison of one embedding against the exhaustive minimum."""

    __slots__ = ("achieved", "minimum", "distribution", "states")

    def __init__(self, achieved, summary):
        self.achieved = achieved
        self.minimum = summary.min_antifaces
        self.distribution = summary.distribution
        self.states = summary.states

    @property
    def passed(self):
        return self.achieved == self.minimum

    def __repr__(self):
        return (
            f"CertificationResult(achieved={self.achieved}, "
            f"minimum={self.minimum}, passed={self.passed})"
        )


def certify_maximal(embedding, digraph, decomposition, limit=10_000_000):
    """Certify that an embedding attains the minimum antiface count for C."""
    traced = frozenset(f.arcs() for f in embedding.profaces)
    if traced != decomposition.canonical_set():
        raise EmbeddingError("embedding's profaces are not the given circuits")
    summary = enumerate_relative_embeddings(digraph, decomposition, limit)
    return CertificationResult(embedding.antiface_count(), summary)
