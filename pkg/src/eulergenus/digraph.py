"""Digraphs with half-arc indexing, circuits, and circuit decompositions.

Arc ``a`` owns two half-arcs: ``2a`` (outgoing, at the tail) and ``2a + 1``
(incoming, at the head).  The mate of a half-arc flips the low bit.  All
per-vertex half-arc listings are sorted ascending, which fixes a canonical
order used by every deterministic scan in the package.
"""

from collections import deque

from .errors import GraphError


def mate(h):
    """Other half of the same arc."""
    return h ^ 1


def arc_of(h):
    return h >> 1


def is_outgoing(h):
    return (h & 1) == 0


class Digraph:
    """Finite multidigraph on vertices ``0..n-1``, loops and parallels allowed."""

    __slots__ = ("n", "arcs", "_out", "_in")

    def __init__(self, n, arcs):
        if n < 1:
            raise GraphError(f"vertex count must be positive, got {n}")
        arcs = tuple((int(t), int(h)) for t, h in arcs)
        for a, (t, h) in enumerate(arcs):
            if not (0 <= t < n and 0 <= h < n):
                raise GraphError(f"arc {a} = ({t}, {h}) has an endpoint outside 0..{n - 1}")
        self.n = n
        self.arcs = arcs
        out = [[] for _ in range(n)]
        inc = [[] for _ in range(n)]
        for a, (t, h) in enumerate(arcs):
            out[t].append(2 * a)
            inc[h].append(2 * a + 1)
        # append order is ascending arc id, so the lists are already sorted
        self._out = tuple(tuple(hs) for hs in out)
        self._in = tuple(tuple(hs) for hs in inc)

    @property
    def m(self):
        return len(self.arcs)

    def tail(self, a):
        return self.arcs[a][0]

    def head(self, a):
        return self.arcs[a][1]

    def half_arc_vertex(self, h):
        """Vertex at which half-arc h sits."""
        t, hd = self.arcs[h >> 1]
        return t if (h & 1) == 0 else hd

    def out_half_arcs(self, v):
        return self._out[v]

    def in_half_arcs(self, v):
        return self._in[v]

    def incident_half_arcs(self, v):
        """All half-arcs at v, ascending."""
        merged = sorted(self._out[v] + self._in[v])
        return tuple(merged)

    def outdeg(self, v):
        return len(self._out[v])

    def indeg(self, v):
        return len(self._in[v])

    def is_balanced(self):
        return all(len(self._out[v]) == len(self._in[v]) for v in range(self.n))

    def is_connected(self):
        """Connectivity of the underlying multigraph; isolated vertices disconnect."""
        if self.n == 1:
            return True
        adj = [set() for _ in range(self.n)]
        for t, h in self.arcs:
            adj[t].add(h)
            adj[h].add(t)
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    queue.append(w)
        return count == self.n

    def is_eulerian(self):
        return self.is_balanced() and self.is_connected()

    def to_json_dict(self):
        return {"n": self.n, "arcs": [[t, h] for t, h in self.arcs]}

    @classmethod
    def from_json_dict(cls, data):
        try:
            return cls(data["n"], data["arcs"])
        except (KeyError, TypeError) as exc:
            raise GraphError(f"bad digraph JSON: {exc}") from exc

    def __eq__(self, other):
        return isinstance(other, Digraph) and self.n == other.n and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"Digraph(n={self.n}, m={self.m})"


def build_digraph(n, arcs):
    """Validate and construct a Digraph."""
    return Digraph(n, arcs)


class DirectedCircuit:
    """Closed directed walk through distinct arcs, stored as arc ids."""

    __slots__ = ("digraph", "arc_ids")

    def __init__(self, digraph, arc_ids):
        arc_ids = tuple(int(a) for a in arc_ids)
        if not arc_ids:
            raise GraphError("a circuit must contain at least one arc")
        if len(set(arc_ids)) != len(arc_ids):
            raise GraphError("a circuit may not repeat an arc")
        for a in arc_ids:
            if not (0 <= a < digraph.m):
                raise GraphError(f"circuit references unknown arc {a}")
        for i, a in enumerate(arc_ids):
            b = arc_ids[(i + 1) % len(arc_ids)]
            if digraph.head(a) != digraph.tail(b):
                raise GraphError(
                    f"circuit not closed: arc {a} ends at {digraph.head(a)} "
                    f"but arc {b} starts at {digraph.tail(b)}"
                )
        self.digraph = digraph
        self.arc_ids = arc_ids

    def __len__(self):
        return len(self.arc_ids)

    def vertices(self):
        """Tail of every arc, in walk order (with multiplicity)."""
        return tuple(self.digraph.tail(a) for a in self.arc_ids)

    def canonical(self):
        """Rotation starting at the minimum arc id; arc ids are distinct."""
        i = self.arc_ids.index(min(self.arc_ids))
        return self.arc_ids[i:] + self.arc_ids[:i]

    def __repr__(self):
        return f"DirectedCircuit({list(self.arc_ids)})"


class CircuitDecomposition:
    """Partition of a digraph's arcs into directed circuits."""

    __slots__ = ("digraph", "circuits", "fw")

    def __init__(self, digraph, circuits):
        circuits = tuple(circuits)
        seen = set()
        for c in circuits:
            if c.digraph is not digraph and c.digraph != digraph:
                raise GraphError("circuit belongs to a different digraph")
            overlap = seen.intersection(c.arc_ids)
            if overlap:
                raise GraphError(f"arc {min(overlap)} appears in two circuits")
            seen.update(c.arc_ids)
        if len(seen) != digraph.m:
            missing = sorted(set(range(digraph.m)) - seen)
            raise GraphError(f"arcs not covered by any circuit: {missing[:8]}")
        self.digraph = digraph
        self.circuits = circuits
        # forward map: the incoming half of each arc to the outgoing half of
        # the next arc on its circuit; a per-vertex bijection by construction
        fw = {}
        for c in circuits:
            ids = c.arc_ids
            for i, a in enumerate(ids):
                b = ids[(i + 1) % len(ids)]
                fw[2 * a + 1] = 2 * b
        self.fw = fw

    def __len__(self):
        return len(self.circuits)

    @classmethod
    def from_arc_lists(cls, digraph, lists):
        return cls(digraph, [DirectedCircuit(digraph, ids) for ids in lists])

    def canonical_set(self):
        """Set of canonical arc tuples, for order-insensitive comparison."""
        return frozenset(c.canonical() for c in self.circuits)

    def to_json_dict(self):
        return {"circuits": [list(c.arc_ids) for c in self.circuits]}

    @classmethod
    def from_json_dict(cls, digraph, data):
        try:
            return cls.from_arc_lists(digraph, data["circuits"])
        except (KeyError, TypeError) as exc:
            raise GraphError(f"bad circuits JSON: {exc}") from exc

    def __repr__(self):
        return f"CircuitDecomposition({len(self.circuits)} circuits)"


def underlying_simple_graph(digraph):
    """Loop-free simple adjacency: list of neighbor sets, one per vertex."""
    adj = [set() for _ in range(digraph.n)]
    for t, h in digraph.arcs:
        if t != h:
            adj[t].add(h)
            adj[h].add(t)
    return adj


class DensityProfile:
    """Order, minimum simple degree, codegree defect k, and the density flag."""

    __slots__ = ("n", "min_degree", "k", "dense")

    def __init__(self, n, min_degree, k, dense):
        self.n = n
        self.min_degree = min_degree
        self.k = k
        self.dense = dense

    def __repr__(self):
        return (
            f"DensityProfile(n={self.n}, min_degree={self.min_degree}, "
            f"k={self.k}, dense={self.dense})"
        )


def density_profile(digraph):
    """Compute k = n - 1 - min_degree and the density flag.

    The two equivalent forms of the flag (5 * min_degree >= 4n + 2 and
    n >= 5k + 7) are both evaluated and must agree.
    """
    n = digraph.n
    adj = underlying_simple_graph(digraph)
    min_degree = min(len(neighbors) for neighbors in adj)
    k = n - 1 - min_degree
    dense_by_degree = 5 * min_degree >= 4 * n + 2
    dense_by_defect = n >= 5 * k + 7
    assert dense_by_degree == dense_by_defect
    return DensityProfile(n, min_degree, k, dense_by_degree)


def euler_circuit(digraph):
    """Directed euler circuit by Hierholzer's algorithm.

    Starts at the lowest vertex with an arc and always leaves along the
    lowest unused outgoing half-arc, so the result is canonical.
    """
    if not digraph.is_balanced():
        bad = [v for v in range(digraph.n) if digraph.indeg(v) != digraph.outdeg(v)]
        raise GraphError(f"digraph is not balanced at vertices {bad[:8]}")
    if not digraph.is_connected():
        raise GraphError("digraph is not connected")
    if digraph.m == 0:
        raise GraphError("digraph has no arcs")
    next_free = [0] * digraph.n  # index into out_half_arcs(v) of first unused
    start = min(v for v in range(digraph.n) if digraph.outdeg(v) > 0)
    stack = [(start, None)]  # (vertex, arc traversed to reach it)
    arc_seq = []
    while stack:
        v = stack[-1][0]
        outs = digraph.out_half_arcs(v)
        if next_free[v] < len(outs):
            a = outs[next_free[v]] >> 1
            next_free[v] += 1
            stack.append((digraph.head(a), a))
        else:
            _, a = stack.pop()
            if a is not None:
                arc_seq.append(a)
    arc_seq.reverse()
    if len(arc_seq) != digraph.m:
        raise GraphError("euler circuit does not cover every arc")
    return DirectedCircuit(digraph, arc_seq)


def greedy_circuit_decomposition(digraph):
    """Peel circuits greedily: from the lowest unused arc, walk the lowest
    unused outgoing half-arc until the walk closes at its starting tail."""
    if not digraph.is_balanced():
        bad = [v for v in range(digraph.n) if digraph.indeg(v) != digraph.outdeg(v)]
        raise GraphError(f"digraph is not balanced at vertices {bad[:8]}")
    if digraph.m == 0:
        raise GraphError("digraph has no arcs")
    used = [False] * digraph.m
    next_free = [0] * digraph.n
    circuits = []
    for a0 in range(digraph.m):
        if used[a0]:
            continue
        start = digraph.tail(a0)
        seq = [a0]
        used[a0] = True
        v = digraph.head(a0)
        while v != start:
            outs = digraph.out_half_arcs(v)
            while used[outs[next_free[v]] >> 1]:
                next_free[v] += 1
            a = outs[next_free[v]] >> 1
            used[a] = True
            seq.append(a)
            v = digraph.head(a)
        circuits.append(DirectedCircuit(digraph, seq))
    return CircuitDecomposition(digraph, circuits)


class UndirectedGraph:
    """Simple-input undirected multigraph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "_incident")

    def __init__(self, n, edges):
        if n < 1:
            raise GraphError(f"vertex count must be positive, got {n}")
        edges = tuple((int(u), int(v)) for u, v in edges)
        for e, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {e} = ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"edge {e} is a loop; orientation input must be loop-free")
        self.n = n
        self.edges = edges
        incident = [[] for _ in range(n)]
        for e, (u, v) in enumerate(edges):
            incident[u].append(e)
            incident[v].append(e)
        self._incident = tuple(tuple(es) for es in incident)

    @property
    def m(self):
        return len(self.edges)

    def incident_edges(self, v):
        return self._incident[v]

    def degree(self, v):
        return len(self._incident[v])

    def other_end(self, e, v):
        u, w = self.edges[e]
        if v == u:
            return w
        if v == w:
            return u
        raise GraphError(f"edge {e} is not incident with vertex {v}")

    def is_connected(self):
        if self.n == 1:
            return True
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            v = queue.popleft()
            for e in self._incident[v]:
                w = self.other_end(e, v)
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    queue.append(w)
        return count == self.n


def undirected_euler_circuit(graph):
    """Closed vertex walk using every edge once; lowest-edge-id greedy."""
    if graph.m == 0:
        raise GraphError("graph has no edges")
    odd = [v for v in range(graph.n) if graph.degree(v) % 2 == 1]
    if odd:
        raise GraphError(f"vertices of odd degree: {odd[:8]}")
    if not graph.is_connected():
        raise GraphError("graph is not connected")
    used = [False] * graph.m
    next_free = [0] * graph.n

    def take(v):
        inc = graph.incident_edges(v)
        while next_free[v] < len(inc) and used[inc[next_free[v]]]:
            next_free[v] += 1
        if next_free[v] == len(inc):
            return None
        e = inc[next_free[v]]
        used[e] = True
        return e

    start = min(v for v in range(graph.n) if graph.degree(v) > 0)
    stack = [start]
    walk = []
    while stack:
        v = stack[-1]
        e = take(v)
        if e is None:
            walk.append(stack.pop())
        else:
            stack.append(graph.other_end(e, v))
    walk.reverse()
    if len(walk) != graph.m + 1:
        raise GraphError("euler circuit does not cover every edge")
    return walk


def eulerian_orientation(graph, walks):
    """Orient an even undirected graph along closed walks covering each edge once.

    ``walks`` is a list of closed vertex walks ``[v0, v1, ..., v0]``.  Each
    consecutive pair consumes the lowest-id unused edge joining it.  Returns
    the oriented Digraph (arc id = edge id, directed as traversed) plus the
    walks as a CircuitDecomposition of it.
    """
    used = [False] * graph.m
    direction = [None] * graph.m
    circuits_arcs = []
    for w_index, walk in enumerate(walks):
        if len(walk) < 2 or walk[0] != walk[-1]:
            raise GraphError(f"walk {w_index} is not closed")
        seq = []
        for u, v in zip(walk, walk[1:]):
            choice = None
            for e in graph.incident_edges(u):
                if not used[e] and graph.other_end(e, u) == v:
                    choice = e
                    break
            if choice is None:
                raise GraphError(
                    f"walk {w_index} needs an unused edge between {u} and {v}, none left"
                )
            used[choice] = True
            direction[choice] = (u, v)
            seq.append(choice)
        circuits_arcs.append(seq)
    if not all(used):
        missing = [e for e in range(graph.m) if not used[e]]
        raise GraphError(f"edges not covered by any walk: {missing[:8]}")
    digraph = Digraph(graph.n, direction)
    decomposition = CircuitDecomposition.from_arc_lists(digraph, circuits_arcs)
    return digraph, decomposition
