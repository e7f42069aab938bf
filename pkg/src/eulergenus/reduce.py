"""Driving an embedding down to at most two antifaces.

The loop inspects the touch graph of the current embedding and dispatches
one of the numbered cases below, each ending in a merge (count - 2) after
at most two count-preserving blow ups:

* 1      a vertex on three antifaces: merge there directly;
* 2.1.x  no loops, touch graph not a star: interlacing via the margin,
         diamond, or bipartite-core route on the heaviest face pair;
* 2.2    no loops, star: margin route on the center, else blow the center
         apart and merge through the loop that appears;
* 3.1    loops on two faces: blow one looped face apart, merge around the
         other;
* 3.2.1  a single looped face with one neighbor: blow the neighbor apart;
* 3.2.2  a single looped face with several neighbors: blow the looped face
         apart, follow the loop that survives, and merge.

Strict mode demands order at least 7 and the density flag up front and the
guarantees of the case analysis then apply; best-effort mode runs the same
machine on any eulerian connected input and reports dead ends as errors.
"""

from .digraph import (CircuitDecomposition, Digraph, DirectedCircuit,
                      density_profile, underlying_simple_graph)
from .embedding import (OrientedDirectedEmbedding, embed_from_decomposition,
                        verify_embedding)
from .errors import (EmbeddingError, GraphError, HypothesisError,
                     NoProgressError)
from .interlace import (TypeTable, check_big_moderate, check_diamond_corollary,
                        check_three_neighbor_corollary, extract_dense_subgraph,
                        find_vertex_on_three_antifaces, three_neighbor_search)
from .surgery import blow_up, merge_interlaced, merge_three_at_vertex
from .touch import build_touch_graph, classify

STRICT = "strict"
BEST_EFFORT = "best-effort"

MERGE_OPS = ("merge_three_at_vertex", "merge_interlaced")


class ReductionStep:
    """One recorded operation of a reduction run."""

    __slots__ = ("case", "operation", "witness", "count_before", "count_after")

    def __init__(self, case, operation, witness, count_before, count_after):
        self.case = case
        self.operation = operation
        self.witness = dict(witness)
        self.count_before = count_before
        self.count_after = count_after

    def to_dict(self):
        return {
            "case": self.case,
            "operation": self.operation,
            "witness": self.witness,
            "antifaces_before": self.count_before,
            "antifaces_after": self.count_after,
        }

    def __repr__(self):
        return (
            f"ReductionStep({self.case}, {self.operation}, "
            f"{self.count_before}->{self.count_after})"
        )


class ReductionTrace:
    """Ordered step log of a reduction, plus free-form metadata."""

    __slots__ = ("steps", "metadata")

    def __init__(self):
        self.steps = []
        self.metadata = {}

    def record(self, case, operation, witness, count_before, count_after):
        self.steps.append(
            ReductionStep(case, operation, witness, count_before, count_after)
        )

    def validate(self):
        """Structural problems with the step log; empty list when clean.

        Counts must stitch, merges drop the count by two, blow ups keep it,
        and no three consecutive steps may all preserve the count.
        """
        problems = []
        previous_after = None
        preserving_run = 0
        for i, step in enumerate(self.steps):
            delta = step.count_after - step.count_before
            if step.operation == "blow_up":
                expected = 0
            elif step.operation in MERGE_OPS:
                expected = -2
            else:
                problems.append(f"step {i}: unknown operation {step.operation}")
                continue
            if delta != expected:
                problems.append(
                    f"step {i}: {step.operation} changed the count by {delta}"
                )
            if previous_after is not None and step.count_before != previous_after:
                problems.append(f"step {i}: counts do not stitch")
            previous_after = step.count_after
            if delta == 0:
                preserving_run += 1
                if preserving_run >= 3:
                    problems.append(f"step {i}: three consecutive count-preserving steps")
            else:
                preserving_run = 0
        return problems

    def to_dicts(self):
        return [step.to_dict() for step in self.steps]

    def __repr__(self):
        return f"ReductionTrace({len(self.steps)} steps)"


class _Reducer:
    def __init__(self, embedding, decomposition, mode, validate_steps):
        self.digraph = embedding.digraph
        self.decomposition = decomposition
        self.profile = density_profile(self.digraph)
        self.mode = mode
        self.validate_steps = validate_steps
        self.trace = ReductionTrace()
        self.emb = embedding

    def count(self):
        return len(self.emb.antifaces)

    def fail(self, message):
        raise NoProgressError(message, self.trace)

    def face(self, key):
        for f in self.emb.antifaces:
            if f.key == key:
                return f
        raise AssertionError(f"no antiface with walk {key}")

    def record(self, case, operation, witness, count_before):
        self.trace.record(case, operation, witness, count_before, self.count())
        if self.validate_steps:
            report = verify_embedding(self.emb, self.decomposition)
            assert report.ok, report.summary()

    def merge_three(self, v, faces, case="1"):
        before = self.count()
        result = merge_three_at_vertex(self.emb, v, *faces)
        self.emb = result.embedding
        self.record(case, "merge_three_at_vertex", {"vertex": v}, before)

    def merge_cert(self, cert, case):
        before = self.count()
        result = merge_interlaced(
            self.emb, cert.face, cert.face_x, cert.face_y, cert.x, cert.y
        )
        self.emb = result.embedding
        self.record(case, "merge_interlaced", {"x": cert.x, "y": cert.y}, before)

    def blow(self, split_key, partner_key, case):
        split = self.face(split_key)
        partner = self.face(partner_key)
        shared = sorted(split.vertex_set() & partner.vertex_set())
        if not shared:
            self.fail(f"case {case}: the faces to blow up share no vertex")
        before = self.count()
        result = blow_up(self.emb, split, partner, shared[0])
        self.emb = result.embedding
        self.record(case, "blow_up", {"x": shared[0], "branch": result.branch}, before)
        if result.changed:
            return result.kept, result.merged
        return split, partner

    def merge_reducible_vertex(self, case="1"):
        """Inline case-1 merge; True when one was available and applied."""
        hit = find_vertex_on_three_antifaces(self.emb)
        if hit is None:
            return False
        self.merge_three(hit[0], hit[1], case)
        return True

    def run(self):
        budget = 8 * max(self.count(), 1)
        while self.count() > 2:
            if len(self.trace.steps) >= budget:
                self.fail(f"exceeded the safety bound of {budget} steps")
            try:
                self.step()
            except HypothesisError as exc:
                raise NoProgressError(f"dead end: {exc}", self.trace) from exc
        return self.emb, self.trace

    def step(self):
        if self.merge_reducible_vertex():
            return
        table = TypeTable(self.emb)
        touch = build_touch_graph(self.emb, table)
        shape = classify(touch)
        if not shape.loop_nodes:
            if not shape.is_star:
                self.case_no_loops_general(table, shape)
            else:
                self.case_no_loops_star(table, touch, shape)
        elif len(shape.loop_nodes) >= 2:
            self.case_two_looped(touch, shape)
        else:
            loop_key = shape.loop_nodes[0]
            neighbors = touch.neighbors(loop_key)
            if not neighbors:
                self.fail("a looped face shares no vertex with any other face")
            elif len(neighbors) == 1:
                self.case_one_loop_one_neighbor(touch, loop_key)
            else:
                self.case_one_loop_many_neighbors(touch, loop_key)

    def case_no_loops_general(self, table, shape):
        if shape.heaviest_pair is None:
            self.fail("no two antifaces share a vertex")
        p, q = shape.heaviest_pair
        first, second = self.face(p), self.face(q)
        if len(second.vertex_set()) > len(first.vertex_set()):
            first, second = second, first
        overlap = shape.heaviest_count
        k = self.profile.k
        if overlap <= k:
            label = "2.1.1"
            cert = check_three_neighbor_corollary(self.emb, first, table)
        elif overlap >= 3 * k + 4:
            label = "2.1.2"
            cert = check_diamond_corollary(self.emb, first, second, table)
        elif overlap == 3 * k + 3:
            label = "2.1.3"
            if k == 0:
                cert = check_diamond_corollary(self.emb, first, second, table)
            else:
                cert = self.bipartite_core_route(table, first, second)
        else:
            label = "2.1.4"
            cert = check_three_neighbor_corollary(self.emb, first, table)
        if cert is None:
            self.fail(f"case {label}: applicability check failed")
        self.merge_cert(cert, label)

    def bipartite_core_route(self, table, big, partner):
        """Case 2.1.3 with k >= 1: candidates from a dense bipartite core
        between the big face's private vertices and the shared ones."""
        shared = set(table.common_vertices(big.key, partner.key))
        private = sorted(big.vertex_set() - partner.vertex_set())
        adjacency = underlying_simple_graph(self.digraph)
        graph = {v: set() for v in private}
        for w in shared:
            graph[w] = set()
        for v in private:
            for w in adjacency[v]:
                if w in shared:
                    graph[v].add(w)
                    graph[w].add(v)
        survivors = extract_dense_subgraph(graph, 2)
        return three_neighbor_search(self.emb, big, sorted(survivors), table)

    def case_no_loops_star(self, table, touch, shape):
        center_key = shape.star_center
        center = self.face(center_key)
        k = self.profile.k
        partner_key, partner_overlap = None, 0
        for other in touch.neighbors(center_key):
            count = len(touch.link_vertices(center_key, other))
            if count > partner_overlap:
                partner_key, partner_overlap = other, count
        if partner_key is None:
            self.fail("case 2.2: the star center touches no other face")
        pool = table.two_face_vertices(center_key)
        if len(pool) - partner_overlap >= k + 3:
            cert = check_three_neighbor_corollary(self.emb, center, table)
            if cert is None:
                self.fail("case 2.2: margin route inapplicable despite the margin")
            self.merge_cert(cert, "2.2")
            return
        third_key = next(
            key for key in touch.nodes if key not in (center_key, partner_key)
        )
        new1, new2 = self.blow(center_key, third_key, "2.2")
        if self.merge_reducible_vertex():
            return
        table2 = TypeTable(self.emb)
        touch2 = build_touch_graph(self.emb, table2)
        shape2 = classify(touch2)
        # blowing up touches only the two faces involved, so new loops are theirs
        assert set(shape2.loop_nodes) <= {new1.key, new2.key}
        if not shape2.loop_nodes:
            return  # the next iteration lands in a merging case
        looped_key = min(
            shape2.loop_nodes,
            key=lambda key: (-len(touch2.loop_vertices(key)), key),
        )
        other = new1 if looped_key == new2.key else new2
        cert = check_big_moderate(
            self.emb,
            self.face(looped_key),
            self.face(partner_key),
            self.face(other.key),
            table2,
        )
        if cert is None:
            self.fail("case 2.2: size hypotheses fail after the blow up")
        self.merge_cert(cert, "2.2")

    def case_two_looped(self, touch, shape):
        triple = None
        for loop_key in shape.loop_nodes:
            for partner_key in touch.neighbors(loop_key):
                others = [
                    key for key in shape.loop_nodes
                    if key not in (loop_key, partner_key)
                ]
                if others:
                    triple = (loop_key, partner_key, others[0])
                    break
            if triple:
                break
        if triple is None:
            self.fail("case 3.1: no blow-up triple among the looped faces")
        loop_key, partner_key, anchor_key = triple
        new1, new2 = self.blow(loop_key, partner_key, "3.1")
        if self.merge_reducible_vertex():
            return
        table2 = TypeTable(self.emb)
        cert = check_big_moderate(
            self.emb,
            self.face(anchor_key),
            self.face(new1.key),
            self.face(new2.key),
            table2,
        )
        if cert is None:
            self.fail("case 3.1: size hypotheses fail after the blow up")
        self.merge_cert(cert, "3.1")

    def case_one_loop_one_neighbor(self, touch, loop_key):
        partner_key = touch.neighbors(loop_key)[0]
        candidates = [
            key for key in touch.neighbors(partner_key)
            if key not in (loop_key, partner_key)
        ]
        if not candidates:
            self.fail("case 3.2.1: no third face adjacent to the neighbor")
        third_key = candidates[0]
        new1, new2 = self.blow(partner_key, third_key, "3.2.1")
        if self.merge_reducible_vertex():
            return
        table2 = TypeTable(self.emb)
        cert = check_big_moderate(
            self.emb,
            self.face(loop_key),
            self.face(new1.key),
            self.face(new2.key),
            table2,
        )
        if cert is None:
            self.fail("case 3.2.1: size hypotheses fail after the blow up")
        self.merge_cert(cert, "3.2.1")

    def case_one_loop_many_neighbors(self, touch, loop_key):
        partner_key = touch.neighbors(loop_key)[0]
        new1, new2 = self.blow(loop_key, partner_key, "3.2.2")
        if self.merge_reducible_vertex():
            return
        table2 = TypeTable(self.emb)
        touch2 = build_touch_graph(self.emb, table2)
        shape2 = classify(touch2)
        assert set(shape2.loop_nodes) <= {new1.key, new2.key}
        if len(shape2.loop_nodes) != 1:
            return  # no loops or two loops: an earlier case handles it next
        looped_key = shape2.loop_nodes[0]
        sibling = new1 if looped_key == new2.key else new2
        neighbors = touch2.neighbors(looped_key)
        if len(neighbors) < 2:
            return  # single-neighbor state: handled next iteration
        candidates = [key for key in neighbors if key != sibling.key]
        if not candidates:
            return
        next1, next2 = self.blow(looped_key, candidates[0], "3.2.2")
        if self.merge_reducible_vertex():
            return
        table3 = TypeTable(self.emb)
        touch3 = build_touch_graph(self.emb, table3)
        shape3 = classify(touch3)
        assert set(shape3.loop_nodes) <= {next1.key, next2.key}
        if not shape3.loop_nodes:
            return
        final_key = min(
            shape3.loop_nodes,
            key=lambda key: (-len(touch3.loop_vertices(key)), key),
        )
        other = next1 if final_key == next2.key else next2
        cert = check_big_moderate(
            self.emb,
            self.face(final_key),
            self.face(sibling.key),
            self.face(other.key),
            table3,
        )
        if cert is None:
            self.fail("case 3.2.2: size hypotheses fail after the blow ups")
        self.merge_cert(cert, "3.2.2")


def reduce_to_upper_embedding(digraph, decomposition, mode=STRICT,
                              validate_steps=False):
    """Embed the circuits as profaces and merge antifaces down to at most two.

    Returns (embedding, trace).  Strict mode checks order and density up
    front and is then guaranteed to finish; best-effort mode tries the same
    moves on any eulerian connected digraph and raises NoProgressError at a
    dead end.
    """
    if mode not in (STRICT, BEST_EFFORT):
        raise ValueError(f"unknown mode {mode!r}")
    if decomposition.digraph != digraph:
        raise GraphError("decomposition belongs to a different digraph")
    if not digraph.is_balanced():
        raise GraphError("digraph is not balanced")
    if not digraph.is_connected():
        raise GraphError("digraph is not connected")
    if mode == STRICT:
        profile = density_profile(digraph)
        if digraph.n < 7 or not profile.dense:
            raise HypothesisError(
                f"strict mode needs order >= 7 and 5 * min_degree >= 4n + 2; "
                f"got n = {profile.n}, min_degree = {profile.min_degree}, "
                f"k = {profile.k}"
            )
    if digraph.n <= 2:
        return small_order_embedding(digraph, decomposition)
    embedding = embed_from_decomposition(digraph, decomposition)
    reducer = _Reducer(embedding, decomposition, mode, validate_steps)
    return reducer.run()


def reduce_embedding(embedding, decomposition, mode=BEST_EFFORT,
                     validate_steps=False):
    """Continue reducing an existing embedding whose profaces are already
    the given circuits.  Same contract as reduce_to_upper_embedding."""
    if mode not in (STRICT, BEST_EFFORT):
        raise ValueError(f"unknown mode {mode!r}")
    traced = {f.arcs() for f in embedding.profaces}
    if traced != set(decomposition.canonical_set()):
        raise EmbeddingError("embedding profaces do not match the decomposition")
    reducer = _Reducer(embedding, decomposition, mode, validate_steps)
    return reducer.run()


def small_order_embedding(digraph, decomposition):
    """Minimum-antiface embedding for digraphs on one or two vertices.

    On one vertex, and on two vertices joined by at least two arcs each way,
    repeated merging reaches at most two antifaces (a three-face remainder
    is always the path configuration, closed by one interlaced merge).  Two
    vertices joined by exactly one arc each way split along that 2-cut into
    two one-vertex problems whose solutions are spliced back together.
    """
    if digraph.n > 2:
        raise GraphError("the small-order handler covers one or two vertices")
    if not digraph.is_eulerian():
        raise GraphError("digraph is not eulerian")
    if decomposition.digraph != digraph:
        raise GraphError("decomposition belongs to a different digraph")
    trace = ReductionTrace()
    if digraph.n == 2:
        forward = [a for a in range(digraph.m) if digraph.arcs[a] == (0, 1)]
        backward = [a for a in range(digraph.m) if digraph.arcs[a] == (1, 0)]
        assert len(forward) == len(backward)
        if len(forward) == 1:
            return _splice_across_two_cut(
                digraph, decomposition, trace, forward[0], backward[0]
            )

    emb = embed_from_decomposition(digraph, decomposition)
    while True:
        hit = find_vertex_on_three_antifaces(emb)
        if hit is None:
            break
        before = len(emb.antifaces)
        result = merge_three_at_vertex(emb, hit[0], *hit[1])
        emb = result.embedding
        trace.record("1", "merge_three_at_vertex", {"vertex": hit[0]},
                     before, len(emb.antifaces))
    if len(emb.antifaces) > 2:
        # locally irreducible on two vertices: must be the path configuration
        assert digraph.n == 2 and len(emb.antifaces) == 3
        spanning = [f for f in emb.antifaces if len(f.vertex_set()) == 2]
        single = [f for f in emb.antifaces if len(f.vertex_set()) == 1]
        assert len(spanning) == 1 and len(single) == 2
        u = min(single[0].vertex_set())
        w = min(single[1].vertex_set())
        assert u != w
        before = 3
        result = merge_interlaced(emb, spanning[0], single[0], single[1], u, w)
        emb = result.embedding
        trace.record("small-a", "merge_interlaced", {"x": u, "y": w},
                     before, len(emb.antifaces))
    assert len(emb.antifaces) <= 2
    return emb, trace


def _splice_across_two_cut(digraph, decomposition, trace, forward, backward):
    """Two vertices joined by one arc each way: solve each side with its
    share of the crossing circuit replaced by a loop, then substitute the
    crossing arcs back into the rotations."""
    star = None
    for circuit in decomposition.circuits:
        if forward in circuit.arc_ids:
            star = circuit
            break
    assert star is not None and backward in star.arc_ids
    ids = star.arc_ids
    i = ids.index(forward)
    rotated = ids[i:] + ids[:i]
    pf = rotated.index(backward)
    far_loops = rotated[1:pf]      # loops at vertex 1 between the crossings
    near_loops = rotated[pf + 1:]  # loops at vertex 0 after returning
    assert all(digraph.arcs[a] == (1, 1) for a in far_loops)
    assert all(digraph.arcs[a] == (0, 0) for a in near_loops)

    sides = (
        (0, [a for a in range(digraph.m) if digraph.arcs[a] == (0, 0)], near_loops),
        (1, [a for a in range(digraph.m) if digraph.arcs[a] == (1, 1)], far_loops),
    )
    rotations = []
    counts = []
    for vertex, loops, tail_segment in sides:
        index_of = {a: j for j, a in enumerate(loops)}
        bridge = len(loops)
        side_digraph = Digraph(1, [(0, 0)] * (bridge + 1))
        side_lists = []
        for circuit in decomposition.circuits:
            if circuit is star:
                continue
            if digraph.tail(circuit.arc_ids[0]) != vertex:
                continue
            side_lists.append([index_of[a] for a in circuit.arc_ids])
        side_lists.append([bridge] + [index_of[a] for a in tail_segment])
        side_decomposition = CircuitDecomposition.from_arc_lists(side_digraph, side_lists)
        side_emb, _ = small_order_embedding(side_digraph, side_decomposition)
        counts.append(len(side_emb.antifaces))
        if vertex == 0:
            out_half, in_half = 2 * forward, 2 * backward + 1
        else:
            out_half, in_half = 2 * backward, 2 * forward + 1
        mapping = {}
        for j, a in enumerate(loops):
            mapping[2 * j] = 2 * a
            mapping[2 * j + 1] = 2 * a + 1
        mapping[2 * bridge] = out_half
        mapping[2 * bridge + 1] = in_half
        rotations.append([mapping[h] for h in side_emb.rotations[0]])

    emb = OrientedDirectedEmbedding(digraph, rotations)
    report = verify_embedding(emb, decomposition)
    assert report.ok, report.summary()
    assert len(emb.antifaces) == counts[0] + counts[1] - 1
    trace.metadata["splice"] = {
        "cut_arcs": [forward, backward],
        "side_antifaces": counts,
    }
    return emb, trace


def _completion_circuits(digraph, leftover):
    """One euler circuit per nontrivial weak component of the leftover arcs."""
    remaining = set(leftover)
    if not remaining:
        return []
    balance = {}
    for a in remaining:
        t, h = digraph.arcs[a]
        balance[t] = balance.get(t, 0) + 1
        balance[h] = balance.get(h, 0) - 1
    bad = sorted(v for v, d in balance.items() if d != 0)
    if bad:
        raise GraphError(f"leftover arcs are unbalanced at vertices {bad[:8]}")

    out_arcs = {}
    for a in sorted(remaining):
        out_arcs.setdefault(digraph.tail(a), []).append(a)
    neighbors = {}
    for a in remaining:
        t, h = digraph.arcs[a]
        neighbors.setdefault(t, set()).add(h)
        neighbors.setdefault(h, set()).add(t)
    unseen = set(neighbors)
    circuits = []
    while unseen:
        root = min(unseen)
        component = {root}
        frontier = [root]
        while frontier:
            v = frontier.pop()
            for w in neighbors[v]:
                if w not in component:
                    component.add(w)
                    frontier.append(w)
        unseen -= component
        next_free = {v: 0 for v in component}
        stack = [(root, None)]
        seq = []
        while stack:
            v = stack[-1][0]
            outs = out_arcs.get(v, ())
            while next_free[v] < len(outs) and outs[next_free[v]] not in remaining:
                next_free[v] += 1
            if next_free[v] < len(outs):
                a = outs[next_free[v]]
                next_free[v] += 1
                remaining.discard(a)
                stack.append((digraph.head(a), a))
            else:
                _, a = stack.pop()
                if a is not None:
                    seq.append(a)
        seq.reverse()
        circuits.append(DirectedCircuit(digraph, seq))
    assert not remaining, "leftover component walk missed arcs"
    return circuits


def relative_upper_from_partial(digraph, partial, mode=STRICT, validate_steps=False):
    """Extend arc-disjoint circuits to a full decomposition and reduce.

    The leftover arcs are completed with one euler circuit per nontrivial
    weak component, so the proface count is len(partial) plus the number of
    those components.
    """
    circuits = []
    for item in partial:
        circuit = item if isinstance(item, DirectedCircuit) else DirectedCircuit(digraph, item)
        if circuit.digraph != digraph:
            raise GraphError("partial circuit belongs to a different digraph")
        circuits.append(circuit)
    used = set()
    for circuit in circuits:
        overlap = used.intersection(circuit.arc_ids)
        if overlap:
            raise GraphError(f"arc {min(overlap)} appears in two partial circuits")
        used.update(circuit.arc_ids)
    leftover = [a for a in range(digraph.m) if a not in used]
    extras = _completion_circuits(digraph, leftover)
    full = CircuitDecomposition(digraph, circuits + extras)
    emb, trace = reduce_to_upper_embedding(digraph, full, mode, validate_steps)
    trace.metadata["completion"] = {"given": len(circuits), "added": len(extras)}
    assert len(emb.profaces) == len(circuits) + len(extras)
    return emb, trace


def undirected_upper_embedding(graph, walks, mode=STRICT, validate_steps=False):
    """Orient an even undirected graph along the given closed walks, then
    reduce the oriented decomposition; the walks become the profaces."""
    from .digraph import eulerian_orientation

    digraph, decomposition = eulerian_orientation(graph, walks)
    return reduce_to_upper_embedding(digraph, decomposition, mode, validate_steps)
