"""Finding interlaced vertex pairs on an antiface.

A vertex's type is the set of antifaces it lies on; in a locally
irreducible embedding that set has one or two members.  The searches here
locate two vertices x, y whose occurrences alternate x, y, x, y around one
antiface while x and y each lie on one further antiface, which is exactly
what merge_interlaced consumes.  Searches are deterministic: all scans run
in ascending position or vertex order.
"""

from .digraph import density_profile, underlying_simple_graph
from .errors import EmbeddingError, GraphError, HypothesisError, LocalIrreducibilityError


class TypeTable:
    """Per-vertex antiface membership of a locally irreducible embedding."""

    __slots__ = ("faces", "membership")

    def __init__(self, embedding):
        self.faces = {f.key: f for f in embedding.antifaces}
        membership = {}
        for key in sorted(self.faces):
            for v in self.faces[key].vertex_set():
                membership.setdefault(v, []).append(key)
        for v in sorted(membership):
            if len(membership[v]) > 2:
                raise LocalIrreducibilityError(v, membership[v])
        self.membership = {v: tuple(keys) for v, keys in membership.items()}

    def faces_at(self, v):
        return self.membership.get(v, ())

    def partner(self, v, key):
        """The other antiface at v, or None for a single-face vertex."""
        keys = self.faces_at(v)
        if key not in keys:
            raise EmbeddingError(f"vertex {v} does not lie on the given face")
        others = [k for k in keys if k != key]
        return others[0] if others else None

    def common_vertices(self, key_a, key_b):
        """Vertices of type exactly {A, B}, ascending."""
        pair = tuple(sorted((key_a, key_b)))
        return tuple(v for v in sorted(self.membership) if self.membership[v] == pair)

    def single_face_vertices(self, key):
        return tuple(v for v in sorted(self.membership) if self.membership[v] == (key,))

    def two_face_vertices(self, key):
        """Vertices on the given face and exactly one other, ascending."""
        return tuple(
            v for v in sorted(self.membership)
            if len(self.membership[v]) == 2 and key in self.membership[v]
        )


class InterlacingCertificate:
    """Witness that x, y alternate on ``face`` with partner faces attached."""

    __slots__ = ("face", "x", "y", "positions", "face_x", "face_y")

    def __init__(self, face, x, y, positions, face_x, face_y):
        self.face = face
        self.x = x
        self.y = y
        self.positions = positions
        self.face_x = face_x
        self.face_y = face_y

    def __repr__(self):
        return f"InterlacingCertificate(x={self.x}, y={self.y})"


def find_vertex_on_three_antifaces(embedding):
    """Lowest vertex lying on three or more antifaces, with its three
    lowest-walk faces; None when the embedding is locally irreducible."""
    on_faces = {}
    for f in embedding.antifaces:
        for v in f.vertex_set():
            on_faces.setdefault(v, []).append(f)
    for v in sorted(on_faces):
        faces = on_faces[v]
        if len(faces) >= 3:
            faces.sort(key=lambda f: f.walk)
            return v, tuple(faces[:3])
    return None


def usg_walk(face):
    """Corner sequence with cyclically consecutive duplicates removed.

    Returns (vertices, positions) where positions[i] is the corner index
    starting the i-th run.
    """
    corners = face.corners
    t = len(corners)
    starts = [j for j in range(t) if corners[j] != corners[j - 1]]
    if not starts:
        return [corners[0]], [0]
    return [corners[j] for j in starts], starts


def walk_edge_pairs(vertices):
    """Unordered consecutive pairs of a cyclic vertex walk."""
    length = len(vertices)
    if length < 2:
        return frozenset()
    return frozenset(
        frozenset((vertices[i], vertices[(i + 1) % length])) for i in range(length)
    )


def _antiface_of(embedding, face):
    for f in embedding.antifaces:
        if f.key == face.key:
            return f
    raise EmbeddingError(f"face with walk {face.key} is not an antiface of this embedding")


def _certificate(embedding, table, face, x, y):
    positions = face.alternation_positions(x, y)
    assert positions is not None
    face_x = table.faces[table.partner(x, face.key)]
    face_y = table.faces[table.partner(y, face.key)]
    return InterlacingCertificate(face, x, y, positions, face_x, face_y)


def three_neighbor_search(embedding, face, candidates, table=None):
    """Interlaced cross-type pair among candidate vertices on one antiface.

    Every candidate must lie on ``face`` plus exactly one other antiface,
    and must have at least three candidate neighbors of a different type in
    the underlying simple graph; violations are reported with a witness.
    The scan walks intervals between repeated candidate occurrences in
    ascending (length, start) order and takes the first interval holding a
    cross-type candidate.
    """
    table = table if table is not None else TypeTable(embedding)
    face = _antiface_of(embedding, face)
    chosen = sorted(set(candidates))
    if not chosen:
        raise HypothesisError("candidate set is empty")
    partner = {}
    for v in chosen:
        keys = table.faces_at(v)
        if len(keys) != 2 or face.key not in keys:
            raise HypothesisError(
                f"candidate {v} is not on the face plus exactly one other antiface"
            )
        partner[v] = table.partner(v, face.key)
    adjacency = underlying_simple_graph(embedding.digraph)
    for v in chosen:
        cross = sum(
            1 for u in chosen
            if u != v and u in adjacency[v] and partner[u] != partner[v]
        )
        if cross < 3:
            raise HypothesisError(
                f"candidate {v} has only {cross} cross-type candidate neighbors, needs 3"
            )

    walk, _ = usg_walk(face)
    length = len(walk)
    in_set = set(chosen)
    for gap in range(2, length):
        for start in range(length):
            x = walk[start]
            if x not in in_set or walk[(start + gap) % length] != x:
                continue
            for step in range(1, gap):
                y = walk[(start + step) % length]
                if y in in_set and partner[y] != partner[x]:
                    interval = {(start + d) % length for d in range(gap + 1)}
                    outside = any(
                        walk[q] == y for q in range(length) if q not in interval
                    )
                    if outside:
                        return _certificate(embedding, table, face, x, y)
                    raise HypothesisError(
                        f"vertex {y} lies only inside the minimal interval of {x}"
                    )
    raise HypothesisError("no repeated candidate vertex encloses a cross-type candidate")


def diamond_search(embedding, face, t, u, v, x, table=None):
    """Interlaced pair from a diamond: a path t, u, v sharing one second
    face, plus a witness x adjacent to all three with a different second face.

    Every arc between x and one of t, u, v lies on ``face``, so some
    traversal direction of the face walks x directly into u.  The interval
    from that x to its next occurrence decides the partner: t or v when its
    edge to x stays outside the interval and {t_or_v, u} appears inside,
    otherwise u.
    """
    table = table if table is not None else TypeTable(embedding)
    face = _antiface_of(embedding, face)
    if len({t, u, v}) != 3:
        raise HypothesisError("path vertices must be three distinct vertices")
    second = {w: table.partner(w, face.key) for w in (t, u, v)}
    for w in (t, u, v):
        if second[w] is None:
            raise HypothesisError(f"vertex {w} lies on no second antiface")
    if len(set(second.values())) != 1:
        raise HypothesisError("path vertices must share one second antiface")
    shared = second[t]
    x_partner = table.partner(x, face.key)
    if x_partner is None or x_partner == shared:
        raise HypothesisError(
            "witness must lie on a second antiface different from the path's"
        )
    adjacency = underlying_simple_graph(embedding.digraph)
    for w in (t, u, v):
        if w not in adjacency[x]:
            raise HypothesisError(f"witness {x} is not adjacent to path vertex {w}")
    walk, _ = usg_walk(face)
    edges = walk_edge_pairs(walk)
    if frozenset((t, u)) not in edges or frozenset((u, v)) not in edges:
        raise HypothesisError("path edges must be consecutive pairs of the face walk")

    length = len(walk)
    oriented = None
    for candidate in (walk, walk[::-1]):
        for q in range(length):
            if candidate[q] == x and candidate[(q + 1) % length] == u:
                oriented = (candidate, q)
                break
        if oriented:
            break
    # all x-u arcs lie on this face, so one direction walks x into u
    assert oriented is not None
    ordered, q = oriented
    span = next(
        d for d in range(1, length + 1) if ordered[(q + d) % length] == x
    )
    interval = [ordered[(q + d) % length] for d in range(span + 1)]
    closing = interval[-2]  # vertex just before the interval's closing x
    t_star = v if closing == t else t
    inside_pairs = {
        frozenset((interval[i], interval[i + 1])) for i in range(len(interval) - 1)
    }
    y = t_star if frozenset((t_star, u)) in inside_pairs else u
    return _certificate(embedding, table, face, x, y)


def check_three_neighbor_corollary(embedding, face, table=None):
    """Try the margin route: the face's two-face vertices interlace whenever
    each other antiface claims at most all-but-(k + 3) of them.  Returns a
    certificate or None when the margin fails."""
    table = table if table is not None else TypeTable(embedding)
    face = _antiface_of(embedding, face)
    profile = density_profile(embedding.digraph)
    k = profile.k
    pool = table.two_face_vertices(face.key)
    if not pool:
        return None
    largest_overlap = 0
    for other_key in table.faces:
        if other_key == face.key:
            continue
        overlap = len(table.common_vertices(face.key, other_key))
        largest_overlap = max(largest_overlap, overlap)
    if len(pool) - largest_overlap < k + 3:
        return None
    return three_neighbor_search(embedding, face, pool, table)


def check_big_moderate(embedding, face_a, face_b, face_c, table=None):
    """Try the size route: one face spanning almost everything and two
    moderately large partners force an interlaced pair on the big face.
    Returns a certificate or None when a size hypothesis fails."""
    table = table if table is not None else TypeTable(embedding)
    a = _antiface_of(embedding, face_a)
    b = _antiface_of(embedding, face_b)
    c = _antiface_of(embedding, face_c)
    if len({a.key, b.key, c.key}) != 3:
        return None
    profile = density_profile(embedding.digraph)
    n, k = profile.n, profile.k
    if len(a.vertex_set()) < n - k:
        return None
    if len(b.vertex_set()) < 2 * k + 3 or len(c.vertex_set()) < 2 * k + 3:
        return None
    with_b = table.common_vertices(a.key, b.key)
    with_c = table.common_vertices(a.key, c.key)
    assert len(with_b) >= k + 3 and len(with_c) >= k + 3
    pool = sorted(set(with_b) | set(with_c))
    return three_neighbor_search(embedding, a, pool, table)


def check_diamond_corollary(embedding, face_a, face_b, table=None):
    """Try the diamond route on two antifaces sharing many vertices.

    Applicable when |AB| >= 3k + 4 (or just 3 when k = 0) and each face has
    a two-face vertex whose partner is outside {A, B}.  Builds a diamond
    inside the shared vertices adjacent to both witnesses and delegates to
    diamond_search on whichever face carries both path edges.
    """
    table = table if table is not None else TypeTable(embedding)
    a = _antiface_of(embedding, face_a)
    b = _antiface_of(embedding, face_b)
    if a.key == b.key:
        return None
    profile = density_profile(embedding.digraph)
    k = profile.k
    shared = table.common_vertices(a.key, b.key)
    if not ((k == 0 and len(shared) >= 3) or len(shared) >= 3 * k + 4):
        return None

    def witness(key):
        for v in table.two_face_vertices(key):
            other = table.partner(v, key)
            if other != a.key and other != b.key:
                return v
        return None

    x_a = witness(a.key)
    x_b = witness(b.key)
    if x_a is None or x_b is None:
        return None

    adjacency = underlying_simple_graph(embedding.digraph)
    pool = [w for w in shared if w in adjacency[x_a] and w in adjacency[x_b]]
    assert len(pool) >= len(shared) - 2 * k

    edges_a = walk_edge_pairs(usg_walk(a)[0])
    edges_b = walk_edge_pairs(usg_walk(b)[0])

    def classes(p, q):
        """Which of the two face walks carry an arc between p and q."""
        e = frozenset((p, q))
        found = []
        if e in edges_a:
            found.append("a")
        if e in edges_b:
            found.append("b")
        # shared two-face vertices are joined only by arcs of A or B
        assert found
        return found

    if k == 0:
        s0, s1, s2 = pool[:3]
        for p, q in ((s0, s1), (s1, s2), (s0, s2)):
            assert q in adjacency[p]
        pairs = (
            ((s0, s1), (s1, s2), s1),
            ((s0, s1), (s0, s2), s0),
            ((s1, s2), (s0, s2), s2),
        )
    else:
        u0 = pool[0]
        neighbors = [w for w in pool if w != u0 and w in adjacency[u0]]
        assert len(neighbors) >= 3
        t1, t2, t3 = neighbors[:3]
        pairs = (
            ((u0, t1), (u0, t2), u0),
            ((u0, t1), (u0, t3), u0),
            ((u0, t2), (u0, t3), u0),
        )

    for e1, e2, hub in pairs:
        common = [c for c in classes(*e1) if c in classes(*e2)]
        if not common:
            continue
        side = common[0]
        legs = [w for w in sorted(set(e1) | set(e2)) if w != hub]
        if side == "a":
            return diamond_search(embedding, a, legs[0], hub, legs[1], x_a, table)
        return diamond_search(embedding, b, legs[0], hub, legs[1], x_b, table)
    raise AssertionError("two of three edges always share a face class")


def extract_dense_subgraph(adjacency, d):
    """Vertices of the (d + 1)-core of a bipartite graph with enough edges.

    ``adjacency`` maps each vertex to its neighbor set.  Requires at least
    2d vertices and strictly more than d * (|V| - d) edges; the complete
    bipartite graph with a part of size d meets the bound exactly and is
    rejected.  Peeling vertices of degree at most d then never empties the
    graph, and the survivors all have degree at least d + 1.
    """
    vertices = sorted(adjacency)
    for v in vertices:
        for w in adjacency[v]:
            if w == v:
                raise GraphError(f"vertex {v} has a self-loop")
            if v not in adjacency.get(w, ()):
                raise GraphError(f"edge {v}-{w} is not symmetric")
    color = {}
    for root in vertices:
        if root in color:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            p = queue.pop()
            for q in adjacency[p]:
                if q not in color:
                    color[q] = 1 - color[p]
                    queue.append(q)
                elif color[q] == color[p]:
                    raise GraphError("graph is not bipartite")
    edge_count = sum(len(adjacency[v]) for v in vertices) // 2
    if len(vertices) < 2 * d:
        raise HypothesisError(f"{len(vertices)} vertices, need at least {2 * d}")
    if edge_count <= d * (len(vertices) - d):
        raise HypothesisError(
            f"{edge_count} edges do not exceed d(|V| - d) = {d * (len(vertices) - d)}"
        )
    degree = {v: len(adjacency[v]) for v in vertices}
    alive = set(vertices)
    queue = [v for v in vertices if degree[v] <= d]
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.remove(v)
        for w in adjacency[v]:
            if w in alive:
                degree[w] -= 1
                if degree[w] <= d:
                    queue.append(w)
    assert alive, "peeling emptied a graph above the edge bound"
    assert all(degree[v] >= d + 1 for v in alive)
    return frozenset(alive)
