"""Rotation systems on half-arcs and two-colored face tracing.

A rotation at a vertex is the clockwise cyclic order of its half-arcs.  An
embedding is admissible for face two-coloring when every rotation alternates
outgoing and incoming half-arcs.  Both face colors traverse arcs forward:

* a proface arriving on incoming half ``i`` departs on the half-arc
  clockwise-before ``i``;
* an antiface arriving on ``i`` departs on the half-arc clockwise-after ``i``.

With alternation these departures are outgoing, so each color induces a
permutation of the outgoing half-arcs whose orbits are the faces.
"""

from .digraph import mate
from .errors import EmbeddingError, GraphError


class FaceWalk:
    """Closed face boundary, stored as outgoing half-arc ids in canonical rotation.

    ``corners[j]`` is the vertex the face passes between arriving on arc
    ``walk[j]`` and departing on ``walk[j + 1]``.
    """

    __slots__ = ("walk", "color", "corners", "_vset")

    def __init__(self, digraph, walk, color):
        walk = tuple(walk)
        i = walk.index(min(walk))
        walk = walk[i:] + walk[:i]
        self.walk = walk
        self.color = color
        self.corners = tuple(digraph.head(h >> 1) for h in walk)
        self._vset = frozenset(self.corners)

    @property
    def key(self):
        return self.walk

    def __len__(self):
        return len(self.walk)

    def arcs(self):
        return tuple(h >> 1 for h in self.walk)

    def vertex_set(self):
        return self._vset

    def visits(self, v):
        return v in self._vset

    def corner_positions(self, v):
        return tuple(j for j, c in enumerate(self.corners) if c == v)

    def arrival_half(self, j):
        """Incoming half-arc on which the face reaches corner j."""
        return self.walk[j] | 1

    def alternation_positions(self, x, y):
        """Four corner positions in cyclic order alternating x, y, x, y.

        Returns None when the occurrences of x and y do not interlace on
        this face.  Runs of equal labels count once; the first position of
        each of four consecutive label blocks is returned, starting at an
        x block.
        """
        labeled = [(j, self.corners[j]) for j in range(len(self.corners))
                   if self.corners[j] == x or self.corners[j] == y]
        if not labeled:
            return None
        blocks = []
        for j, label in labeled:
            if blocks and blocks[-1][0] == label:
                continue
            blocks.append((label, j))
        if len(blocks) > 1 and blocks[0][0] == blocks[-1][0]:
            blocks.pop()  # cyclic wrap merges the end run into the start run
        if len(blocks) < 4:
            return None
        start = next(i for i, (label, _) in enumerate(blocks) if label == x)
        picked = [blocks[(start + t) % len(blocks)][1] for t in range(4)]
        return tuple(picked)

    def __eq__(self, other):
        return (
            isinstance(other, FaceWalk)
            and self.color == other.color
            and self.walk == other.walk
        )

    def __hash__(self):
        return hash((self.color, self.walk))

    def __repr__(self):
        return f"FaceWalk({self.color}, arcs={list(self.arcs())})"


class OrientedDirectedEmbedding:
    """Immutable rotation system over a digraph's half-arcs."""

    __slots__ = ("digraph", "rotations", "_pos", "_faces")

    def __init__(self, digraph, rotations):
        rotations = tuple(tuple(int(h) for h in rot) for rot in rotations)
        if len(rotations) != digraph.n:
            raise EmbeddingError(
                f"expected {digraph.n} rotations, got {len(rotations)}"
            )
        for v, rot in enumerate(rotations):
            if tuple(sorted(rot)) != digraph.incident_half_arcs(v):
                raise EmbeddingError(
                    f"rotation at vertex {v} is not a permutation of its half-arcs"
                )
        self.digraph = digraph
        self.rotations = rotations
        self._pos = tuple({h: i for i, h in enumerate(rot)} for rot in rotations)
        self._faces = None

    def next_cw(self, h):
        v = self.digraph.half_arc_vertex(h)
        rot = self.rotations[v]
        return rot[(self._pos[v][h] + 1) % len(rot)]

    def prev_cw(self, h):
        v = self.digraph.half_arc_vertex(h)
        rot = self.rotations[v]
        return rot[(self._pos[v][h] - 1) % len(rot)]

    def alternation_failure(self):
        """First vertex whose rotation does not alternate directions, or None."""
        for v, rot in enumerate(self.rotations):
            if len(rot) % 2 == 1:
                return v
            for i, h in enumerate(rot):
                if (h & 1) == (rot[(i + 1) % len(rot)] & 1):
                    return v
        return None

    def blocks_at(self, v):
        """Rotation at v as consecutive (outgoing, incoming) pairs."""
        rot = self.rotations[v]
        if not rot:
            return ()
        start = 0 if (rot[0] & 1) == 0 else 1
        d = len(rot) // 2
        blocks = []
        for i in range(d):
            g = rot[(start + 2 * i) % len(rot)]
            h = rot[(start + 2 * i + 1) % len(rot)]
            if (g & 1) != 0 or (h & 1) != 1:
                raise EmbeddingError(f"rotation at vertex {v} does not alternate")
            blocks.append((g, h))
        return tuple(blocks)

    def _trace(self):
        if self._faces is not None:
            return self._faces
        bad = self.alternation_failure()
        if bad is not None:
            raise EmbeddingError(f"rotation at vertex {bad} does not alternate")
        digraph = self.digraph
        outgoing = [2 * a for a in range(digraph.m)]
        profaces = []
        antifaces = []
        for color, step in (("pro", self.prev_cw), ("anti", self.next_cw)):
            seen = set()
            faces = []
            for h0 in outgoing:
                if h0 in seen:
                    continue
                orbit = []
                h = h0
                while h not in seen:
                    seen.add(h)
                    orbit.append(h)
                    h = step(mate(h))
                if h != h0:
                    raise EmbeddingError("face tracing did not close an orbit")
                faces.append(FaceWalk(digraph, orbit, color))
            faces.sort(key=lambda f: f.walk)
            if color == "pro":
                profaces = faces
            else:
                antifaces = faces
        self._faces = (tuple(profaces), tuple(antifaces))
        return self._faces

    @property
    def profaces(self):
        return self._trace()[0]

    @property
    def antifaces(self):
        return self._trace()[1]

    def antiface_count(self):
        return len(self.antifaces)

    def face_count(self):
        pro, anti = self._trace()
        return len(pro) + len(anti)

    def with_rotation(self, v, new_rotation):
        rotations = list(self.rotations)
        rotations[v] = tuple(new_rotation)
        return OrientedDirectedEmbedding(self.digraph, rotations)

    def to_json_dict(self):
        return {"rotations": [list(rot) for rot in self.rotations]}

    @classmethod
    def from_json_dict(cls, digraph, data):
        try:
            return cls(digraph, data["rotations"])
        except (KeyError, TypeError) as exc:
            raise EmbeddingError(f"bad embedding JSON: {exc}") from exc

    def __eq__(self, other):
        return (
            isinstance(other, OrientedDirectedEmbedding)
            and self.digraph == other.digraph
            and self.rotations == other.rotations
        )

    def __hash__(self):
        return hash(self.rotations)

    def __repr__(self):
        return f"OrientedDirectedEmbedding(n={self.digraph.n}, m={self.digraph.m})"


def trace_faces(embedding):
    """Both face families of an embedding, each sorted by canonical walk."""
    return embedding._trace()


def embed_from_decomposition(digraph, decomposition):
    """Canonical embedding whose profaces are exactly the given circuits.

    At each vertex the incoming half-arcs are taken ascending and each is
    preceded by the outgoing half-arc its circuit continues to, so every
    circuit closes up as one proface.
    """
    if decomposition.digraph != digraph:
        raise GraphError("decomposition belongs to a different digraph")
    fw = decomposition.fw
    rotations = []
    for v in range(digraph.n):
        rot = []
        for h in digraph.in_half_arcs(v):
            rot.append(fw[h])
            rot.append(h)
        rotations.append(rot)
    return OrientedDirectedEmbedding(digraph, rotations)


def euler_genus(embedding):
    """Genus of the closed orientable surface induced by the embedding."""
    digraph = embedding.digraph
    if not digraph.is_connected():
        raise GraphError("genus is defined for connected digraphs only")
    chi = digraph.n - digraph.m + embedding.face_count()
    gamma = 2 - chi
    if gamma % 2 != 0:
        raise EmbeddingError(f"euler genus {gamma} is odd; embedding is inconsistent")
    return gamma // 2


class VerificationReport:
    """Itemized result of checking an embedding against its contract."""

    __slots__ = ("failures", "proface_count", "antiface_count")

    def __init__(self, failures, proface_count=None, antiface_count=None):
        self.failures = tuple(failures)
        self.proface_count = proface_count
        self.antiface_count = antiface_count

    @property
    def ok(self):
        return not self.failures

    def summary(self):
        if self.ok:
            return (
                f"ok: {self.proface_count} profaces, "
                f"{self.antiface_count} antifaces"
            )
        lines = [f"{check}: {detail}" for check, detail in self.failures]
        return "FAILED\n" + "\n".join(lines)

    def __repr__(self):
        return f"VerificationReport(ok={self.ok}, failures={len(self.failures)})"


def verify_embedding(embedding, decomposition=None):
    """Check structural validity, face coverage, proface identity, and parity."""
    failures = []
    digraph = embedding.digraph
    for v, rot in enumerate(embedding.rotations):
        if tuple(sorted(rot)) != digraph.incident_half_arcs(v):
            failures.append(
                ("rotation-structure", f"vertex {v} rotation is not a permutation")
            )
    bad = embedding.alternation_failure()
    if bad is not None:
        failures.append(("alternation", f"vertex {bad} rotation does not alternate"))
    if failures:
        return VerificationReport(failures)

    profaces, antifaces = trace_faces(embedding)
    for color, faces in (("pro", profaces), ("anti", antifaces)):
        covered = []
        for f in faces:
            covered.extend(f.walk)
        if sorted(covered) != [2 * a for a in range(digraph.m)]:
            failures.append(
                ("arc-coverage", f"{color}faces do not cover each arc exactly once")
            )

    if decomposition is not None:
        traced = frozenset(f.arcs() for f in profaces)
        wanted = decomposition.canonical_set()
        if traced != wanted:
            extra = sorted(traced - wanted)
            failures.append(
                ("profaces-match", f"profaces differ from the given circuits, e.g. {extra[:2]}")
            )

    expected_parity = (digraph.n + digraph.m + len(profaces)) % 2
    if len(antifaces) % 2 != expected_parity:
        failures.append(
            (
                "parity",
                f"{len(antifaces)} antifaces has wrong parity for "
                f"n={digraph.n}, m={digraph.m}, profaces={len(profaces)}",
            )
        )

    if digraph.is_connected():
        gamma = 2 - (digraph.n - digraph.m + len(profaces) + len(antifaces))
        if gamma % 2 != 0:
            failures.append(("genus-integrality", f"euler genus {gamma} is odd"))

    return VerificationReport(failures, len(profaces), len(antifaces))
