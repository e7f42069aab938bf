"""Antiface surgeries that leave every proface untouched.

All four operations rewrite rotations only at whole-block granularity: a
block is one (outgoing, incoming) pair of a rotation, and proface pairing
lives inside blocks while antiface pairing crosses block boundaries.
Permuting blocks at a vertex therefore rewires antifaces and nothing else.
Every operation re-traces the result and asserts its own postconditions.
"""

from fractions import Fraction

from .digraph import density_profile
from .embedding import FaceWalk
from .errors import EmbeddingError, HypothesisError, LocalIrreducibilityError


class SurgeryResult:
    """Outcome of one surgery: the new embedding plus face bookkeeping.

    ``face_map`` sends each input antiface key to a face of the new
    embedding: merges send all inputs to the merged face; splits send the
    split face to its kept part and the partner to the merged part.
    """

    __slots__ = ("embedding", "face_map", "merged", "kept", "kept_part", "changed", "branch")

    def __init__(self, embedding, face_map, merged=None, kept=None,
                 kept_part=None, changed=True, branch=None):
        self.embedding = embedding
        self.face_map = face_map
        self.merged = merged
        self.kept = kept
        self.kept_part = kept_part
        self.changed = changed
        self.branch = branch

    def __repr__(self):
        return f"SurgeryResult(changed={self.changed}, branch={self.branch})"


def _find_antiface(embedding, face):
    for f in embedding.antifaces:
        if f.key == face.key:
            return f
    raise EmbeddingError(f"face with walk {face.key} is not an antiface of this embedding")


def _cyclic_slice(seq, i, j):
    """Elements from index i through index j inclusive, wrapping."""
    n = len(seq)
    i %= n
    j %= n
    if i <= j:
        return tuple(seq[i:j + 1])
    return tuple(seq[i:]) + tuple(seq[:j + 1])


def _rewire_three(embedding, v, h1, h2, h3):
    """Advance the antiface departures after three incoming half-arcs at v.

    With the blocks of the three half-arcs at positions a < b < c, the block
    order is rewritten to B_a, B_(b+1..c), B_(a+1..b), B_(c+1..a-1).  The
    effect is a 3-cycle on the antiface pairing: each chosen incoming now
    continues to the old continuation of the clockwise-next chosen one.  All
    blocks stay intact, so profaces are untouched.
    """
    blocks = list(embedding.blocks_at(v))
    pos = {h: i for i, (_, h) in enumerate(blocks)}
    for h in (h1, h2, h3):
        if h not in pos:
            raise EmbeddingError(f"half-arc {h} is not incoming at vertex {v}")
    if len({h1, h2, h3}) != 3:
        raise EmbeddingError("the three incoming half-arcs must be distinct")
    a, b, c = sorted((pos[h1], pos[h2], pos[h3]))
    reordered = (
        [blocks[a]]
        + blocks[b + 1:c + 1]
        + blocks[a + 1:b + 1]
        + blocks[c + 1:]
        + blocks[:a]
    )
    assert len(reordered) == len(blocks)
    rotation = []
    for g, h in reordered:
        rotation.append(g)
        rotation.append(h)
    return embedding.with_rotation(v, rotation)


def _arrival_at(face, v):
    """Lowest incoming half-arc on which the face reaches v."""
    arrivals = [face.walk[j] | 1 for j in face.corner_positions(v)]
    if not arrivals:
        raise EmbeddingError(f"face does not visit vertex {v}")
    return min(arrivals)


def merge_three_at_vertex(embedding, v, face_a, face_b, face_c):
    """Merge three antifaces meeting at v into one; count drops by two."""
    a = _find_antiface(embedding, face_a)
    b = _find_antiface(embedding, face_b)
    c = _find_antiface(embedding, face_c)
    keys = {a.key, b.key, c.key}
    if len(keys) != 3:
        raise EmbeddingError("the three antifaces must be distinct")
    chosen = sorted(_arrival_at(f, v) for f in (a, b, c))
    new_embedding = _rewire_three(embedding, v, *chosen)

    old_keys = {f.key for f in embedding.antifaces}
    new_faces = {f.key: f for f in new_embedding.antifaces}
    assert {f.key for f in new_embedding.profaces} == {f.key for f in embedding.profaces}
    created = set(new_faces) - old_keys
    assert created and set(new_faces) == (old_keys - keys) | created
    assert len(created) == 1
    merged = new_faces[created.pop()]
    assert sorted(merged.arcs()) == sorted(a.arcs() + b.arcs() + c.arcs())
    assert len(new_faces) == len(old_keys) - 2

    face_map = {a.key: merged, b.key: merged, c.key: merged}
    return SurgeryResult(new_embedding, face_map, merged=merged)


def split_swap(embedding, v, face_a, cut1, cut2, face_b):
    """Split antiface A at two of its corners at v and merge one part into B.

    ``cut1`` and ``cut2`` are distinct corner positions of A lying at v,
    splitting A into part 1 (corner cut1 to corner cut2) and part 2 (corner
    cut2 to corner cut1).  Which part merges with B is forced by the
    clockwise rotation at v and reported, never assumed: ``kept_part`` names
    the part that stayed a face of its own.  The antiface count is unchanged.
    """
    a = _find_antiface(embedding, face_a)
    b = _find_antiface(embedding, face_b)
    if a.key == b.key:
        raise EmbeddingError("split and partner antifaces must be distinct")
    size = len(a.walk)
    if not (0 <= cut1 < size and 0 <= cut2 < size) or cut1 == cut2:
        raise EmbeddingError("cuts must be two distinct corner positions of the split face")
    if a.corners[cut1] != v or a.corners[cut2] != v:
        raise EmbeddingError(f"both cut corners must lie at vertex {v}")
    if not b.visits(v):
        raise EmbeddingError(f"partner face does not visit vertex {v}")

    in_a1 = a.walk[cut1] | 1
    in_a2 = a.walk[cut2] | 1
    in_b = _arrival_at(b, v)
    part1 = _cyclic_slice(a.walk, cut1 + 1, cut2)
    part2 = _cyclic_slice(a.walk, cut2 + 1, cut1)
    anchor = b.walk.index(in_b & ~1)
    b_from_corner = b.walk[anchor + 1:] + b.walk[:anchor + 1]

    # the part whose closing corner the rotation reaches first (clockwise
    # from in_a1) is the part that absorbs B
    blocks = embedding.blocks_at(v)
    pos = {h: i for i, (_, h) in enumerate(blocks)}
    d = len(blocks)
    merged_part = None
    for step in range(1, d):
        idx = (pos[in_a1] + step) % d
        if blocks[idx][1] == in_a2:
            merged_part = 1
            break
        if blocks[idx][1] == in_b:
            merged_part = 2
            break
    assert merged_part is not None
    if merged_part == 1:
        merged_walk = part1 + b_from_corner
        kept_walk = part2
    else:
        merged_walk = part2 + b_from_corner
        kept_walk = part1
    kept_part = 3 - merged_part

    new_embedding = _rewire_three(embedding, v, in_a1, in_a2, in_b)
    new_faces = {f.key: f for f in new_embedding.antifaces}
    assert {f.key for f in new_embedding.profaces} == {f.key for f in embedding.profaces}
    merged_key = FaceWalk(embedding.digraph, merged_walk, "anti").key
    kept_key = FaceWalk(embedding.digraph, kept_walk, "anti").key
    old_keys = {f.key for f in embedding.antifaces}
    assert set(new_faces) == (old_keys - {a.key, b.key}) | {merged_key, kept_key}
    assert len(new_faces) == len(old_keys)

    merged = new_faces[merged_key]
    kept = new_faces[kept_key]
    face_map = {a.key: kept, b.key: merged}
    return SurgeryResult(new_embedding, face_map, merged=merged, kept=kept,
                         kept_part=kept_part)


def merge_interlaced(embedding, face_a, face_b, face_c, x, y):
    """Merge A, B, C into one antiface given x, y interlaced on A.

    Needs four corners of A in cyclic order x, y, x, y with x also on B and
    y also on C.  A is split at the two x corners, one part swallows B, and
    the three faces now at y are merged.  Net antiface count drops by two.
    """
    a = _find_antiface(embedding, face_a)
    b = _find_antiface(embedding, face_b)
    c = _find_antiface(embedding, face_c)
    if len({a.key, b.key, c.key}) != 3:
        raise EmbeddingError("the three antifaces must be distinct")
    if x == y:
        raise HypothesisError("interlacing needs two distinct vertices")
    if not b.visits(x):
        raise HypothesisError(f"vertex {x} must lie on the second face")
    if not c.visits(y):
        raise HypothesisError(f"vertex {y} must lie on the third face")
    positions = a.alternation_positions(x, y)
    if positions is None:
        raise HypothesisError(
            f"vertices {x} and {y} do not interlace on the face to split"
        )
    p1, _, p3, _ = positions

    first = split_swap(embedding, x, a, p1, p3, b)
    piece1 = first.merged
    piece2 = first.kept
    assert piece1.visits(y) and piece2.visits(y)
    c_now = _find_antiface(first.embedding, c)
    second = merge_three_at_vertex(first.embedding, y, piece1, piece2, c_now)

    merged = second.merged
    assert merged.visits(x) and merged.visits(y)
    assert len(second.embedding.antifaces) == len(embedding.antifaces) - 2
    face_map = {a.key: merged, b.key: merged, c.key: merged}
    return SurgeryResult(second.embedding, face_map, merged=merged)


class DivisionResult:
    """Feasible black pair found by division_search."""

    __slots__ = ("first", "second", "colored_between")

    def __init__(self, first, second, colored_between):
        self.first = first
        self.second = second
        self.colored_between = colored_between

    def __repr__(self):
        return (
            f"DivisionResult(first={self.first}, second={self.second}, "
            f"q={self.colored_between})"
        )


BLACK, WHITE, RED = "black", "white", "red"


def division_search(points, m, p):
    """Find black points b_i, b_j with p - m < q < p + m colored points between.

    ``points`` is the cyclic sequence of colors ("black", "white", "red");
    q counts white and red points on the closed cyclic segment from b_i
    forward to b_j.  Hypotheses: every closed interval between consecutive
    black points carries at most m whites, whites outnumber reds, and
    m <= p <= l - m where l is the total number of whites and reds.  Each
    violated hypothesis is reported.  Under the hypotheses a feasible pair
    always exists; the scan returns the lexicographically first one as
    indices into ``points``.
    """
    points = list(points)
    for label in points:
        if label not in (BLACK, WHITE, RED):
            raise HypothesisError(f"unknown color {label!r}")
    if not (isinstance(m, int) and m >= 1):
        raise HypothesisError(f"m must be a positive integer, got {m!r}")
    p = Fraction(p)
    blacks = [i for i, label in enumerate(points) if label == BLACK]
    n_white = sum(1 for label in points if label == WHITE)
    n_red = sum(1 for label in points if label == RED)
    total = n_white + n_red

    violations = []
    if len(blacks) == 0:
        violations.append("no black points, so no black interval bounds the whites")
    else:
        for i, start in enumerate(blacks):
            end = blacks[(i + 1) % len(blacks)]
            segment = _cyclic_slice(points, start, end) if len(blacks) > 1 else points
            whites_inside = sum(1 for label in segment if label == WHITE)
            if whites_inside > m:
                violations.append(
                    f"interval from position {start} to {end} holds "
                    f"{whites_inside} whites > m = {m}"
                )
                break
    if n_white <= n_red:
        violations.append(f"{n_white} whites do not outnumber {n_red} reds")
    if not (m <= p <= total - m):
        violations.append(f"p = {p} outside [{m}, {total - m}]")
    if violations:
        raise HypothesisError("; ".join(violations))

    colored_prefix = [0]
    for label in points:
        colored_prefix.append(colored_prefix[-1] + (label != BLACK))

    def colored_between(i, j):
        if i <= j:
            return colored_prefix[j + 1] - colored_prefix[i]
        return colored_prefix[-1] - colored_prefix[i] + colored_prefix[j + 1]

    for i in blacks:
        for j in blacks:
            if i == j:
                continue
            q = colored_between(i, j)
            if p - m < q < p + m:
                return DivisionResult(i, j, q)
    raise RuntimeError("no feasible black pair despite valid hypotheses")


def blow_up(embedding, face_a, face_b, x):
    """Split a big antiface A at a shared vertex x and rebalance with B.

    Both resulting faces span at least min((|V(A)| - 2) / 2, (n - k - 1) / 2)
    vertices and keep x.  When A's arc neighborhood of x is small and B is
    already big enough the embedding is returned unchanged (branch "no-op").
    The antiface count never changes.
    """
    digraph = embedding.digraph
    profile = density_profile(digraph)
    n, k = profile.n, profile.k
    _require_locally_irreducible(embedding)
    a = _find_antiface(embedding, face_a)
    b = _find_antiface(embedding, face_b)
    if a.key == b.key:
        raise HypothesisError("the two antifaces must be distinct")
    if not (a.visits(x) and b.visits(x)):
        raise HypothesisError(f"vertex {x} must lie on both antifaces")
    a_size = len(a.vertex_set())
    if a_size < 5:
        raise HypothesisError(f"face to split spans {a_size} < 5 vertices")
    if n < k + 3:
        raise HypothesisError(f"order {n} below k + 3 = {k + 3}")

    corners = a.corners
    t = len(corners)
    black_positions = [j for j in range(t) if corners[j] == x]

    whites = {}  # arc neighbor of x on A -> corner position at the first joining arc
    for j in range(t):
        c1 = corners[j]
        c2 = corners[(j + 1) % t]
        if c1 == x and c2 != x and c2 not in whites:
            whites[c2] = (j + 1) % t
        elif c2 == x and c1 != x and c1 not in whites:
            whites[c1] = j
    arc_neighbors = set(whites)
    rest = a.vertex_set() - arc_neighbors - {x}
    reds = {}
    for j in range(t):
        c = corners[j]
        if c in rest and c not in reds:
            reds[c] = j

    if len(arc_neighbors) > len(rest):
        branch = "y-majority-split"
        red_positions = sorted(reds.values())
        target = Fraction(a_size - 1, 2)
    else:
        if 2 * len(b.vertex_set()) >= n - k - 1:
            return SurgeryResult(embedding, {a.key: a, b.key: b}, changed=False,
                                 branch="no-op")
        branch = "y-minority-split"
        assert len(arc_neighbors) >= 3
        red_positions = sorted(reds.values())[:len(arc_neighbors) - 1]
        target = Fraction(2 * len(arc_neighbors) - 1, 2)

    assert len(black_positions) >= 2
    white_positions = set(whites.values())
    red_kept = set(red_positions)
    colored = sorted(set(black_positions) | white_positions | red_kept)
    labels = []
    for j in colored:
        if corners[j] == x:
            labels.append(BLACK)
        elif j in white_positions:
            labels.append(WHITE)
        else:
            labels.append(RED)
    found = division_search(labels, 2, target)
    cut1 = colored[found.first]
    cut2 = colored[found.second]

    result = split_swap(embedding, x, a, cut1, cut2, b)
    result.branch = branch
    lower = min(a_size - 2, n - k - 1)
    for f in (result.merged, result.kept):
        assert 2 * len(f.vertex_set()) >= lower
        assert f.visits(x)
    assert result.merged.vertex_set() | result.kept.vertex_set() == \
        a.vertex_set() | b.vertex_set()
    return result


def _require_locally_irreducible(embedding):
    on_faces = {}
    for f in embedding.antifaces:
        for v in f.vertex_set():
            on_faces.setdefault(v, []).append(f)
    for v in sorted(on_faces):
        if len(on_faces[v]) > 2:
            raise LocalIrreducibilityError(v, [f.key for f in on_faces[v]])
