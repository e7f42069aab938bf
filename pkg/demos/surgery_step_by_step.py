"""Watch the face surgeries act on one embedding at a time.

Fixing the profaces of an embedding still leaves freedom in the rotation
at each vertex, and different choices leave different numbers of leftover
faces.  This script picks a deliberately bad state, inspects how its
antifaces touch each other, and applies the basic moves by hand before
letting the reducer drive.
"""

from eulergenus import (
    BLACK,
    RED,
    WHITE,
    CircuitDecomposition,
    build_touch_graph,
    classify,
    division_search,
    euler_circuit,
    find_vertex_on_three_antifaces,
    gen_rotational_tournament,
    iter_relative_embeddings,
    merge_three_at_vertex,
    reduce_embedding,
    verify_embedding,
)


def pick_state(digraph, decomposition, antifaces):
    for embedding in iter_relative_embeddings(digraph, decomposition):
        if len(embedding.antifaces) == antifaces:
            return embedding
    raise LookupError(f"no state with {antifaces} antifaces")


def main():
    digraph = gen_rotational_tournament(7)
    decomposition = CircuitDecomposition(digraph, [euler_circuit(digraph)])

    worst = pick_state(digraph, decomposition, 5)
    print(f"picked a state with {len(worst.antifaces)} antifaces")
    for face in worst.antifaces:
        print(f"  antiface over vertices {sorted(face.vertex_set())}")

    hit = find_vertex_on_three_antifaces(worst)
    vertex, faces = hit
    print(f"\nvertex {vertex} lies on three antifaces at once,")
    print("so rethreading the rotation there merges them into one:")
    result = merge_three_at_vertex(worst, vertex, *faces)
    print(f"  {len(worst.antifaces)} -> {len(result.embedding.antifaces)} antifaces")
    assert verify_embedding(result.embedding, decomposition).ok

    print("\nhanding the remainder to the reducer:")
    final, trace = reduce_embedding(result.embedding, decomposition)
    for step in trace.steps:
        print(f"  case {step.case}: {step.operation} "
              f"{step.count_before} -> {step.count_after}")
    print(f"  final antiface count = {len(final.antifaces)}")

    # when no vertex lies on three antifaces, the case analysis starts from
    # how the faces touch; the touch graph names that structure
    stuck = None
    for embedding in iter_relative_embeddings(digraph, decomposition):
        if (len(embedding.antifaces) == 3
                and find_vertex_on_three_antifaces(embedding) is None):
            stuck = embedding
            break
    touch = build_touch_graph(stuck)
    shape = classify(touch)
    print(f"\na locally irreducible state: touch graph has "
          f"{len(touch.nodes)} nodes and {touch.edge_count()} edges, "
          f"star = {shape.is_star}")
    reduced, trace = reduce_embedding(stuck, decomposition)
    print(f"  the reducer still finishes: cases "
          f"{[step.case for step in trace.steps]}, "
          f"{len(reduced.antifaces)} antiface(s) left")

    # the division search underlying the wide-gap case, on its own
    points = [BLACK, WHITE, WHITE, BLACK, WHITE, WHITE, RED, RED, RED]
    found = division_search(points, 2, 3)
    print(f"\ndivision search on a 9-point cycle: blacks at positions "
          f"{found.first} and {found.second} enclose "
          f"{found.colored_between} colored points (target 3, slack 2)")


if __name__ == "__main__":
    main()
