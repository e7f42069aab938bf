"""Walk a rotational tournament from generation to a certified embedding.

Rotational tournaments are the densest eulerian digraphs there are: every
pair of vertices is joined by exactly one arc.  Taking an euler circuit as
the single proface, the reducer merges the leftover faces down to the
parity floor, and for orders small enough we can confirm optimality by
enumerating the entire state space.
"""

import os

from eulergenus import (
    CircuitDecomposition,
    certify_maximal,
    embedding_svg,
    euler_circuit,
    euler_genus,
    gen_rotational_tournament,
    reduce_to_upper_embedding,
    verify_embedding,
)


def tour(n):
    digraph = gen_rotational_tournament(n)
    decomposition = CircuitDecomposition(digraph, [euler_circuit(digraph)])
    embedding, trace = reduce_to_upper_embedding(digraph, decomposition)
    report = verify_embedding(embedding, decomposition)

    print(f"order {n}: {digraph.m} arcs, one proface spanning all of them")
    print(f"  reduction used {len(trace.steps)} steps: "
          f"{[step.case for step in trace.steps]}")
    print(f"  antifaces = {len(embedding.antifaces)}, "
          f"genus = {euler_genus(embedding)}")
    print(f"  verification: {report.summary()}")
    return digraph, decomposition, embedding


def main():
    for n in (7, 9, 11, 13):
        tour(n)
        print()

    # the 7-vertex case is small enough to check against every competitor
    digraph, decomposition, embedding = tour(7)
    cert = certify_maximal(embedding, digraph, decomposition)
    print(f"  exhaustive check over {cert.states} embeddings: "
          f"minimum antiface count = {cert.minimum}, "
          f"achieved = {cert.achieved}, optimal = {cert.passed}")

    out = os.path.join(os.path.dirname(__file__), "tournament7.svg")
    with open(out, "w") as fh:
        fh.write(embedding_svg(embedding))
    print(f"  picture written to {out}")


if __name__ == "__main__":
    main()
