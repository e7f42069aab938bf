"""Embed a Steiner triple system so its triangles bound the faces.

Orienting each triple of a Steiner system as a directed 3-cycle covers
every arc of the complete digraph exactly once, so the triangle family is
a circuit decomposition.  Reducing leaves a single leftover face, and that
face turns out to walk every arc once: an euler circuit materializes as
the boundary of the one antiface.
"""

from eulergenus import (
    euler_genus,
    gen_sts,
    reduce_to_upper_embedding,
    steiner_triple_system,
    verify_embedding,
)


def show(n):
    triples = steiner_triple_system(n)
    print(f"triple system on {n} points, {len(triples)} triples")
    print(f"  first few: {triples[:4]}")

    digraph, decomposition = gen_sts(n)
    embedding, _ = reduce_to_upper_embedding(digraph, decomposition)
    report = verify_embedding(embedding, decomposition)
    assert report.ok, report.summary()

    (antiface,) = embedding.antifaces
    arcs = antiface.arcs()
    print(f"  {len(embedding.profaces)} triangular profaces, one antiface")
    print(f"  the antiface covers {len(arcs)} arcs "
          f"({'all of them, each once' if sorted(arcs) == list(range(digraph.m)) else 'a proper subset'})")

    vertices = [digraph.tail(a) for a in arcs]
    print(f"  as a vertex tour: {' '.join(map(str, vertices[:12]))} ...")
    print(f"  genus = {euler_genus(embedding)}")
    print()


def main():
    for n in (7, 9, 13):
        show(n)


if __name__ == "__main__":
    main()
