"""Smoke test for the `coalition` extension module.

Build and install it first:  pip install --no-build-isolation -e crates/python
"""

import coalition
from coalition import Graph


def main():
    p5 = Graph.named("P5")
    r = p5.coalition_number()
    assert r.value == 4, r
    assert p5.validate(r.witness).valid
    assert p5.coalition_number(method="enumerate").witness == r.witness

    for n, c in [(7, 5), (8, 6)]:
        assert Graph.named(f"C{n}").coalition_number().value == c

    bull = Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])
    assert bull.coalition_number().value == 4
    assert Graph.from_graph6(bull.graph6()) == bull

    p8 = Graph.named("P8")
    part = [[0, 3], [1, 5, 7], [2], [4], [6]]
    assert p8.validate(part)
    assert p8.coalition_graph(part).classify() == "S12"

    v = Graph.named("P5").validate([[0], [1], [2], [3], [4]])
    assert not v and "orphan" in v.blocks

    cg = Graph.named("P4").coalition_graph([[0], [1], [2], [3]])
    assert cg.classify() == "C4"

    census = coalition.census_path(6)
    assert census.nc == 10 and census.outside == 0
    assert census.partitions_scanned == coalition.bell(6) == 203

    assert coalition.verify_constructions(12) == []
    failures = coalition.verify_constructions(13)
    assert [(name, k) for name, k, _ in failures] == [("two-k2", 13)]

    try:
        p8.validate([[0, 1], [1, 2]])
    except ValueError:
        pass
    else:
        raise AssertionError("overlapping blocks accepted")

    try:
        Graph.named("C12").coalition_number(node_limit=1)
    except TimeoutError:
        pass
    else:
        raise AssertionError("node limit ignored")

    print("smoke test passed")


if __name__ == "__main__":
    main()
