"""Smoke test for the redei_py extension module.

Build and install it first, e.g. `pip install ./crates/py --no-build-isolation`
(needs maturin), then run `python python/smoke_test.py`.
"""

import redei_py as r


def main():
    d = r.Digraph(3, [(1, 1), (1, 3), (3, 2)])
    assert d.n == 3
    assert d.edges() == [(1, 1), (1, 3), (3, 2)]
    assert r.Digraph.parse(d.to_text()) == d

    p = {(3,): 1, (2, 1): 1, (1, 1, 1): 1}
    assert r.redei_berge(d) == p
    for route in r.applicable_routes(d):
        assert r.redei_berge(d, "p", route) == p, route
    assert r.redei_berge(d, "s") == {(3,): 3, (2, 1): 1, (1, 1, 1): 1}
    assert r.redei_berge(d, "mtilde") == {(3,): 3, (2, 1): 4, (1, 1, 1): 1}
    assert r.redei_berge(d.complement()) == {(3,): 1, (2, 1): -1, (1, 1, 1): 1}
    assert r.redei_berge_all_routes(d) == p
    assert r.schur_coefficient(d, [3]) == 3

    tree = r.Digraph(4, [(4, 3), (3, 2), (3, 1)])
    assert r.redei_berge(tree, "s", "acyclic-schur") == {(4,): 10, (3, 1): 4, (2, 2): -2, (2, 1, 1): 2}

    xi = r.chow_xi(d)
    assert xi[((1, 1, 1), ())] == 1
    assert sum(xi.values()) != 0

    assert r.ham(d) == 1 and r.ham_detper(d.complement()) == 3
    assert r.ham_cycles(r.Digraph(3, [(1, 2), (2, 3), (3, 1)])) == 1
    assert r.ham(r.random_tournament(9, seed=4)) % 2 == 1
    assert r.redei_berge(r.star_digraph([2, 1]), "h") == {(2, 1): 2}

    assert len(r.partitions(5)) == 7
    assert r.character([2, 1], [1, 1, 1]) == 2
    assert r.permanent([[1, 1], [1, 1]]) == 2
    assert r.determinant([[2, 1], [1, 1]]) == 1

    try:
        r.redei_berge(r.random_digraph(12, 0.5))
    except OverflowError:
        pass
    else:
        raise AssertionError("size guard did not fire")
    try:
        r.redei_berge(d, "nope")
    except ValueError:
        pass
    else:
        raise AssertionError("bad basis accepted")
    print("redei_py smoke test passed")


if __name__ == "__main__":
    main()
