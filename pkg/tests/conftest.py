"""Shared fixtures and helpers for the test suite."""

import random

import pytest

from knotforge.diagram import PDDiagram
from knotforge.family import load_table


@pytest.fixture(scope="session")
def table():
    return load_table()


def is_planar(d: PDDiagram) -> bool:
    """Whether the 4-valent diagram graph embeds in the plane.

    Counts faces of the rotation system given by the CCW slot order at each
    crossing and checks the Euler formula V - E + F = 1 + C, where C is the
    number of connected components of the underlying graph.
    """
    n = d.n_crossings
    if n == 0:
        return True
    ends: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(d.crossings):
        for k, e in enumerate(x):
            ends.setdefault(e, []).append((i, k))

    def other(i, k):
        occ = ends[d.crossings[i][k]]
        return occ[1] if occ[0] == (i, k) else occ[0]

    faces, seen = 0, set()
    for start in ((i, k) for i in range(n) for k in range(4)):
        if start in seen:
            continue
        faces += 1
        cur = start
        while True:
            seen.add(cur)
            i, k = cur
            cur = other(i, (k + 1) % 4)
            if cur == start:
                break

    # connected components of the graph (crossings joined by shared edges)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for occ in ends.values():
        (i, _), (j, _) = occ
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[rj] = ri
    comps = len({find(i) for i in range(n)})
    # V - E + F = 1 + C with V = n and E = 2n
    return -n + faces == 1 + comps


_SEED_CODES = (
    "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",                      # trefoil
    "X(4,1,3,2) X(2,3,1,4)",                                  # hopf
    "X(1,4,2,5) X(3,8,4,9) X(5,10,6,1) X(9,6,10,7) X(7,2,8,3)",  # 5_2
    "X(1,1,2,2)",                                             # curl
)


def random_planar_diagrams(seed: int, count: int, max_crossings: int):
    """Deterministic stream of valid planar diagrams built from table seeds.

    Applies random crossing switches (planarity-preserving) and random full
    twist insertions kept only when the result stays planar and within the
    crossing bound.
    """
    from knotforge.diagram import parse_pd

    rng = random.Random(seed)
    seeds = [parse_pd(code) for code in _SEED_CODES]
    out = []
    while len(out) < count:
        d = rng.choice(seeds)
        for _ in range(rng.randrange(4)):
            op = rng.randrange(3)
            if op == 0 and d.n_crossings:
                d = d.switch_crossing(rng.randrange(d.n_crossings))
            elif op == 1 and d.n_crossings:
                n_edges = 2 * d.n_crossings
                x = rng.randrange(1, n_edges + 1)
                y = rng.randrange(1, n_edges + 1)
                if x == y:
                    continue
                cand = d.insert_full_twists((x, y), rng.choice((1, -1)))
                if cand.n_crossings <= max_crossings and is_planar(cand):
                    d = cand
            else:
                d = PDDiagram(d.crossings, d.free_loops + rng.randrange(2))
        if d.n_crossings <= max_crossings and is_planar(d):
            out.append(d)
    return out
