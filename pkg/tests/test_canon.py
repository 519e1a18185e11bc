import random

import pytest
from hypothesis import given

from conftest import graphs, random_graph
from turanlab.canon import (automorphism_generators, canonical_form, canonical_form_bruteforce,
                            canonical_graph, is_isomorphic)
from turanlab.catalog import KNOWN_COUNTS, catalog, catalog_count
from turanlab.errors import CapabilityError
from turanlab.graph import (complete, complete_bipartite, cycle, empty, path, petersen, star,
                            turan_graph, wheel)


def _shuffled(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def test_examples():
    assert is_isomorphic(cycle(4), complete_bipartite(2, 2))
    assert not is_isomorphic(path(4), star(4))
    rng = random.Random(0)
    g = random_graph(rng, 10, 0.5)
    assert canonical_form(_shuffled(g, rng)) == canonical_form(_shuffled(g, rng))


def test_thousand_relabelings():
    rng = random.Random(2024)
    for i in range(1000):
        g = random_graph(rng, rng.randint(0, 12), rng.random())
        assert canonical_form(g) == canonical_form(_shuffled(g, rng)), i


def test_symmetric_graphs():
    for g in [empty(16), complete(16), petersen(), turan_graph(16, 4), wheel(15), cycle(16)]:
        rng = random.Random(g.n)
        assert canonical_form(g) == canonical_form(_shuffled(g, rng))


def test_canonical_graph_is_isomorphic_relabel():
    g = petersen()
    c = canonical_graph(g)
    assert c.edge_count == g.edge_count and sorted(c.degrees()) == sorted(g.degrees())
    assert canonical_graph(c) == c


def test_automorphisms_are_automorphisms():
    for g in [petersen(), wheel(7), turan_graph(9, 3)]:
        for gen in automorphism_generators(g):
            assert g.relabel(gen) == g


# The refinement search and the n! oracle pick different representatives, so
# they are compared on the isomorphism verdicts they induce.

@given(graphs(max_n=7), graphs(max_n=7))
def test_verdicts_match_permutation_oracle(g, h):
    same = canonical_form(g) == canonical_form(h)
    assert same == (g.n == h.n and canonical_form_bruteforce(g) == canonical_form_bruteforce(h))


def test_oracle_over_relabelled_catalog():
    rng = random.Random(5)
    for n in range(0, 7):
        fast, slow = set(), set()
        for g in catalog(n):
            h = _shuffled(g, rng)
            assert canonical_form(g) == canonical_form(h)
            assert canonical_form_bruteforce(g) == canonical_form_bruteforce(h)
            fast.add(canonical_form(h))
            slow.add(canonical_form_bruteforce(h))
        assert len(fast) == len(slow) == KNOWN_COUNTS[n]


def test_distinct_graphs_distinct_forms():
    # the catalogue is deduplicated by canonical key, so its size matching the
    # known counts means no two non-isomorphic graphs share a form
    for n in range(0, 8):
        assert catalog_count(n) == KNOWN_COUNTS[n]
        forms = {canonical_form(g) for g in catalog(n)}
        assert len(forms) == KNOWN_COUNTS[n]


def test_capability_limits():
    with pytest.raises(CapabilityError):
        canonical_form(empty(17))
    with pytest.raises(CapabilityError):
        canonical_form_bruteforce(empty(9))
    with pytest.raises(CapabilityError):
        catalog_count(9)
