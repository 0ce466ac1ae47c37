import numpy as np
import pytest

import latshell as ls
from latshell.topology import (
    SimplicialComplex,
    euler_by_inclusion_exclusion,
    shelling_order_by_words,
)
from oracles import sample_lattices


def test_order_complex_b2():
    K = ls.order_complex(ls.boolean_lattice(2).poset)
    assert K.vertices == 2
    assert K.facets == ((0,), (1,))


def test_order_complex_b3_is_hexagon(b3):
    K = ls.order_complex(b3.poset)
    assert K.vertices == 6
    assert all(len(f) == 2 for f in K.facets) and len(K.facets) == 6
    # a circle: chi~ = -1 + 6 - 6 = -1 = mu(B3)
    assert ls.euler_characteristic(K) == -1 == ls.mobius_brute(b3)


def test_order_complex_pentagon(n5):
    # proper part {a, b, c}: one edge a < c plus the isolated vertex b
    K = ls.order_complex(n5.poset)
    assert K.vertices == 3
    assert K.facets == ((0, 2), (1,))


def test_order_complex_degenerate():
    two = ls.chain_lattice(2)
    K = ls.order_complex(two.poset)
    assert K.facets == ((),)
    assert ls.euler_characteristic(K) == -1 == ls.mobius_brute(two)
    with pytest.raises(ls.NotBounded):
        ls.order_complex(ls.chain_lattice(1).poset)
    with pytest.raises(ls.NotBounded):
        ls.order_complex(ls.antichain_poset(2))


def test_mobius_values(pi4):
    for n in range(1, 7):
        assert ls.mobius_brute(ls.boolean_lattice(n)) == (-1) ** n
    assert ls.mobius_brute(pi4) == -6
    assert ls.mobius_brute(ls.k_equal_lattice(4, 3)) == 3
    with pytest.raises(ls.NotComparable):
        ls.mobius_brute(ls.boolean_lattice(2).poset, 1, 2)


def test_euler_equals_mobius_randomly():
    for L in sample_lattices(301, 60):
        if L.n < 2:
            continue
        K = ls.order_complex(L.poset)
        assert ls.euler_characteristic(K) == ls.mobius_brute(L)


def test_euler_two_paths_agree():
    for L in sample_lattices(303, 40):
        K = ls.order_complex(L.poset)
        if len(K.facets) > 18:
            continue
        assert ls.euler_characteristic(K) == euler_by_inclusion_exclusion(K)


def test_euler_empty_and_points():
    assert ls.euler_characteristic(SimplicialComplex(0, ((),))) == -1
    assert ls.euler_characteristic(SimplicialComplex(2, ((0,), (1,)))) == 1


def test_is_shelling_basics():
    single = SimplicialComplex(3, ((0, 1, 2),))
    assert ls.is_shelling(single, [0])[0]
    hexagon = SimplicialComplex.from_facets(
        6, [(i, (i + 1) % 6) for i in range(6)])
    order = list(range(6))
    ok, _ = ls.is_shelling(hexagon, order)
    assert ok
    two_edges = SimplicialComplex(4, ((0, 1), (2, 3)))
    for order in ([0, 1], [1, 0]):
        ok, cert = ls.is_shelling(two_edges, order)
        assert not ok and cert is not None
    with pytest.raises(ls.BadPermutation):
        ls.is_shelling(two_edges, [0, 0])


def test_is_shelling_order_sensitivity():
    # a path of 3 edges shells in order but not from both ends first
    path = SimplicialComplex.from_facets(4, [(0, 1), (1, 2), (2, 3)])
    assert ls.is_shelling(path, [0, 1, 2])[0]
    assert not ls.is_shelling(path, [0, 2, 1])[0]


def test_verify_lex_shelling_small(b3, n5, fig1, pi4):
    for L in (b3, n5, fig1, pi4, ls.k_equal_lattice(5, 3)):
        lab = ls.comodernistic_labeling(L)
        ok, cert = ls.verify_lex_shelling(L, lab)
        assert ok, cert


def test_verify_lex_shelling_ss(b3):
    L = ls.boolean_lattice(4)
    chain = [0]
    for i in range(4):
        chain.append(chain[-1] | (1 << i))
    ss = ls.ss_el_labeling(L, chain)
    ok, _ = ls.verify_lex_shelling(L, ss)
    assert ok


def test_shelling_order_is_word_sorted(pi4):
    lab = ls.comodernistic_labeling(pi4)
    K, order = shelling_order_by_words(pi4, lab)
    assert sorted(order) == list(range(len(K.facets)))


def test_homotopy_summary(pi4):
    lab4 = ls.comodernistic_labeling(pi4)
    assert ls.homotopy_summary(pi4, lab4) == {1: 6}
    # O(chain(4)) is a height-3 cube: one 1-sphere
    oc = ls.order_congruence_lattice(ls.chain_poset(4))
    assert ls.homotopy_summary(oc, ls.comodernistic_labeling(oc)) == {1: 1}
    # V poset (two minimal, one top): two linear extensions, 0-spheres
    v = ls.Poset.from_covers(3, [(0, 2), (1, 2)])
    ov = ls.order_congruence_lattice(v)
    assert ls.homotopy_summary(ov, ls.comodernistic_labeling(ov)) == {0: 2}
    assert ls.count_linear_extensions(v) == 2
