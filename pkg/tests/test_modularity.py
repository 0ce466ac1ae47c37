import numpy as np
import pytest

import latshell as ls
from latshell.modularity import (
    is_left_modular_direct,
    is_left_modular_in_interval,
    is_semimodular_classic,
)
from oracles import sample_lattices


def test_pentagon_short_side_not_left_modular(n5):
    # b (id 2) is the short side; witness must be the pair (a, c) = (1, 3)
    r = ls.is_left_modular(n5, 2)
    assert not r.is_left_modular and not r.is_modular
    assert r.witness == (1, 3)
    # the other three proper elements are left-modular
    for m in (0, 1, 3, 4):
        assert ls.is_left_modular(n5, m).is_left_modular


def test_modular_lattice_all_left_modular(b3):
    for m in range(b3.n):
        rep = ls.is_left_modular(b3, m)
        assert rep.is_left_modular and rep.is_modular and rep.witness is None


def test_ngon_face_lattice_has_no_proper_left_modular():
    L = ls.ngon_face_lattice(4)
    for m in range(L.n):
        expected = m in (L.bottom, L.top)
        assert ls.is_left_modular(L, m).is_left_modular == expected


def test_lemma_pentagon_form_matches_direct_definition():
    for L in sample_lattices(101, 150):
        mask = ls.left_modular_mask(L)
        for m in range(L.n):
            assert bool(mask[m]) == is_left_modular_direct(L, m)


def test_coatom_criterion(n5, b3, pi4):
    # the one-singleton coatoms of a partition lattice
    for i, part in enumerate(pi4.decode):
        if len(part.blocks) == 2 and min(len(b) for b in part.blocks) == 1:
            assert ls.is_left_modular_coatom(pi4, i)
    assert not ls.is_left_modular_coatom(n5, 2)
    for c in b3.coatoms:
        assert ls.is_left_modular_coatom(b3, c)
    with pytest.raises(ls.NotACoatom):
        ls.is_left_modular_coatom(b3, 1)


def test_coatom_criterion_equals_left_modularity():
    for L in sample_lattices(103, 200):
        mask = ls.left_modular_mask(L)
        for c in L.coatoms:
            assert ls.is_left_modular_coatom(L, c) == bool(mask[c])


def test_semimodular(pi4, n5, b3):
    assert ls.is_semimodular(pi4)
    assert not ls.is_semimodular(n5)
    assert ls.is_semimodular(b3)
    for L in sample_lattices(105, 150):
        assert ls.is_semimodular(L) == is_semimodular_classic(L)


def test_geometric(n5):
    assert ls.is_geometric(ls.partition_lattice(5))
    assert not ls.is_geometric(n5)
    on5 = ls.order_congruence_lattice(n5.poset)
    assert ls.is_comodernistic(on5)
    assert not ls.is_geometric(on5)
    assert ls.find_m_chain(on5) is None  # not supersolvable either


def test_find_m_chain(b3, fig1):
    mc = ls.find_m_chain(b3)
    assert mc is not None and len(mc.elements) == 4
    # the atom {2} (id 2) is left-modular in fig1 and an M-chain passes it
    assert ls.is_left_modular(fig1, 2).is_left_modular
    mc1 = ls.find_m_chain(fig1)
    assert mc1 is not None and 2 in mc1.elements
    assert ls.find_m_chain(ls.order_congruence_lattice(ls.pentagon().poset)) is None


def test_find_sub_m_chain(fig1, b3):
    smc = ls.find_sub_m_chain(fig1)
    assert smc is not None
    assert smc.elements == (0, 1, 3, 7)
    # the chain is sub-M but not an M-chain: {1} is not left-modular in fig1
    assert not ls.is_left_modular(fig1, 1).is_left_modular
    assert is_left_modular_in_interval(fig1, 0, 3, 1)
    assert ls.find_sub_m_chain(ls.ngon_face_lattice(4)) is None
    assert ls.find_sub_m_chain(b3) is not None


def test_fig1_m2_modular_m1_not(fig1):
    # with ids as subsets: m1 = {1} = 1, m2 = {1,2} = 3
    assert ls.is_modular_element(fig1, 3)
    assert not ls.is_modular_element(fig1, 1)


def test_comodernistic_and_modernistic(n5):
    assert ls.is_comodernistic(ls.k_equal_lattice(5, 3))
    assert ls.is_comodernistic(ls.k_equal_lattice(6, 3))
    L4 = ls.ngon_face_lattice(4)
    assert not ls.is_comodernistic(L4) and not ls.is_modernistic(L4)
    L5 = ls.ngon_face_lattice(5)
    assert not ls.is_comodernistic(L5) and not ls.is_modernistic(L5)
    assert ls.is_comodernistic(n5)
    # triangle face lattice is modular, so both hold
    L3 = ls.ngon_face_lattice(3)
    assert ls.is_modernistic(L3) and ls.is_comodernistic(L3)


def test_modernistic_is_dual_comodernistic():
    for L in sample_lattices(107, 120):
        assert ls.is_modernistic(L) == ls.is_comodernistic(L.dual())
        assert ls.is_comodernistic(L) == ls.is_modernistic(L.dual())


def test_semimodular_implies_modernistic():
    for L in sample_lattices(109, 150):
        if ls.is_semimodular(L):
            assert ls.is_modernistic(L)


def test_left_modular_lattices_are_comodernistic_both_ways():
    for L in sample_lattices(111, 120):
        if ls.find_m_chain(L) is not None:
            assert ls.is_comodernistic(L)
            assert ls.is_comodernistic(L.dual())
            assert ls.is_modernistic(L)


def test_geometric_sub_m_chains_are_m_chains():
    for L in [ls.partition_lattice(4), ls.partition_lattice(5),
              ls.boolean_lattice(4)]:
        assert ls.is_geometric(L)
        smc = ls.find_sub_m_chain(L)
        mask = ls.left_modular_mask(L)
        assert all(mask[m] for m in smc.elements)


def test_left_modular_coatom_is_modular(n5, fig1):
    assert ls.left_modular_maximal_is_modular_check(n5)
    assert ls.left_modular_maximal_is_modular_check(fig1)
    for L in sample_lattices(113, 200):
        assert ls.left_modular_maximal_is_modular_check(L)


def test_projection_property():
    # for a left-modular coatom m and x < y: x v (m ^ y) is y or covered by y
    for L in sample_lattices(115, 120):
        mask = ls.left_modular_mask(L)
        covb = L.cover_matrix
        for m in L.coatoms:
            if not mask[m]:
                continue
            for x in range(L.n):
                for y in np.flatnonzero(L.strict[x]):
                    u = L.join[x, L.meet[m, y]]
                    assert u == y or covb[u, y]


def test_schmidt_condition3(b3):
    assert ls.schmidt_condition3(b3)
    assert not ls.schmidt_condition3(ls.ngon_face_lattice(4))
    for L in sample_lattices(117, 80):
        if ls.find_sub_m_chain(L) is not None:
            assert ls.schmidt_condition3(L)
