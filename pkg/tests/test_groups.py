import numpy as np
import pytest

import latshell as ls
from latshell import groups as gr
from latshell.labeling import comodernistic_labeling, decreasing_chains, verify_cl
from latshell.topology import mobius_brute


@pytest.fixture(scope="module")
def stock():
    return gr.stock_groups()


def test_group_constructors(stock):
    assert gr.symmetric(3).order == 6
    assert gr.alternating(5).order == 60
    assert gr.cyclic(4).order == 4
    assert gr.dihedral(4).order == 8
    assert gr.quaternion8().order == 8
    assert gr.direct_product(gr.symmetric(3), gr.cyclic(2)).order == 12


def test_from_table_verifies():
    with pytest.raises(ls.NotAGroup):
        gr.Group.from_table([[0, 1], [1, 1]])
    z4 = gr.Group.from_table([[(i + j) % 4 for j in range(4)] for i in range(4)])
    assert z4.order == 4 and z4.identity == 0


def test_bad_permutation():
    with pytest.raises(ls.BadPermutation):
        gr.Group.from_permutations([(0, 0, 1)])
    with pytest.raises(ls.BadPermutation):
        gr.perm_from_cycles([[0, 1], [1, 2]], 3)


def test_subgroup_lattice_s3():
    s3 = gr.symmetric(3)
    lat = gr.subgroup_lattice(s3)
    assert lat.n == 6
    assert lat.height() == 2
    # height 2 makes it modular
    assert all(ls.is_left_modular(lat, m).is_left_modular for m in range(lat.n))
    assert ls.is_isomorphic(lat, gr.subgroup_lattice(gr.elementary_abelian(3)))


def test_subgroup_lattice_p_squared():
    for p in (2, 3):
        lat = gr.subgroup_lattice(gr.elementary_abelian(p))
        assert lat.height() == 2
        assert len(lat.atoms) == p + 1


def test_subgroup_count_a5():
    assert gr.subgroup_lattice(gr.alternating(5)).n == 59


def test_solvability(stock):
    assert gr.is_solvable(gr.symmetric(3))
    assert gr.is_solvable(gr.symmetric(4))
    assert not gr.is_solvable(gr.alternating(5))
    assert gr.is_solvable(gr.quaternion8())


def test_chief_series():
    s3 = gr.symmetric(3)
    assert [len(s) for s in gr.chief_series(s3)] == [1, 3, 6]
    s4 = gr.symmetric(4)
    assert [len(s) for s in gr.chief_series(s4)] == [1, 4, 12, 24]
    for h in gr.chief_series(s4):
        assert gr.is_normal(s4, h)


def test_normality():
    s3 = gr.symmetric(3)
    subs = gr.all_subgroups(s3)
    normals = [h for h in subs if gr.is_normal(s3, h)]
    assert sorted(len(h) for h in normals) == [1, 3, 6]
    with pytest.raises(ls.NotASubgroup):
        gr.is_normal(s3, {1})  # misses identity unless 1 is it


def test_normal_subgroups_are_modular_in_lattice(stock):
    for name in ("S3", "A4", "D4", "Q8", "S4", "D5"):
        g = stock[name]
        lat = gr.subgroup_lattice(g)
        pos = {s: i for i, s in enumerate(lat.decode)}
        for h in gr.normal_subgroups(g):
            assert ls.is_modular_element(lat, pos[h]), (name, sorted(h))


def test_iwasawa_graded_iff_supersolvable(stock):
    for name, g in stock.items():
        if g.order > 24 and name != "A5":
            continue
        lat = gr.subgroup_lattice(g)
        assert lat.is_graded() == gr.is_supersolvable_group(g), name


def test_dedekind_identity(stock):
    for name in ("S3", "D4", "Q8", "Z2^2", "Z12", "A4"):
        assert gr.dedekind_identity_check(stock[name]), name


def test_normal_permutes_with_everything():
    s4 = gr.symmetric(4)
    subs = gr.all_subgroups(s4)
    for n_ in gr.normal_subgroups(s4):
        for k in subs:
            assert gr.permutes(s4, n_, k)


def test_solvable_iff_comodernistic(stock):
    for name, g in stock.items():
        assert gr.solvable_iff_comodernistic_check(g), name


def test_complement_chains():
    s3 = gr.symmetric(3)
    chains = gr.complement_chains_to_chief_series(s3)
    assert len(chains) == 3
    lat = gr.subgroup_lattice(s3)
    assert len(chains) == abs(mobius_brute(lat))
    v4 = gr.elementary_abelian(2)
    assert len(gr.complement_chains_to_chief_series(v4)) == 2
    assert len(gr.complement_chains_to_chief_series(gr.cyclic(5))) == 1
    with pytest.raises(ls.NotSolvable):
        gr.complement_chains_to_chief_series(gr.alternating(5))


def test_chief_seeded_labeling_matches_complement_chains(stock):
    for name, g in stock.items():
        if name == "A5" or g.order > 24:
            continue
        lat = gr.subgroup_lattice(g)
        series = gr.chief_series(g)
        sel = gr.chief_seeded_selector(g, lat, series)
        lab = comodernistic_labeling(lat, sel)
        ok, cert = verify_cl(lat, lab)
        assert ok, (name, cert)
        dec = sorted(d.chain for d in decreasing_chains(lat, lab))
        comp = sorted(gr.complement_chains_to_chief_series(g, lat, series))
        assert dec == comp, name
        assert len(dec) == abs(mobius_brute(lat)), name


def test_proof_coatom_permutes():
    """For each subgroup H of a solvable group, the constructed coatom of
    [H N_l, G] permutes with every subgroup of [H, G]."""
    for g in (gr.symmetric(3), gr.alternating(4), gr.dihedral(4)):
        series = gr.chief_series(g)
        subs = gr.all_subgroups(g)
        full = frozenset(range(g.order))
        for h in subs:
            if h == full:
                continue
            lifted = [gr.product_set(g, h, n_) for n_ in series]
            ell = max(i for i, s in enumerate(lifted) if s != full)
            base = lifted[ell]
            # a coatom of [base, G] among subgroups
            cands = [k for k in subs if base <= k < full]
            coatoms = [k for k in cands
                       if not any(k < k2 < full for k2 in cands)]
            k = sorted(coatoms, key=lambda s: sorted(s))[0]
            for l_ in subs:
                if h <= l_:
                    assert gr.permutes(g, k, l_)


def test_schmidt_condition_on_subgroup_lattices(stock):
    for name in ("S3", "A4", "S4", "Q8"):
        lat = gr.subgroup_lattice(stock[name])
        assert ls.schmidt_condition3(lat), name
    assert not ls.schmidt_condition3(gr.subgroup_lattice(stock["A5"]))


def test_group_budget():
    with pytest.raises(ls.TooLarge):
        gr.subgroup_lattice(gr.alternating(5), max_order=30)
