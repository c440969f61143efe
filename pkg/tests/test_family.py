from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planturan.canon import isomorphic
from planturan.enumerate import EnumerationConstraints, enumerate_graphs
from planturan.family import (
    FAMILIES,
    WITNESSES,
    ContractError,
    MarkedGraph,
    construct,
    contract_for,
    double_wheel,
    hex_family,
    hex_family_n,
    improved_parts,
    lemma2_edges,
    lemma3_edges,
    outer_snake,
    apex_outer_snake,
    paste_along_k2,
    q_triangulation,
    search_j_family,
    small_witness,
    t_base,
    t_stack,
    tc3_lower,
    two_ck_lower,
    two_ck_lower_improved,
    two_ck_small,
)
from planturan.graph import complete, cycle, empty, join
from planturan.pattern import contains_k2t, is_free
from planturan.planar import is_outerplanar, is_planar, is_triangulation


def test_double_wheel():
    assert double_wheel(6).m == 12 and isomorphic(double_wheel(6), join(empty(2), cycle(4)))
    g = double_wheel(8)
    assert g.m == 18 and is_free(g, "K4")
    assert is_triangulation(double_wheel(10))
    with pytest.raises(ValueError):
        double_wheel(5)


def test_q_triangulation_examples():
    g = q_triangulation(2, 0)
    assert (g.n, g.m) == (10, 24)
    g = q_triangulation(3, 2)
    assert (g.n, g.m) == (16, 42) and is_free(g, "prism") and is_triangulation(g)
    h = q_triangulation(2, 0).remove_vertices([8])  # minus u
    assert (h.n, h.m) == (9, 20) and is_free(h, "prism")
    with pytest.raises(ValueError):
        q_triangulation(2, 4)


def test_tc3_lower_examples():
    assert tc3_lower(6).m == 10
    assert tc3_lower(9).m == 18
    assert is_free(tc3_lower(7), "2C3")


def test_two_ck_lower_examples():
    assert two_ck_lower(10, 4).m == 22
    assert two_ck_lower(11, 4).m == 25
    assert is_free(two_ck_lower(12, 5), "2C5")
    with pytest.raises(ValueError):
        two_ck_lower(7, 4)


def test_t_stack_examples():
    g = t_stack(4, 8).graph
    assert (g.n, g.m) == (8, 18) and is_triangulation(g)
    k2 = t_stack(2, 2)
    assert (k2.graph.n, k2.graph.m) == (2, 1)
    g = t_stack(13, 13).graph
    assert g.m == 33
    assert t_stack(5, 11).graph.m == 27  # s = 3m-4, every face stacked
    with pytest.raises(ValueError):
        t_stack(5, 12)
    with pytest.raises(ValueError):
        t_stack(2, 3)


def test_paste_examples():
    g = paste_along_k2([t_stack(4, 8), t_stack(2, 2), MarkedGraph(t_base(13))])
    assert (g.n, g.m) == (19, 50)
    assert paste_along_k2([MarkedGraph(t_base(5))]) == t_base(5)
    assert paste_along_k2([t_stack(2, 2), t_stack(2, 2)]) == complete(2)
    with pytest.raises(ValueError):
        paste_along_k2([])


@settings(max_examples=60)
@given(st.lists(st.integers(2, 9).flatmap(lambda m: st.tuples(st.just(m), st.integers(m, max(m, 3 * m - 4)))),
                min_size=1, max_size=5))
def test_paste_edge_identity(specs):
    parts = [t_stack(m, s if m > 2 else 2) for m, s in specs]
    g = paste_along_k2(parts)
    assert g.m == sum(p.graph.m - 1 for p in parts) + 1
    assert g.n == sum(p.graph.n - 2 for p in parts) + 2
    assert is_planar(g)


def test_improved_examples():
    g = two_ck_lower_improved(19, 7)
    assert g.m == 50 and is_free(g, "2C7")
    assert two_ck_lower_improved(21, 8).m == 56
    g = two_ck_lower_improved(18, 7)
    assert g.m == lemma3_edges(18, 7) == 47


@pytest.mark.parametrize("k", [7, 8, 9, 10, 11])
def test_improved_closed_form_matches_displayed_sum(k):
    # 3n - t - 7 + max(1 - eps, 0), with t pasted periodic blocks
    d = k - 4 + k // 2 if k % 2 else k - 6 + k // 2
    start = 3 * k - 3 if k % 2 else 3 * k - 6
    for n in range(start, 61):
        eps = (n - (2 * k - 1)) % d
        t = (n - (2 * k - 1)) // d
        assert lemma3_edges(n, k) == 3 * n - t - 7 + max(1 - eps, 0)
        assert two_ck_lower_improved(n, k).m == lemma3_edges(n, k)


def test_two_ck_small():
    for k in (7, 8):
        top = 3 * k - 4 if k % 2 else 3 * k - 7
        g = two_ck_small(top, k)
        assert g.m == 3 * top - 6 and is_free(g, f"2C{k}")


def test_hex_family_examples():
    g = hex_family(4, 0)
    assert (g.n, g.m) == (24, 66) and is_triangulation(g) and not contains_k2t(g, 3)
    g = hex_family(4, 2)
    assert (g.n, g.m) == (26, 72) and is_triangulation(g)
    g = hex_family(4, 5)
    assert (g.n, g.m) == (29, 81) and not contains_k2t(g, 3)
    assert isomorphic(hex_family(2, 0), hex_family_n(12))
    assert sorted(hex_family(2, 0).degrees()) == [5] * 12


def test_hex_family_13_is_not_k23_free():
    # no 13-vertex triangulation has minimum degree 5, which K_{2,3}-freeness needs
    g = hex_family_n(13)
    assert is_triangulation(g)
    assert contains_k2t(g, 3)
    assert not all(c[3] for c in contract_for("hex", k=2, r=1).checks(g))


def test_outer_snake_examples():
    g = outer_snake(7)
    assert g.m == 11 and sorted(g.degrees()) == [2, 2, 3, 3, 4, 4, 4]
    g = outer_snake(8)
    assert g.m == 13 and is_outerplanar(g) and g.max_degree() == 4
    for n in (7, 10, 15):
        g = apex_outer_snake(n)
        assert g.m == 3 * n - 6 and not contains_k2t(g, 5)


@pytest.mark.parametrize("family,params", [
    ("double_wheel", [dict(n=n) for n in range(6, 16)]),
    ("q", [dict(k=k, l=l) for k in range(2, 6) for l in range(4)]),
    ("k2_p3_path", [dict(n=n) for n in range(6, 9)]),
    ("tc3_lower", [dict(n=n) for n in range(6, 25)]),
    ("two_ck_lower", [dict(n=n, k=k) for k in range(4, 7) for n in range(2 * k, 22)]),
    ("two_ck_lower_improved", [dict(n=n, k=k) for k in (7, 8) for n in range(3 * k - 6 + 3 * (k % 2), 28)]),
    ("hex", [dict(k=k, r=r) for k in (3, 4) for r in range(6)]),
    ("outer_snake", [dict(n=n) for n in range(5, 15)]),
    ("apex_outer_snake", [dict(n=n) for n in range(7, 20)]),
])
def test_family_contracts(family, params):
    for p in params:
        g = construct(family, **p)
        bad = [c for c in contract_for(family, **p).checks(g) if not c[3]]
        assert not bad, (family, p, bad)


def test_construct_errors():
    with pytest.raises(ValueError):
        construct("nope", n=3)
    with pytest.raises(ValueError):
        construct("tc3_lower")
    with pytest.raises(ValueError):
        construct("tc3_lower", n=8, k=3)
    assert set(FAMILIES) >= {"q", "hex", "tc3_lower", "two_ck_lower", "t_stack", "outer_snake"}


@pytest.mark.parametrize("wid", sorted(set(WITNESSES) - {"o7_prime"}))
def test_witnesses_validate(wid):
    g = small_witness(wid)
    assert all(c[3] for c in WITNESSES[wid].contract.checks(g))


def test_o7_prime_cannot_be_built():
    # exhaustive: no 7-vertex planar K_{2,3}-free graph has 13 edges
    with pytest.raises(ContractError):
        small_witness("o7_prime")


def test_prism_witness():
    g = small_witness("prism")
    assert (g.n, g.m) == (6, 9) and set(g.degrees()) == {3} and is_free(g, "K4")


def test_q2_double_prime():
    g = small_witness("q2_double_prime")
    assert (g.n, g.m) == (11, 27) and not contains_k2t(g, 4)


def test_j_family_relations():
    j, jp, jpp = small_witness("j"), small_witness("j_prime"), small_witness("j_double_prime")
    assert (j.n, j.m, jp.n, jp.m, jpp.n, jpp.m) == (11, 25, 10, 22, 9, 19)
    assert search_j_family(j)[0] == (0, 1, 2, 3, 4)
    assert jp == j.add_edges([(0, 2)]).remove_vertices([1])
    assert jpp == j.add_edges([(1, 3), (1, 4)]).remove_vertices([0, 2])


@pytest.mark.parametrize("wid,n,m,seq", [
    ("d6", 6, 11, (5, 4, 4, 3, 3, 3)),
    ("d7", 7, 14, (6, 4, 4, 4, 4, 3, 3)),
])
def test_degree_sequence_witnesses_are_unique(wid, n, m, seq):
    found = [g for g in enumerate_graphs(EnumerationConstraints(n=n, planar=True, min_edges=m, max_edges=m))
             if g.degree_sequence() == seq]
    assert len(found) == 1
    assert isomorphic(found[0], small_witness(wid))
    assert not contains_k2t(found[0], 4)


def test_cubic_k4_free_graphs_pairwise_distinct():
    gs = [small_witness(w) for w in ("g1", "g2", "g3")]
    for a, b in itertools.combinations(gs, 2):
        assert not isomorphic(a, b)


def test_two_ck_formula_integral_and_matches_construction():
    for k in range(4, 10):
        for n in range(2 * k, 40):
            assert two_ck_lower(n, k).m == lemma2_edges(n, k)


def test_improved_parts_block_shapes():
    parts = improved_parts(19, 7)
    assert [p.graph.n for p in parts] == [8, 2, 13]
