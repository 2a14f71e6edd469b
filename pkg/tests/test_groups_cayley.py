"""Tests for abelian groups, Cayley graphs, and the balance classification sweeps."""

from __future__ import annotations

import pytest

from balgraph import (
    AbelianGroup,
    ConnectionSetError,
    GroupError,
    LtSpec,
    abelian_groups_of_order,
    cayley_graph,
    check_connection_set,
    circulant,
    classify_cayley_graph,
    cyclic_group,
    enumerate_connection_sets,
    is_balanced,
    is_isomorphic,
    lex_product_with_empty,
    lt_cycle,
    parse_group_spec,
    recognize_lt_cycle,
    verify_cayley_classification,
    verify_circulant_structure,
)

from helpers import complete_bipartite, cycle_graph


# ---------------------------------------------------------------------------
# Groups


def test_abelian_group_counts_by_order():
    # number of abelian groups of order n is the product of partition
    # counts of the prime exponents
    expected = {1: 1, 2: 1, 4: 2, 8: 3, 12: 2, 16: 5, 24: 3, 30: 1, 36: 4, 64: 11}
    for n, count in expected.items():
        groups = list(abelian_groups_of_order(n))
        assert len(groups) == count, n
        assert len(set(groups)) == count  # one per isomorphism class
        for g in groups:
            assert g.order == n


def test_group_factors_form_divisibility_chain():
    for g in abelian_groups_of_order(36):
        for a, b in zip(g.factors, g.factors[1:]):
            assert b % a == 0


def test_invalid_factor_chains_rejected():
    with pytest.raises(GroupError):
        AbelianGroup((4, 2))  # 2 does not divide into a chain after 4
    with pytest.raises(GroupError):
        AbelianGroup((1, 2))
    with pytest.raises(GroupError):
        cyclic_group(0)


def test_group_arithmetic():
    g = AbelianGroup((2, 4))
    assert g.order == 8
    assert g.identity == (0, 0)
    assert g.add((1, 3), (1, 2)) == (0, 1)
    assert g.neg((1, 3)) == (1, 1)
    assert g.element_order((0, 1)) == 4
    assert g.element_order((1, 0)) == 2
    assert g.element_order(g.identity) == 1


def test_generates():
    g = cyclic_group(6)
    assert g.generates({(1,), (5,)})
    assert not g.generates({(2,), (4,)})
    assert not g.generates(set())
    trivial = cyclic_group(1)
    assert trivial.generates(set())


def test_parse_group_spec_forms():
    assert parse_group_spec("12") == cyclic_group(12)
    assert parse_group_spec("2x4") == AbelianGroup((2, 4))
    assert parse_group_spec("2 X 2 x 4") == AbelianGroup((2, 2, 4))
    assert parse_group_spec("2*3") == cyclic_group(6)  # normalized
    assert parse_group_spec("1x5") == cyclic_group(5)  # trivial parts dropped
    assert parse_group_spec("4x2") == AbelianGroup((2, 4))


def test_parse_group_spec_errors():
    for bad in ("", "x", "2x", "ax2", "2x-3", "2.5"):
        with pytest.raises(GroupError):
            parse_group_spec(bad)


# ---------------------------------------------------------------------------
# Cayley graph construction


def test_cayley_graph_of_cyclic_group_is_circulant():
    g, elements = cayley_graph(cyclic_group(8), {(1,), (7,), (4,)})
    assert elements == tuple((i,) for i in range(8))
    assert g == circulant(8, {1, 4, 7})
    assert g.is_regular(3)


def test_circulant_examples():
    assert is_isomorphic(circulant(6, {1, 5}), cycle_graph(6))
    assert is_isomorphic(circulant(6, {1, 3, 5}), complete_bipartite(3, 3))
    assert circulant(4, {2}).degrees() == (1, 1, 1, 1)


def test_connection_set_validation():
    g = cyclic_group(6)
    with pytest.raises(ConnectionSetError):
        check_connection_set(g, frozenset({(0,)}))  # identity
    with pytest.raises(ConnectionSetError):
        check_connection_set(g, frozenset({(1,)}))  # not inverse-closed
    with pytest.raises(ConnectionSetError):
        check_connection_set(g, frozenset({(7,)}))  # not an element
    check_connection_set(g, frozenset({(1,), (5,), (3,)}))  # fine


def test_circulant_rejects_bad_steps():
    with pytest.raises(ConnectionSetError):
        circulant(6, {0})
    with pytest.raises(ConnectionSetError):
        circulant(6, {6})


def test_enumerate_connection_sets_count():
    # Z8 has inverse-pair classes {1,7},{2,6},{3,5},{4}; 2^4 = 16 subsets,
    # of which 12 generate the group.
    sets = list(enumerate_connection_sets(cyclic_group(8)))
    assert len(sets) == 12
    assert len(set(sets)) == 12
    all_sets = list(enumerate_connection_sets(cyclic_group(8), connected_only=False))
    assert len(all_sets) == 16
    for conn in sets:
        g, _ = cayley_graph(cyclic_group(8), conn)
        from balgraph import is_connected

        assert is_connected(g)


# ---------------------------------------------------------------------------
# Blow-up cycles and recognition


def test_lt_cycle_shapes():
    assert is_isomorphic(lt_cycle(2, 3), complete_bipartite(3, 3))
    g = lt_cycle(8, 1)
    assert is_isomorphic(g, cycle_graph(8))
    g = lt_cycle(8, 2)
    assert g.n == 16 and g.is_regular(4)


def test_lt_spec_validation():
    LtSpec(2, 5)
    LtSpec(12, 1)
    with pytest.raises(ValueError):
        LtSpec(4, 2)  # excluded: duplicates the complete bipartite case
    with pytest.raises(ValueError):
        LtSpec(6, 1)
    with pytest.raises(ValueError):
        LtSpec(8, 0)


def test_recognition_round_trip_grid():
    for l in (2, 8, 12, 16, 20):
        for t in (1, 2, 3, 4):
            if l * t > 64:
                continue
            spec = recognize_lt_cycle(lt_cycle(l, t))
            assert spec is not None
            assert (spec.l, spec.t) == (l, t), (l, t)


def test_recognition_is_label_independent():
    from helpers import relabel
    import random

    rng = random.Random(7)
    g = lt_cycle(8, 2)
    perm = list(range(g.n))
    rng.shuffle(perm)
    spec = recognize_lt_cycle(relabel(g, perm))
    assert spec is not None and (spec.l, spec.t) == (8, 2)


def test_recognition_on_plain_cycles():
    # C_l for l divisible by 4 (l >= 8) is the t=1 blow-up; other even
    # cycles are not blow-up cycles at all.
    spec = recognize_lt_cycle(cycle_graph(12))
    assert spec is not None and (spec.l, spec.t) == (12, 1)
    assert recognize_lt_cycle(cycle_graph(6)) is None
    assert recognize_lt_cycle(cycle_graph(10)) is None


def test_lex_product_matches_lt_cycle():
    assert is_isomorphic(lex_product_with_empty(cycle_graph(8), 3), lt_cycle(8, 3))


def test_circulant_presentation_of_blow_up():
    # steps {1, 7, 9} in Z24: the three odd steps hit the two neighboring
    # residue classes mod 8, giving the blow-up of C8 by triples
    assert is_isomorphic(circulant(24, {1, 7, 9, 23, 17, 15}), lt_cycle(8, 3))


def test_blow_up_cycles_are_balanced():
    for l, t in ((2, 4), (8, 2), (12, 2), (16, 1)):
        assert is_balanced(lt_cycle(l, t))


# ---------------------------------------------------------------------------
# Classification sweeps (frozen results)


def test_classify_single_cayley_graph():
    balanced, spec = classify_cayley_graph(cyclic_group(6), frozenset({(1,), (5,), (3,)}))
    assert balanced and spec is not None and (spec.l, spec.t) == (2, 3)
    balanced, spec = classify_cayley_graph(cyclic_group(6), frozenset({(1,), (5,)}))
    assert not balanced and spec is None
    with pytest.raises(ConnectionSetError):
        classify_cayley_graph(cyclic_group(6), frozenset({(2,), (4,)}))


def test_cayley_classification_sweep_small():
    report = verify_cayley_classification(8)
    assert report.ok
    assert report.groups_checked == 10
    assert report.graphs_checked == 147
    assert report.balanced_count == 19
    assert report.counterexamples == ()


def test_circulant_structure_sweep_small():
    report = verify_circulant_structure(16)
    assert report.ok
    assert report.graphs_checked == 29
    assert report.balanced_count == 11
    assert report.violations == ()
