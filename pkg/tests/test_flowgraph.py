"""Flow-graph analysis: heads, reducibility, collapse, numberings,
block trees, and the LR-ordering they produce."""

from itertools import combinations

import pytest

from fvsat.digraph import (ArcClass, Digraph, NotFlowGraphError, dfs_tree,
                           is_acyclic)
from fvsat.flowgraph import (BlockGraph, NotReducibleError, block_graph,
                             collapse, gen_reducible, heads_and_psets,
                             lr_ordering, reducibility, reduction_order,
                             sn_numbering)
from fvsat.fvs import verify_lr_order

import util

LOOP = Digraph(3, [(1, 2), (2, 3), (3, 2)])
STAR = Digraph(3, [(1, 2), (1, 3), (2, 3), (3, 2)])
NESTED = Digraph(4, [(1, 2), (2, 3), (3, 4), (4, 3), (4, 2)])


def all_flow_graphs(n):
    """Every digraph on 1..n (arcs in any subset) whose vertices are
    all reachable from 1."""
    pairs = [(u, v) for u in range(1, n + 1)
             for v in range(1, n + 1) if u != v]
    for mask in range(1 << len(pairs)):
        arcs = [p for i, p in enumerate(pairs) if mask >> i & 1]
        g = Digraph(n, arcs)
        try:
            dfs_tree(g, 1)
        except NotFlowGraphError:
            continue
        yield g


class TestHeadsAndPsets:
    def test_single_loop(self):
        fa = heads_and_psets(LOOP, 1)
        assert fa.heads == (2,)
        assert fa.cw == {2: frozenset({3})}
        assert fa.pw == {2: frozenset({3})}
        assert fa.pstar is None and fa.reducible is None

    def test_reach_back_through_other_vertices(self):
        fa = heads_and_psets(STAR, 1)
        assert fa.heads == (2,)
        assert fa.cw == {2: frozenset({3})}
        assert fa.pw == {2: frozenset({1, 3})}

    def test_heads_sorted_by_decreasing_preorder(self):
        fa = heads_and_psets(NESTED, 1)
        assert fa.heads == (3, 2)
        assert fa.pw == {3: frozenset({4}), 2: frozenset({3, 4})}

    def test_dag_has_no_heads(self):
        fa = heads_and_psets(Digraph(3, [(1, 2), (1, 3), (2, 3)]), 1)
        assert fa.heads == ()

    def test_cycle_sources_included_in_reach_back(self):
        for g in (LOOP, STAR, NESTED):
            fa = heads_and_psets(g, 1)
            for w in fa.heads:
                assert fa.cw[w] <= fa.pw[w]

    def test_unreachable_vertex_rejected(self):
        with pytest.raises(NotFlowGraphError, match=r"unreachable from 1"):
            heads_and_psets(Digraph(2), 1)

    def test_bad_source_rejected(self):
        with pytest.raises(ValueError, match="source 9 is not a vertex"):
            heads_and_psets(LOOP, 9)


class TestReducibility:
    def test_single_loop(self):
        fa = reducibility(LOOP, 1)
        assert fa.reducible is True
        assert fa.pstar == {2: frozenset({3}), 1: frozenset({2})}
        assert fa.hn == {1: 1, 2: 1, 3: 2}
        assert fa.sn == {1: 1, 2: 2, 3: 3}
        assert fa.failure is None

    def test_loop_entered_around_its_head(self):
        fa = reducibility(STAR, 1)
        assert fa.reducible is False
        assert fa.failure == (2, 1)
        assert fa.sn is None

    def test_nested_loops(self):
        fa = reducibility(NESTED, 1)
        assert fa.reducible is True
        assert fa.pstar == {3: frozenset({4}), 2: frozenset({3}),
                            1: frozenset({2})}
        assert fa.hn == {1: 1, 2: 1, 3: 2, 4: 3}

    def test_acyclic_graph_is_reducible(self):
        fa = reducibility(Digraph(3, [(1, 2), (2, 3), (1, 3)]), 1)
        assert fa.reducible is True
        assert fa.pstar == {1: frozenset({2, 3})}

    def test_single_vertex(self):
        fa = reducibility(Digraph(1), 1)
        assert fa.reducible is True
        assert fa.pstar == {1: frozenset()}

    def test_agrees_with_dominance_oracle_exhaustively(self):
        checked = 0
        for n in (1, 2, 3, 4):
            for g in all_flow_graphs(n):
                assert (reducibility(g, 1).reducible
                        == util.reducible_by_dominance(g, 1)), g.arcs
                checked += 1
        assert checked > 2000

    def test_failure_pair_names_head_and_escaping_vertex(self):
        fa = reducibility(STAR, 1)
        w, v = fa.failure
        assert w in fa.heads
        assert v in fa.pstar[w]


class TestCollapse:
    def test_loop_body_into_head(self):
        g = collapse(LOOP, {3}, 2)
        assert g.vertices == frozenset({1, 2})
        assert g.arcs == frozenset({(1, 2)})

    def test_empty_target_set_is_identity(self):
        assert collapse(LOOP, set(), 2) == LOOP

    def test_outside_arcs_move_to_w(self):
        g = Digraph(4, [(1, 2), (2, 3), (3, 4), (4, 2)])
        assert collapse(g, {3}, 2).arcs == frozenset(
            {(1, 2), (2, 4), (4, 2)})

    def test_w_inside_targets_rejected(self):
        with pytest.raises(ValueError, match="cannot be one of"):
            collapse(LOOP, {2, 3}, 2)

    def test_foreign_vertices_rejected(self):
        with pytest.raises(ValueError, match="outside the graph"):
            collapse(LOOP, {9}, 2)
        with pytest.raises(ValueError, match="outside the graph"):
            collapse(LOOP, {3}, 9)


class TestNumberings:
    def test_sn_visits_later_subtrees_first(self):
        fa = reducibility(Digraph(3, [(1, 2), (1, 3)]), 1)
        assert sn_numbering(fa) == {1: 1, 3: 2, 2: 3}

    def test_sn_on_a_chain(self):
        fa = reducibility(LOOP, 1)
        assert sn_numbering(fa) == {1: 1, 2: 2, 3: 3}

    def test_sn_needs_reducible(self):
        fa = reducibility(STAR, 1)
        with pytest.raises(ValueError, match="reducible analyses"):
            sn_numbering(fa)

    def test_arc_monotonicity(self):
        for g in (LOOP, NESTED, gen_reducible(3, 12, 10)):
            fa = reducibility(g, 1)
            for arc, cls in fa.dfst.arc_class.items():
                v, w = arc
                assert (fa.sn[v] < fa.sn[w]) == (cls is not ArcClass.CYCLE)

    def test_reduction_order_inner_loops_first(self):
        assert reduction_order(reducibility(LOOP, 1)) == (3, 2, 1)
        assert reduction_order(reducibility(NESTED, 1)) == (4, 3, 2, 1)

    def test_reduction_order_single_vertex(self):
        assert reduction_order(reducibility(Digraph(1), 1)) == (1,)

    def test_reduction_order_needs_reducible(self):
        with pytest.raises(ValueError, match="needs a reducible analysis"):
            reduction_order(reducibility(STAR, 1))


class TestBlockGraph:
    def test_single_loop(self):
        bg = block_graph(LOOP, 1)
        assert bg.boxes == (frozenset({2}), frozenset({1}), frozenset({3}))
        assert bg.edges == ((0, 1), (0, 2))
        assert bg.box_of(3) == 2
        with pytest.raises(ValueError, match="in no box"):
            bg.box_of(9)

    def test_nested_loops(self):
        bg = block_graph(NESTED, 1)
        assert bg.boxes == (frozenset({3}), frozenset({2}),
                            frozenset({1}), frozenset({4}))
        assert bg.edges == ((0, 1), (0, 3), (1, 2))

    def test_boxes_partition_the_vertices(self):
        for seed in range(5):
            g = gen_reducible(seed, 9, 8)
            bg = block_graph(g, 1)
            union = set()
            for box in bg.boxes:
                assert not box & union
                union |= box
            assert union == g.vertices

    def test_is_a_tree(self):
        for seed in range(5):
            bg = block_graph(gen_reducible(seed + 20, 11, 9), 1)
            assert len(bg.edges) == len(bg.boxes) - 1
            reach = {0}
            frontier = [0]
            while frontier:
                i = frontier.pop()
                for a, b in bg.edges:
                    for j in ((b,) if a == i else (a,) if b == i else ()):
                        if j not in reach:
                            reach.add(j)
                            frontier.append(j)
            assert reach == set(range(len(bg.boxes)))

    def test_irreducible_rejected(self):
        with pytest.raises(NotReducibleError, match="vertex 1 reaches back"):
            block_graph(STAR, 1)


class TestLROrdering:
    def test_single_loop(self):
        o = lr_ordering(LOOP, 1)
        assert o.order == (2, 3, 1)
        assert o.right == frozenset({2})
        assert verify_lr_order(LOOP, o)

    def test_nested_loops(self):
        o = lr_ordering(NESTED, 1)
        assert o.order == (4, 2, 3, 1)
        assert o.right == frozenset({2, 4})
        assert verify_lr_order(NESTED, o)

    def test_irreducible_rejected(self):
        with pytest.raises(NotReducibleError) as exc:
            lr_ordering(STAR, 1)
        assert exc.value.failure == (2, 1)

    def test_generated_graphs_verify(self):
        for seed in range(8):
            g = gen_reducible(seed, 14, 12)
            o = lr_ordering(g, 1)
            assert verify_lr_order(g, o)
            assert util.lr_holds(g, o.order, o.right)
            assert util.subset_acyclic(g, o.right)
            assert util.subset_acyclic(g, g.vertices - o.right)

    def test_source_is_always_left(self):
        for seed in range(8):
            g = gen_reducible(seed + 40, 10, 8)
            assert 1 not in lr_ordering(g, 1).right


class TestSameSideArcProperty:
    """Inside either side of the LR split, cycle arcs strictly drop the
    head numbering and everything else rises through sn."""

    def test_on_generated_graphs(self):
        for seed in range(8):
            g = gen_reducible(seed, 13, 14)
            fa = reducibility(g, 1)
            right = lr_ordering(g, 1).right
            for (x, y), cls in fa.dfst.arc_class.items():
                if (x in right) != (y in right):
                    continue
                if cls is ArcClass.CYCLE:
                    assert fa.hn[x] > fa.hn[y]
                    assert fa.sn[x] > fa.sn[y]
                else:
                    assert fa.sn[x] < fa.sn[y]
                    assert fa.hn[x] >= fa.hn[y]


class TestCycleArcInvariance:
    def test_reducible_graphs_pin_their_cycle_arcs(self):
        for seed in range(8):
            g = gen_reducible(seed, 12, 10)
            mine = {a for a, c in dfs_tree(g, 1).arc_class.items()
                    if c is ArcClass.CYCLE}
            assert mine == util.cycle_arcs_descending_dfs(g, 1)

    def test_irreducible_graphs_need_not(self):
        mine = {a for a, c in dfs_tree(STAR, 1).arc_class.items()
                if c is ArcClass.CYCLE}
        other = util.cycle_arcs_descending_dfs(STAR, 1)
        assert mine == {(3, 2)} and other == {(2, 3)}


class TestPocketCharacterization:
    """Pocket membership equals original-graph reach-back with the
    pocket's head carrying the largest preorder among candidates."""

    def check(self, g):
        fa = reducibility(g, 1)
        if not fa.reducible:
            return
        po = fa.dfst.po
        members = set()
        for w in fa.heads:
            members |= fa.pstar[w]
        for v in g.vertices:
            hits = [w for w in fa.heads if v in fa.pw[w]]
            for w in fa.heads:
                inside = v in fa.pstar[w]
                expected = (v in fa.pw[w]
                            and po[w] == max(po[x] for x in hits))
                assert inside == expected, (g.arcs, v, w)

    def test_small_examples(self):
        for g in (LOOP, NESTED, Digraph(1), gen_reducible(5, 10, 9)):
            self.check(g)

    def test_exhaustive_small(self):
        for g in all_flow_graphs(3):
            self.check(g)


class TestGenReducible:
    def test_deterministic(self):
        assert gen_reducible(7, 10, 15) == gen_reducible(7, 10, 15)
        assert gen_reducible(7, 10, 15) != gen_reducible(8, 10, 15)

    def test_always_reducible(self):
        for seed in range(10):
            g = gen_reducible(seed, 16, 20)
            assert reducibility(g, 1).reducible
            assert util.reducible_by_dominance(g, 1)

    def test_extra_arcs_add_cycles_sometimes(self):
        assert any(not is_acyclic(gen_reducible(seed, 10, 20))
                   for seed in range(10))

    def test_single_vertex(self):
        assert gen_reducible(0, 1) == Digraph(1)

    def test_empty_rejected(self):
        with pytest.raises(ValueError, match="at least the source"):
            gen_reducible(0, 0)
