import itertools

import networkx as nx

from stratatlas.root_datum import general_linear
from stratatlas.root_datum import RationalCocharacter
from stratatlas.root_datum import special_orthogonal
from stratatlas.root_datum import symplectic
from stratatlas.testing import eq_
from stratatlas.testing import is_
from stratatlas.weyl import bruhat_leq
from stratatlas.weyl import eo_preceq
from stratatlas.weyl import generate
from stratatlas.weyl import jw_set
from stratatlas.weyl import opposition
from stratatlas.weyl import parabolic_type
from stratatlas.weyl import ParabolicType
from stratatlas.weyl import twist_type
from stratatlas.weyl import WeylElement
from stratatlas.weyl import x_element


class WeylElementTest:
    def test_identity(self):
        d = general_linear(3)
        e = WeylElement.identity(d)
        eq_(e.label, "e")
        eq_(e.length, 0)
        is_(e.is_identity, True)

    def test_simple_reflection(self):
        d = general_linear(3)
        s1 = WeylElement.simple_reflection(d, 0)
        eq_(s1.label, "s1")
        eq_(s1.act((1, 0, 0)), (0, 1, 0))
        eq_(s1 * s1, WeylElement.identity(d))
        eq_(s1.inverse(), s1)

    def test_word(self):
        d = general_linear(3)
        w = WeylElement.from_word(d, [0, 1])
        eq_(w.length, 2)
        eq_(w.reduced_word, (0, 1))
        eq_(w.label, "s1s2")
        eq_(w.left_descents, (0,))
        eq_(w.right_descents, (1,))
        eq_(w.inverse(), WeylElement.from_word(d, [1, 0]))

    def test_braid_relation(self):
        d = general_linear(3)
        eq_(
            WeylElement.from_word(d, [0, 1, 0]),
            WeylElement.from_word(d, [1, 0, 1]),
        )

    def test_act_inverse(self):
        d = symplectic(4)
        w = WeylElement.from_word(d, [0, 1])
        eq_(w.act_inverse(w.act((1, 2))), (1, 2))

    def test_twist(self):
        d = special_orthogonal(8, "nonsplit")
        eq_(
            WeylElement.simple_reflection(d, 2).twist(),
            WeylElement.simple_reflection(d, 3),
        )
        eq_(
            WeylElement.simple_reflection(d, 0).twist(),
            WeylElement.simple_reflection(d, 0),
        )


class WeylGroupTest:
    def test_orders(self):
        eq_(len(generate(general_linear(3))), 6)
        eq_(len(generate(symplectic(4))), 8)
        eq_(len(generate(special_orthogonal(9))), 384)
        eq_(len(generate(special_orthogonal(8))), 192)

    def test_longest(self):
        for d in (general_linear(3), symplectic(4), special_orthogonal(9)):
            group = generate(d)
            eq_(group.longest.length, len(d.positive_roots))
            eq_(group.identity, WeylElement.identity(d))

    def test_sorted_by_length(self):
        lengths = [w.length for w in generate(symplectic(4))]
        eq_(lengths, sorted(lengths))

    def test_parabolic_subgroup(self):
        group = generate(general_linear(3))
        eq_(len(group.parabolic_subgroup(ParabolicType.of([0]))), 2)
        eq_(len(group.parabolic_subgroup(ParabolicType.of([]))), 1)
        eq_(group.longest_element(ParabolicType.of([1])).label, "s2")

    def test_opposition(self):
        eq_(opposition(general_linear(3)), (1, 0))
        eq_(opposition(special_orthogonal(9)), (0, 1, 2, 3))
        eq_(opposition(special_orthogonal(8)), (0, 1, 2, 3))

    def test_parabolic_type(self):
        eq_(parabolic_type(general_linear(3), (1, 0, 0)).indices, (1,))
        eq_(
            parabolic_type(
                special_orthogonal(9), RationalCocharacter([1, 0, 0, 0])
            ).indices,
            (1, 2, 3),
        )
        eq_(ParabolicType.of([2, 0, 2]).label, "{1,3}")

    def test_twist_type(self):
        d = special_orthogonal(8, "nonsplit")
        eq_(twist_type(d, ParabolicType.of([1, 2])).indices, (1, 3))


class BruhatTest:
    def test_identity_is_least(self):
        d = general_linear(3)
        e = WeylElement.identity(d)
        for w in generate(d):
            assert bruhat_leq(e, w)
            assert bruhat_leq(w, generate(d).longest)

    def test_rank_two(self):
        d = general_linear(3)
        s1 = WeylElement.simple_reflection(d, 0)
        s2 = WeylElement.simple_reflection(d, 1)
        assert bruhat_leq(s1, s1 * s2)
        assert bruhat_leq(s2, s1 * s2)
        assert not bruhat_leq(s1, s2)
        assert not bruhat_leq(s1 * s2, s2 * s1)

    def test_partial_order(self):
        group = list(generate(symplectic(4)))
        for u, v in itertools.product(group, repeat=2):
            if u != v and bruhat_leq(u, v):
                assert not bruhat_leq(v, u)
                assert u.length < v.length

    def test_matches_reflection_closure(self):
        group = list(generate(symplectic(4)))
        simple = [
            WeylElement.simple_reflection(group[0].datum, i) for i in (0, 1)
        ]
        reflections = {w * s * w.inverse() for w in group for s in simple}
        graph = nx.DiGraph()
        graph.add_nodes_from(group)
        for u in group:
            for t in reflections:
                if (u * t).length > u.length:
                    graph.add_edge(u, u * t)
        closure = nx.transitive_closure_dag(graph)
        eq_(len(reflections), 4)
        for u, v in itertools.product(group, repeat=2):
            eq_(
                bruhat_leq(u, v),
                u == v or closure.has_edge(u, v),
                "%s <= %s" % (u.label, v.label),
            )


class CosetTest:
    def test_jw_counts(self):
        d = general_linear(3)
        eq_(len(jw_set(d, ParabolicType.of([1]))), 3)
        eq_(len(jw_set(d, ParabolicType.of([]))), 6)

    def test_jw_orthogonal(self):
        d = special_orthogonal(9)
        J = parabolic_type(d, (1, 0, 0, 0))
        result = jw_set(d, J)
        eq_(len(result), 8)
        eq_([w.length for w in result], list(range(8)))

    def test_jw_has_no_left_descent_in_j(self):
        d = special_orthogonal(8)
        J = parabolic_type(d, (1, 0, 0, 0))
        for w in jw_set(d, J):
            assert not any(w.is_left_descent(i) for i in J.indices)

    def test_x_element_borel(self):
        d = general_linear(2)
        eq_(
            x_element(d, ParabolicType.of([])),
            WeylElement.simple_reflection(d, 0),
        )

    def test_eo_order_gl2(self):
        d = general_linear(2)
        J = ParabolicType.of([])
        e, s = generate(d)
        assert eo_preceq(d, J, e, s)
        assert not eo_preceq(d, J, s, e)

    def test_eo_order_is_chain_for_odd_orthogonal(self):
        d = special_orthogonal(7)
        J = parabolic_type(d, (1, 0, 0))
        elements = jw_set(d, J)
        for a, b in zip(elements, elements[1:]):
            assert eo_preceq(d, J, a, b)
