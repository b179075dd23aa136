from fractions import Fraction

from stratatlas import exception
from stratatlas.kottwitz import b_order
from stratatlas.kottwitz import b_set_via_polytope
from stratatlas.kottwitz import b_set_via_straight
from stratatlas.kottwitz import defect
from stratatlas.kottwitz import leaf_dim
from stratatlas.kottwitz import newton_dim
from stratatlas.kottwitz import newton_poset
from stratatlas.root_datum import general_linear
from stratatlas.root_datum import RationalCocharacter
from stratatlas.testing import assert_raises_message
from stratatlas.testing import eq_
from stratatlas.testing import is_

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


def _mu(*coords):
    return RationalCocharacter(coords)


class DefectTest:
    def test_gl2_basic(self):
        eq_(defect(general_linear(2), _mu(HALF, HALF)), 1)

    def test_gl3_basic(self):
        eq_(defect(general_linear(3), _mu(THIRD, THIRD, THIRD)), 2)

    def test_integral_point_has_no_defect(self):
        eq_(defect(general_linear(3), _mu(1, 0, 0)), 0)

    def test_gl4_intermediate(self):
        d = general_linear(4)
        eq_(defect(d, _mu(1, HALF, HALF, 0)), 1)
        eq_(defect(d, _mu(1, THIRD, THIRD, THIRD)), 2)
        eq_(defect(d, _mu(HALF, HALF, HALF, HALF)), 2)


class DimensionTest:
    def test_gl2(self):
        d = general_linear(2)
        mu = _mu(1, 0)
        eq_(newton_dim(d, mu, _mu(HALF, HALF)), 0)
        eq_(newton_dim(d, mu, mu), 1)
        eq_(leaf_dim(d, mu), 1)
        eq_(leaf_dim(d, _mu(HALF, HALF)), 0)

    def test_gl4(self):
        d = general_linear(4)
        mu = _mu(1, 1, 0, 0)
        eq_(newton_dim(d, mu, mu), 4)
        eq_(newton_dim(d, mu, _mu(1, HALF, HALF, 0)), 3)
        eq_(newton_dim(d, mu, _mu(1, THIRD, THIRD, THIRD)), 2)
        eq_(newton_dim(d, mu, _mu(HALF, HALF, HALF, HALF)), 1)

    def test_out_of_range(self):
        assert_raises_message(
            exception.ValidationError,
            "Newton dimension: dimension 2 of nu",
            newton_dim,
            general_linear(2),
            _mu(1, 0),
            _mu(2, -1),
        )


class EnumerationTest:
    def test_routes_agree(self):
        for d, mu in (
            (general_linear(2), _mu(1, 0)),
            (general_linear(3), _mu(1, 0, 0)),
            (general_linear(4), _mu(1, 1, 0, 0)),
        ):
            eq_(
                [nc.key for nc in b_set_via_straight(d, mu)],
                [nc.key for nc in b_set_via_polytope(d, mu)],
            )

    def test_gl4_count(self):
        eq_(len(b_set_via_polytope(general_linear(4), _mu(1, 1, 0, 0))), 5)

    def test_straight_witnesses(self):
        d = general_linear(2)
        for nc in b_set_via_straight(d, _mu(1, 0)):
            assert nc.straight_witness is not None
        basic = b_set_via_straight(d, _mu(1, 0))[0]
        eq_(basic.straight_witness.length, 0)

    def test_gl4_order_is_not_a_chain(self):
        d = general_linear(4)
        order = b_order(d, b_set_via_polytope(d, _mu(1, 1, 0, 0)))
        a = next(nc for nc in order if nc.nu == _mu(1, THIRD, THIRD, THIRD))
        b = next(
            nc
            for nc in order
            if nc.nu == _mu(2 * THIRD, 2 * THIRD, 2 * THIRD, 0)
        )
        is_(order.comparable(a, b), False)


class NewtonPosetTest:
    def test_gl2(self):
        newton = newton_poset(general_linear(2), _mu(1, 0))
        eq_(len(newton), 2)
        eq_(
            [(nc.label, nc.defect, nc.stratum_dim, nc.leaf_dim) for nc in newton],
            [("b0", 1, 0, 0), ("b1", 0, 1, 1)],
        )
        eq_(newton.basic.nu, _mu(HALF, HALF))
        eq_(newton.mu_ordinary.nu, _mu(1, 0))
        eq_([(a.label, b.label) for a, b in newton.covers], [("b0", "b1")])

    def test_gl3(self):
        newton = newton_poset(general_linear(3), _mu(1, 0, 0))
        eq_(
            [(nc.defect, nc.stratum_dim, nc.leaf_dim) for nc in newton],
            [(2, 0, 0), (1, 1, 1), (0, 2, 2)],
        )

    def test_gl4_dimensions(self):
        newton = newton_poset(general_linear(4), _mu(1, 1, 0, 0))
        eq_(sorted(nc.stratum_dim for nc in newton), [1, 2, 2, 3, 4])
        is_(newton.basic.is_mu_ordinary, False)
        eq_(newton.mu_ordinary.stratum_dim, 4)

    def test_find_and_by_label(self):
        newton = newton_poset(general_linear(2), _mu(1, 0))
        eq_(newton.find(_mu(1, 0)).label, "b1")
        is_(newton.find(_mu(0, 1)), None)
        eq_(newton.by_label("b0").nu, _mu(HALF, HALF))

    def test_relabel(self):
        newton = newton_poset(general_linear(2), _mu(1, 0))
        renamed = newton.relabel({_mu(1, 0): "ordinary"})
        eq_([nc.label for nc in renamed], ["b0", "ordinary"])
        eq_(renamed.mu_ordinary.label, "ordinary")
