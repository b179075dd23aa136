from fractions import Fraction

from stratatlas.affine_weyl import AffineElement
from stratatlas.affine_weyl import eo_set
from stratatlas.eo_strata import affine_eo_preceq
from stratatlas.eo_strata import eo_order
from stratatlas.eo_strata import eo_poset
from stratatlas.eo_strata import identify_T
from stratatlas.eo_strata import is_almost_linear
from stratatlas.eo_strata import minimal_eo
from stratatlas.eo_strata import tau_element
from stratatlas.eo_strata import zip_orbit_dim
from stratatlas.kottwitz import newton_poset
from stratatlas.presets import load_preset
from stratatlas.root_datum import general_linear
from stratatlas.root_datum import RationalCocharacter
from stratatlas.root_datum import special_orthogonal
from stratatlas.testing import eq_
from stratatlas.testing import is_
from stratatlas.util import Poset
from stratatlas.weyl import generate
from stratatlas.weyl import parabolic_type
from stratatlas.weyl import WeylElement


def _mu(*coords):
    return RationalCocharacter(coords)


class TauTest:
    def test_gl2(self):
        d = general_linear(2)
        eq_(
            tau_element(d, _mu(1, 0)),
            AffineElement(d, (1, 0), WeylElement.simple_reflection(d, 0)),
        )

    def test_length_zero(self):
        d = special_orthogonal(7)
        eq_(tau_element(d, _mu(1, 0, 0)).length, 0)


class EOOrderTest:
    def test_gl2(self):
        order = eo_order(general_linear(2), _mu(1, 0))
        eq_(len(order), 2)
        is_(order.minimum.is_identity, True)
        eq_(order.maximum.length, 1)

    def test_odd_orthogonal_chain(self):
        d = special_orthogonal(9)
        order = eo_order(d, _mu(1, 0, 0, 0))
        eq_(len(order), 8)
        eq_(
            sorted((a.length, b.length) for a, b in order.covers),
            [(k, k + 1) for k in range(7)],
        )

    def test_even_orthogonal_has_a_diamond(self):
        d = special_orthogonal(8)
        order = eo_order(d, _mu(1, 0, 0, 0))
        eq_(len(order), 8)
        eq_(sorted(w.length for w in order), [0, 1, 2, 3, 3, 4, 5, 6])
        middle = [w for w in order if w.length == 3]
        is_(order.comparable(*middle), False)


class IdentificationTest:
    def test_bijection(self):
        for d, mu in (
            (general_linear(2), _mu(1, 0)),
            (general_linear(3), _mu(1, 0, 0)),
            (special_orthogonal(7), _mu(1, 0, 0)),
        ):
            transport = identify_T(d, mu)
            eq_(set(transport.values()), set(eo_set(d, mu)))
            for w, e in transport.items():
                eq_(e.length, w.length)

    def test_identity_goes_to_tau(self):
        d = general_linear(3)
        mu = _mu(1, 0, 0)
        transport = identify_T(d, mu)
        eq_(transport[WeylElement.identity(d)], tau_element(d, mu))

    def test_affine_order_on_gl2(self):
        d = general_linear(2)
        bottom, top = sorted(eo_set(d, _mu(1, 0)))
        assert affine_eo_preceq(d, bottom, top)
        assert not affine_eo_preceq(d, top, bottom)


class EOPosetTest:
    def test_gl2(self):
        eo = eo_poset(general_linear(2), _mu(1, 0))
        eq_([s.length for s in eo], [0, 1])
        eq_(eo.superspecial.length, 0)
        eq_(eo.ordinary.length, 1)
        eq_(
            [s.newton_point for s in eo],
            [_mu(Fraction(1, 2), Fraction(1, 2)), _mu(1, 0)],
        )
        eq_([s.is_sigma_straight for s in eo], [True, True])

    def test_zip_orbit_dims(self):
        d = general_linear(3)
        eo = eo_poset(d, _mu(1, 0, 0))
        eq_([s.zip_orbit_dim for s in eo], [7, 8, 9])
        J = parabolic_type(d, _mu(1, 0, 0))
        eq_(zip_orbit_dim(d, J, WeylElement.identity(d)), 7)

    def test_labels_and_lookup(self):
        eo = eo_poset(general_linear(2), _mu(1, 0))
        eq_(eo.superspecial.label, "e")
        eq_(eo.by_label(eo.ordinary.label), eo.ordinary)

    def test_relabel(self):
        d = general_linear(2)
        eo = eo_poset(d, _mu(1, 0))
        renamed = eo.relabel({WeylElement.identity(d): "ss"})
        eq_(renamed.superspecial.label, "ss")
        eq_(len(renamed.covers), 1)

    def test_every_stratum_has_a_group_element(self):
        d = general_linear(3)
        group = set(generate(d))
        for s in eo_poset(d, _mu(1, 0, 0)):
            assert s.w in group


class MinimalStrataTest:
    def test_gl3_all_minimal(self):
        d = general_linear(3)
        mu = _mu(1, 0, 0)
        minimal = minimal_eo(d, mu)
        eq_([s.newton_class for s in minimal], ["b0", "b1", "b2"])

    def test_odd_orthogonal(self):
        d = special_orthogonal(7)
        mu = _mu(1, 0, 0)
        newton = newton_poset(
            d, mu, load_preset("orthogonal", {"n": 5}).avatar()
        )
        minimal = minimal_eo(d, mu, newton)
        eq_(len(newton), 4)
        eq_(
            sorted(s.newton_class for s in minimal),
            sorted(nc.label for nc in newton),
        )
        for s in minimal:
            eq_(s.length, newton.by_label(s.newton_class).leaf_dim)


class AlmostLinearTest:
    def test_chain(self):
        chain = Poset.from_relation([0, 1, 2, 3], lambda a, b: a <= b)
        is_(is_almost_linear(chain, lambda n: n), True)

    def test_diamond(self):
        diamond = Poset.from_covers(
            ["a", "b", "c", "d"],
            [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
        )
        dims = {"a": 0, "b": 1, "c": 1, "d": 2}
        is_(is_almost_linear(diamond, dims.__getitem__), True)
        skewed = {"a": 0, "b": 1, "c": 2, "d": 3}
        is_(is_almost_linear(diamond, skewed.__getitem__), False)
