from stratatlas import exception
from stratatlas.hn_atlas import build_preset_atlas
from stratatlas.kottwitz import b_set_via_polytope
from stratatlas.kottwitz import b_set_via_straight
from stratatlas.presets import available_presets
from stratatlas.presets import load_preset
from stratatlas.presets.quaternionic import parse_place
from stratatlas.presets.quaternionic import place_classes
from stratatlas.testing import assert_raises_message
from stratatlas.testing import eq_
from stratatlas.testing import is_
from stratatlas.testing.fixtures import _GenericAtlasTestSuite


def _dims(atlas):
    return sorted(
        ((int(nc.stratum_dim), int(nc.leaf_dim)) for nc in atlas.newton),
        reverse=True,
    )


def _levels(atlas):
    top = max(s.length for s in atlas.eo)
    return tuple(
        sum(1 for s in atlas.eo if s.length == k) for k in range(top + 1)
    )


class QuaternionicOneOneTest(_GenericAtlasTestSuite):
    preset = "quaternionic"
    params = {"places": ["1:1"]}

    def test_coxeter_tag(self):
        eq_(self.atlas.coxeter_tag, "A1")


class QuaternionicTwoTwoTest(_GenericAtlasTestSuite):
    preset = "quaternionic"
    params = {"places": ["2:2"]}

    def test_shape(self):
        eq_(_dims(self.atlas), [(2, 2), (1, 0)])
        eq_(_levels(self.atlas), (1, 2, 1))
        is_(self.atlas.fully_hn, True)
        is_(self.atlas.split, False)


class QuaternionicThreeThreeTest(_GenericAtlasTestSuite):
    preset = "quaternionic"
    params = {"places": ["3:3"]}

    def test_shape(self):
        eq_(len(self.atlas.newton), 3)
        eq_(
            sorted(int(nc.stratum_dim) for nc in self.atlas.newton),
            [1, 2, 3],
        )
        eq_(
            sorted(int(nc.leaf_dim) for nc in self.atlas.newton),
            [0, 1, 3],
        )
        eq_(_levels(self.atlas), (1, 3, 3, 1))
        is_(self.atlas.fully_hn, False)

    def test_routes_agree(self):
        d, mu = self.atlas.datum, self.atlas.mu
        eq_(
            [nc.key for nc in b_set_via_straight(d, mu)],
            [nc.key for nc in b_set_via_polytope(d, mu)],
        )


class QuaternionicTwoPlacesTest(_GenericAtlasTestSuite):
    preset = "quaternionic"
    params = {"places": ["1:1", "1:1"]}

    def test_shape(self):
        eq_(_dims(self.atlas), [(2, 2), (1, 1), (1, 1), (0, 0)])
        eq_(_levels(self.atlas), (1, 2, 1))
        eq_(len(self.atlas.eo.covers), 4)


class QuaternionicTwoOneTest(_GenericAtlasTestSuite):
    preset = "quaternionic"
    params = {"places": ["2:1"]}

    def test_shape(self):
        eq_(_dims(self.atlas), [(1, 1), (0, 0)])
        eq_(_levels(self.atlas), (1, 1))


class OrthogonalSevenTest(_GenericAtlasTestSuite):
    preset = "orthogonal"
    params = {"n": 7}

    def test_labels(self):
        eq_(
            {nc.label: int(nc.stratum_dim) for nc in self.atlas.newton},
            {"b0": 3, "b1": 7, "b2": 6, "b3": 5, "b4": 4},
        )
        eq_(self.atlas.coxeter_tag, "B4")

    def test_chain(self):
        eq_(_levels(self.atlas), (1,) * 8)
        eq_(
            [self.atlas.incidence["w%d" % k] for k in range(4)],
            ["b0"] * 4,
        )

    def test_raw_values_are_kept(self):
        assert any(
            nc.raw_stratum_dim != nc.stratum_dim for nc in self.atlas.newton
        )


class OrthogonalSixSplitTest(_GenericAtlasTestSuite):
    preset = "orthogonal"
    params = {"n": 6, "form": "split"}

    def test_primed_classes(self):
        eq_(self.atlas.incidence["w'3"], "b4")
        eq_(self.atlas.incidence["w3"], "b'4")
        eq_(_levels(self.atlas), (1, 1, 1, 2, 1, 1, 1))


class OrthogonalSixNonsplitTest(_GenericAtlasTestSuite):
    preset = "orthogonal"
    params = {"n": 6, "form": "nonsplit"}

    def test_shape(self):
        eq_(len(self.atlas.newton), 4)
        eq_(self.atlas.incidence["w'3"], "b0")
        is_(self.atlas.split, False)
        eq_(self.atlas.coxeter_tag, "2D4")


class OrthogonalThreeTest(_GenericAtlasTestSuite):
    preset = "orthogonal"
    params = {"n": 3}

    def test_agrees_with_siegel_genus_two(self):
        siegel = build_preset_atlas("siegel", {"g": 2})
        eq_(_dims(self.atlas), _dims(siegel))
        eq_(_levels(self.atlas), _levels(siegel))


class OrthogonalOneTest(_GenericAtlasTestSuite):
    preset = "orthogonal"
    params = {"n": 1}


class SiegelOneTest(_GenericAtlasTestSuite):
    preset = "siegel"
    params = {"g": 1}


class SiegelTwoTest(_GenericAtlasTestSuite):
    preset = "siegel"
    params = {"g": 2}

    def test_shape(self):
        eq_(_dims(self.atlas), [(3, 3), (2, 2), (1, 0)])
        eq_(self.atlas.coxeter_tag, "C2")


class MockPresetTest(_GenericAtlasTestSuite):
    preset = "mock"
    params = {"anything": 1}

    def test_provenance(self):
        eq_(self.atlas.provenance["preset"], "mock")
        eq_(self.atlas.provenance["parameters"], {"anything": 1})


class PresetLoaderTest:
    def test_available(self):
        names = available_presets()
        for name in ("quaternionic", "orthogonal", "siegel"):
            assert name in names

    def test_not_found(self):
        assert_raises_message(
            exception.PresetNotFound,
            "'unitary'; available presets:",
            load_preset,
            "unitary",
            {},
        )


class PresetArgumentsTest:
    def test_parse_place(self):
        eq_(parse_place("3:2"), (3, 2))
        eq_(parse_place(" 3 : 2 "), (3, 2))
        eq_(parse_place((1, 1)), (1, 1))

    def test_bad_place(self):
        assert_raises_message(
            exception.UsageError, "N:A", parse_place, "3-2"
        )
        assert_raises_message(
            exception.UsageError, "integers", parse_place, (True, 1)
        )

    def test_place_classes(self):
        eq_(place_classes(1), [(1, 1), (0, 0)])
        eq_(place_classes(2), [(2, 2), (1, 0)])
        eq_(place_classes(3), [(3, 3), (2, 1), (1, 0)])

    def test_quaternionic_bounds(self):
        assert_raises_message(
            exception.UsageError,
            "A must lie between 1 and N",
            load_preset,
            "quaternionic",
            {"places": ["1:2"]},
        )
        assert_raises_message(
            exception.UsageError,
            "place 2:0: A must lie between 1 and N",
            load_preset,
            "quaternionic",
            {"places": ["2:0"]},
        )
        assert_raises_message(
            exception.UsageError,
            "place 1:0: A must lie between 1 and N",
            load_preset,
            "quaternionic",
            {"places": ["2:1", "1:0"]},
        )
        assert_raises_message(
            exception.UsageError,
            "at least one --place",
            load_preset,
            "quaternionic",
            {},
        )

    def test_orthogonal_form(self):
        assert_raises_message(
            exception.UsageError,
            "needs n even",
            load_preset,
            "orthogonal",
            {"n": 5, "form": "nonsplit"},
        )
        assert_raises_message(
            exception.UsageError,
            "form must be",
            load_preset,
            "orthogonal",
            {"n": 4, "form": "twisted"},
        )

    def test_positive_int(self):
        eq_(load_preset("siegel", {"g": "2"}).g, 2)
        assert_raises_message(
            exception.UsageError,
            "missing preset parameter 'g'",
            load_preset,
            "siegel",
            {},
        )
        assert_raises_message(
            exception.UsageError,
            "must be >= 1, got 0",
            load_preset,
            "orthogonal",
            {"n": 0},
        )
