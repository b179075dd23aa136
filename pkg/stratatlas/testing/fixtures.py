# mypy: ignore-errors

from stratatlas import build_atlas
from stratatlas.cli_io import atlas_from_dict
from stratatlas.cli_io import atlas_to_dict
from stratatlas.presets import load_preset
from stratatlas.presets import Preset
from stratatlas.presets import register_preset
from stratatlas.region import default_region
from stratatlas.root_datum import general_linear
from stratatlas.root_datum import RationalCocharacter
from stratatlas.root_datum import two_rho_pairing
from stratatlas.weyl import jw_set
from .assertions import eq_


class _GenericAtlasFixture:
    """Builds the atlas of ``preset`` with ``params`` once per class."""

    preset = None
    params = {}

    _atlas = None

    @classmethod
    def setup_class(cls):
        default_region.invalidate()
        loaded = load_preset(cls.preset, cls.params)
        cls._preset_inst = loaded
        cls._atlas = build_atlas(loaded.datum(), loaded.mu(), preset=loaded)

    @property
    def atlas(self):
        return self._atlas


class _GenericAtlasTestSuite(_GenericAtlasFixture):
    def test_single_basic_and_mu_ordinary(self):
        newton = self.atlas.newton
        eq_(sum(1 for nc in newton if nc.is_basic), 1)
        eq_(sum(1 for nc in newton if nc.is_mu_ordinary), 1)
        eq_(newton.mu_ordinary.nu, self.atlas.mu_bar)

    def test_mu_ordinary_dimensions(self):
        top = two_rho_pairing(self.atlas.datum, self.atlas.mu)
        ordinary = self.atlas.newton.mu_ordinary
        eq_(ordinary.stratum_dim, top)
        eq_(ordinary.leaf_dim, top)
        eq_(self.atlas.eo.ordinary.length, top)

    def test_superspecial_is_identity(self):
        eq_(self.atlas.eo.superspecial.length, 0)
        eq_(
            self.atlas.incidence[self.atlas.eo.superspecial.label],
            self.atlas.newton.basic.label,
        )

    def test_labels_unique(self):
        newton_labels = [nc.label for nc in self.atlas.newton]
        eo_labels = [s.label for s in self.atlas.eo]
        eq_(len(set(newton_labels)), len(newton_labels))
        eq_(len(set(eo_labels)), len(eo_labels))

    def test_eo_lengths_nondecreasing(self):
        lengths = [s.length for s in self.atlas.eo]
        eq_(lengths, sorted(lengths))

    def test_newton_covers_raise_dimension(self):
        for lower, upper in self.atlas.newton.covers:
            assert lower.stratum_dim < upper.stratum_dim

    def test_purity_shadow(self):
        newton = self.atlas.newton
        for nc in newton:
            below = newton.poset.below(nc)
            if below:
                eq_(max(b.stratum_dim for b in below), nc.stratum_dim - 1)

    def test_integrality(self):
        for nc in self.atlas.newton:
            for value in (nc.defect, nc.stratum_dim, nc.leaf_dim):
                eq_(value, int(value))

    def test_eo_count_matches_jw(self):
        eo = self.atlas.eo
        eq_(len(eo), len(jw_set(self.atlas.datum, eo.J)))

    def test_eo_order_bounds(self):
        poset = self.atlas.eo.poset
        assert poset.is_partial_order()
        eq_(poset.minimum, self.atlas.eo.superspecial)
        eq_(poset.maximum, self.atlas.eo.ordinary)

    def test_incidence_total_when_fully_hn(self):
        if not self.atlas.fully_hn:
            return
        assert None not in self.atlas.incidence.values()

    def test_preset_tables(self):
        self._preset_inst.check(self.atlas)

    def test_document_round_trip(self):
        eq_(atlas_from_dict(atlas_to_dict(self.atlas)), self.atlas)


class MockPreset(Preset):
    """``GL(2)`` with ``mu = (1, 0)``, under any name."""

    name = "mock"

    def __init__(self, arguments):
        self.arguments = dict(arguments)

    @property
    def parameters(self):
        return dict(self.arguments)

    def datum(self):
        return general_linear(2)

    def mu(self):
        return RationalCocharacter([1, 0])


register_preset("mock", "stratatlas.testing.fixtures", "MockPreset")
