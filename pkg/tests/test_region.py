import configparser
import io
import itertools

from stratatlas import exception
from stratatlas.region import CAP_ENVIRONMENT_VARIABLE
from stratatlas.region import ComputeRegion
from stratatlas.region import DEFAULT_CAPS
from stratatlas.region import function_key_generator
from stratatlas.region import make_region
from stratatlas.root_datum import general_linear
from stratatlas.root_datum import RationalCocharacter
from stratatlas.testing import assert_raises_message
from stratatlas.testing import eq_
from stratatlas.testing import is_


class RegionTest:
    def test_set_name(self):
        my_region = make_region(name="my-name")
        eq_(my_region.name, "my-name")

    def test_default_caps(self):
        reg = make_region()
        for name, value in DEFAULT_CAPS.items():
            eq_(reg.cap(name), value)
        is_(reg.is_configured, False)

    def test_configure_caps(self):
        reg = make_region().configure(caps={"adm": 50})
        eq_(reg.cap("adm"), 50)
        eq_(reg.cap("weyl"), DEFAULT_CAPS["weyl"])
        is_(reg.is_configured, True)

    def test_configure_unknown_cap(self):
        assert_raises_message(
            exception.UsageError,
            "unknown cap 'alcoves'",
            make_region().configure,
            caps={"alcoves": 5},
        )

    def test_configure_bad_cap_value(self):
        assert_raises_message(
            exception.UsageError,
            "cap 'adm' must be a positive integer",
            make_region().configure,
            caps={"adm": 0},
        )

    def test_already_configured(self):
        reg = make_region().configure()
        assert_raises_message(
            exception.RegionAlreadyConfigured,
            "already configured",
            reg.configure,
        )
        reg.configure(caps={"power": 7}, replace_existing=True)
        eq_(reg.cap("power"), 7)

    def test_instance_from_dict(self):
        my_conf = {
            "atlas.caps.adm": "200000",
            "atlas.caps.weyl": "1e6",
            "atlas.memoize": "false",
        }
        reg = make_region()
        reg.configure_from_config(my_conf, "atlas.")
        eq_(reg.cap("adm"), 200000)
        eq_(reg.cap("weyl"), 1000000)
        is_(reg.memoize, False)

    def test_instance_from_config_string(self):
        my_conf = "[xyz]\natlas.caps.polytope=12\natlas.memoize=true\n"
        config = configparser.ConfigParser()
        config.read_file(io.StringIO(my_conf))
        reg = make_region()
        reg.configure_from_config(dict(config.items("xyz")), "atlas.")
        eq_(reg.cap("polytope"), 12)
        is_(reg.memoize, True)

    def test_environment_override(self, monkeypatch):
        reg = make_region().configure(caps={"adm": 50})
        monkeypatch.setenv(CAP_ENVIRONMENT_VARIABLE, "3")
        eq_(reg.cap("adm"), 3)
        eq_(reg.cap("weyl"), 3)

    def test_environment_override_not_integer(self, monkeypatch):
        monkeypatch.setenv(CAP_ENVIRONMENT_VARIABLE, "lots")
        assert_raises_message(
            exception.UsageError,
            "STRAT_ATLAS_CAP must be an integer",
            make_region().cap,
            "adm",
        )

    def test_check_cap(self):
        reg = make_region().configure(caps={"adm": 10})
        reg.check_cap("adm", 10)
        e = assert_raises_message(
            exception.CapExceeded,
            r"adm enumeration exceeded 10 \(Adm\(mu\)\)",
            reg.check_cap,
            "adm",
            11,
            "Adm(mu)",
        )
        eq_(e.cap_name, "adm")
        eq_(e.limit, 10)

    def test_get_or_create(self):
        reg = make_region()
        counter = itertools.count(1)
        eq_(reg.get_or_create("k", lambda: next(counter)), 1)
        eq_(reg.get_or_create("k", lambda: next(counter)), 1)
        reg.delete("k")
        eq_(reg.get_or_create("k", lambda: next(counter)), 2)
        reg.invalidate()
        eq_(reg.get("k"), None)

    def test_no_memoize(self):
        reg = make_region().configure(memoize=False)
        counter = itertools.count(1)
        eq_(reg.get_or_create("k", lambda: next(counter)), 1)
        eq_(reg.get_or_create("k", lambda: next(counter)), 2)


class DecoratorTest:
    def _fixture(self, namespace=None):
        reg = ComputeRegion()
        counter = itertools.count(1)

        @reg.cache_on_arguments(namespace=namespace)
        def go(a, b):
            return next(counter), a, b

        return go

    def test_decorator(self):
        go = self._fixture()
        eq_(go(1, 2), (1, 1, 2))
        eq_(go(3, 4), (2, 3, 4))
        eq_(go(1, 2), (1, 1, 2))

    def test_explicit_invalidate(self):
        go = self._fixture()
        eq_(go(1, 2), (1, 1, 2))
        go.invalidate(1, 2)
        eq_(go(1, 2), (2, 1, 2))

    def test_explicit_set_get(self):
        go = self._fixture()
        eq_(go.get(1, 2), None)
        go.set(5, 1, 2)
        eq_(go(1, 2), 5)
        eq_(go.get(1, 2), 5)

    def test_refresh(self):
        go = self._fixture()
        eq_(go(1, 2), (1, 1, 2))
        eq_(go.refresh(1, 2), (2, 1, 2))
        eq_(go(1, 2), (2, 1, 2))

    def test_original(self):
        go = self._fixture()
        eq_(go.original(1, 2), (1, 1, 2))
        eq_(go.original(1, 2), (2, 1, 2))

    def test_keys_follow_datum_fingerprint(self):
        reg = ComputeRegion()
        counter = itertools.count(1)

        @reg.cache_on_arguments()
        def go(datum, mu):
            return next(counter)

        eq_(go(general_linear(2), RationalCocharacter([1, 0])), 1)
        eq_(go(general_linear(2), RationalCocharacter([1, 0])), 1)
        eq_(go(general_linear(3), RationalCocharacter([1, 0, 0])), 2)


def one(a, b):
    pass


class KeyGenerationTest:
    def test_namespace(self):
        gen = function_key_generator("x", one)
        eq_(gen(1, 2), "tests.test_region:one|x|1 2")

    def test_no_namespace(self):
        gen = function_key_generator(None, one)
        eq_(gen("a", None), "tests.test_region:one|'a' None")

    def test_datum_key(self):
        gen = function_key_generator(None, one)
        eq_(
            gen(general_linear(2), RationalCocharacter([1, 0])),
            "tests.test_region:one|%s %s"
            % (
                general_linear(2).cache_key,
                RationalCocharacter([1, 0]).cache_key,
            ),
        )

    def test_kwargs_rejected(self):
        gen = function_key_generator(None, one)
        assert_raises_message(
            ValueError, "does not accept keyword arguments", gen, a=1
        )
