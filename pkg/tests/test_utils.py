from stratatlas import util
from stratatlas.testing import assert_raises_message
from stratatlas.testing import eq_
from stratatlas.util import PluginLoader


class UtilsTest:

    """Test the relevant utils functionality."""

    def test_coerce_string_conf(self):
        settings = {"caps.adm": "-1"}
        coerced = util.coerce_string_conf(settings)
        eq_(coerced["caps.adm"], -1)

        settings = {"caps.adm": "+1"}
        coerced = util.coerce_string_conf(settings)
        eq_(coerced["caps.adm"], 1)
        eq_(type(coerced["caps.adm"]), int)

        settings = {"caps.weyl": "2e5"}
        coerced = util.coerce_string_conf(settings)
        eq_(coerced["caps.weyl"], 200000)
        eq_(type(coerced["caps.weyl"]), int)

        settings = {"memoize": "False", "name": "None", "form": "split"}
        coerced = util.coerce_string_conf(settings)
        eq_(coerced, {"memoize": False, "name": None, "form": "split"})


class PluginLoaderTest:
    def test_register_and_load(self):
        loader = PluginLoader("stratatlas.test_plugins")
        loader.register("poset", "stratatlas.util.poset", "Poset")
        eq_(loader.load("poset"), util.Poset)
        eq_(loader.names(), ["poset"])

    def test_not_found(self):
        loader = PluginLoader("stratatlas.test_plugins")
        assert_raises_message(
            PluginLoader.NotFound,
            "Can't load plugin stratatlas.test_plugins nothing",
            loader.load,
            "nothing",
        )


class MemoizedPropertyTest:
    def test_evaluated_once(self):
        calls = []

        class Thing:
            @util.memoized_property
            def value(self):
                calls.append(1)
                return 5

        thing = Thing()
        eq_(thing.value, 5)
        eq_(thing.value, 5)
        eq_(len(calls), 1)
