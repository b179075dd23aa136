from typing import Any
from typing import Mapping

from .api import ExpectedTables  # noqa
from .api import Preset  # noqa
from .. import exception
from ..util import PluginLoader

_preset_loader = PluginLoader("stratatlas.presets")
register_preset = _preset_loader.register

register_preset(
    "quaternionic", "stratatlas.presets.quaternionic", "QuaternionicPreset"
)
register_preset(
    "orthogonal", "stratatlas.presets.orthogonal", "OrthogonalPreset"
)
register_preset("siegel", "stratatlas.presets.siegel", "SiegelPreset")


def load_preset(name: str, arguments: Mapping[str, Any]) -> Preset:
    """Instantiate the preset registered as ``name``.

    Third-party presets are found through the ``stratatlas.presets``
    entry point group.

    :raises PresetNotFound: nothing is registered under ``name``.

    """
    try:
        preset_cls = _preset_loader.load(name)
    except PluginLoader.NotFound:
        raise exception.PresetNotFound(
            "%r; available presets: %s"
            % (name, ", ".join(available_presets()))
        )
    return preset_cls(arguments)


def available_presets():
    return _preset_loader.names()
