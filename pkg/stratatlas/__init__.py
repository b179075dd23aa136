__version__ = "0.1.0"

from .hn_atlas import build_atlas  # noqa
from .hn_atlas import build_preset_atlas  # noqa
from .hn_atlas import StrataAtlas  # noqa
from .presets import load_preset  # noqa
from .root_datum import build_datum  # noqa
from .root_datum import RationalCocharacter  # noqa
from .root_datum import RootDatum  # noqa
