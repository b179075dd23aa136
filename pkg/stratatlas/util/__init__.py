from .langhelpers import coerce_string_conf  # noqa
from .langhelpers import memoized_property  # noqa
from .langhelpers import PluginLoader  # noqa
from .lattice import SmithForm  # noqa
from .lattice import smith_form  # noqa
from .lattice import solve_rational  # noqa
from .poset import Poset  # noqa
