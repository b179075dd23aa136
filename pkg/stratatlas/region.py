"""Enumeration caps and memoization of pure computations.

A :class:`.ComputeRegion` plays the part a cache region plays for a web
application: it is created up front with :func:`.make_region`, configured
once (directly or from a flat configuration dictionary), and then used as
a decorator source for the expensive enumerations::

    region = make_region("atlas").configure(caps={"adm": 50000})

    @region.cache_on_arguments()
    def admissible(datum, mu):
        ...

Every enumeration in the package consults :data:`.default_region` for its
cap.  The ``STRAT_ATLAS_CAP`` environment variable overrides all caps with
one integer.

"""
from __future__ import annotations

from functools import partial
import logging
import os
from typing import Any
from typing import Callable
from typing import Dict
from typing import Mapping
from typing import Optional

from decorator import decorate

from . import exception
from .util import coerce_string_conf
from .util.compat import inspect_getargspec
from .util.typing import Self

log = logging.getLogger(__name__)

CAP_ENVIRONMENT_VARIABLE = "STRAT_ATLAS_CAP"

DEFAULT_CAPS: Mapping[str, int] = {
    "weyl": 10**7,
    "adm": 10**6,
    "polytope": 10**6,
    "power": 10**5,
}

ToStr = Callable[[Any], str]


def argument_key(value: Any) -> str:
    """Key fragment for one decorated-function argument.

    Objects exposing ``cache_key`` (root data, cocharacters) contribute
    that; everything else contributes its ``repr``.

    """
    key = getattr(value, "cache_key", None)
    if key is not None:
        return key
    return repr(value)


def function_key_generator(namespace, fn, to_str: ToStr = argument_key):
    """Return a function that generates a string
    key, based on a given function as well as
    arguments to the returned function itself.

    This is used by :meth:`.ComputeRegion.cache_on_arguments`
    to generate a key from a decorated function.

    """

    if namespace is None:
        namespace = "%s:%s" % (fn.__module__, fn.__name__)
    else:
        namespace = "%s:%s|%s" % (fn.__module__, fn.__name__, namespace)

    args = inspect_getargspec(fn)
    has_self = args[0] and args[0][0] in ("self", "cls")

    def generate_key(*args, **kw):
        if kw:
            raise ValueError(
                "stratatlas's default key creation "
                "function does not accept keyword arguments."
            )
        if has_self:
            args = args[1:]

        return namespace + "|" + " ".join(map(to_str, args))

    return generate_key


class ComputeRegion:
    """Holds enumeration caps and a memo of computed values."""

    def __init__(
        self,
        name: Optional[str] = None,
        function_key_generator: Callable[..., Any] = function_key_generator,
    ):
        """Construct a new :class:`.ComputeRegion`."""
        self.name = name
        self.function_key_generator = function_key_generator
        self.caps: Dict[str, int] = dict(DEFAULT_CAPS)
        self.memoize = True
        self._configured = False
        self._values: Dict[str, Any] = {}

    def configure(
        self,
        caps: Optional[Mapping[str, int]] = None,
        memoize: bool = True,
        replace_existing: bool = False,
    ) -> Self:
        """Configure a :class:`.ComputeRegion`.

        The :class:`.ComputeRegion` itself is returned.

        :param caps: mapping of cap name (``weyl``, ``adm``, ``polytope``,
         ``power``) to a positive integer limit.  Names not given keep
         their defaults.

        :param memoize: when False, decorated functions always recompute.

        :param replace_existing: allow reconfiguring a region that is
         already configured; otherwise
         :class:`.exception.RegionAlreadyConfigured` is raised.

        """
        if self._configured and not replace_existing:
            raise exception.RegionAlreadyConfigured(
                "This region is already configured with caps %r; "
                "pass replace_existing=True to reconfigure" % self.caps
            )
        new_caps = dict(DEFAULT_CAPS)
        for name, value in (caps or {}).items():
            if name not in DEFAULT_CAPS:
                raise exception.UsageError(
                    "unknown cap %r; expected one of %s"
                    % (name, ", ".join(sorted(DEFAULT_CAPS)))
                )
            if not isinstance(value, int) or value <= 0:
                raise exception.UsageError(
                    "cap %r must be a positive integer, got %r"
                    % (name, value)
                )
            new_caps[name] = value
        self.caps = new_caps
        self.memoize = memoize
        self._configured = True
        self.invalidate()
        return self

    def configure_from_config(self, config_dict, prefix):
        """Configure from a configuration dictionary
        and a prefix.

        Example::

            region = make_region()
            myconfig = {
                "atlas.caps.adm": "200000",
                "atlas.caps.weyl": "1e6",
                "atlas.memoize": "true",
            }
            region.configure_from_config(myconfig, "atlas.")

        """
        config_dict = coerce_string_conf(config_dict)
        cap_prefix = "%scaps." % prefix
        caps = {
            key[len(cap_prefix) :]: value
            for key, value in config_dict.items()
            if key.startswith(cap_prefix)
        }
        return self.configure(
            caps=caps,
            memoize=config_dict.get("%smemoize" % prefix, True),
            replace_existing=config_dict.get(
                "%sreplace_existing" % prefix, False
            ),
        )

    @property
    def is_configured(self):
        """Return True if :meth:`.ComputeRegion.configure` was called."""
        return self._configured

    def cap(self, name: str) -> int:
        """Return the effective value of cap ``name``.

        ``STRAT_ATLAS_CAP`` wins over configured values.

        """
        override = os.environ.get(CAP_ENVIRONMENT_VARIABLE)
        if override:
            try:
                value = int(override)
            except ValueError:
                raise exception.UsageError(
                    "%s must be an integer, got %r"
                    % (CAP_ENVIRONMENT_VARIABLE, override)
                )
            if value <= 0:
                raise exception.UsageError(
                    "%s must be positive" % CAP_ENVIRONMENT_VARIABLE
                )
            return value
        return self.caps[name]

    def check_cap(self, name: str, count: int, detail: str = "") -> None:
        limit = self.cap(name)
        if count > limit:
            raise exception.CapExceeded(name, limit, detail)

    def invalidate(self) -> None:
        """Drop every memoized value."""
        self._values.clear()

    def get(self, key: str) -> Any:
        return self._values.get(key)

    def set(self, key: str, value: Any) -> None:
        self._values[key] = value

    def delete(self, key: str) -> None:
        self._values.pop(key, None)

    def get_or_create(self, key: str, creator: Callable[[], Any]) -> Any:
        if self.memoize and key in self._values:
            return self._values[key]
        log.debug("computing %s", key)
        value = creator()
        if self.memoize:
            self._values[key] = value
        return value

    def cache_on_arguments(
        self,
        namespace: Optional[str] = None,
        to_str: ToStr = argument_key,
        function_key_generator: Optional[Callable[..., Any]] = None,
    ) -> Callable[[Callable[..., Any]], Callable[..., Any]]:
        """A function decorator that will memoize the return
        value of the function using a key derived from the
        function itself and its arguments.

        The decorated function can then be called normally, where
        the value is computed once per distinct argument key::

            @default_region.cache_on_arguments()
            def generate(datum):
                ...

        The function is also given an attribute ``invalidate()``, which
        takes the same arguments and drops the stored value, ``refresh()``
        which recomputes it, ``get()`` which returns the stored value or
        None, and ``set()`` which takes the value first and then the
        arguments.  ``original`` is the undecorated function.

        """
        if function_key_generator is None:
            _function_key_generator = self.function_key_generator
        else:
            _function_key_generator = function_key_generator

        def get_or_create_for_user_func(key_generator, user_func, *arg, **kw):
            key = key_generator(*arg, **kw)
            return self.get_or_create(key, lambda: user_func(*arg, **kw))

        def cache_decorator(user_func):
            key_generator = _function_key_generator(
                namespace, user_func, to_str
            )

            def refresh(*arg, **kw):
                """
                Like invalidate, but regenerates the value instead
                """
                key = key_generator(*arg, **kw)
                value = user_func(*arg, **kw)
                self.set(key, value)
                return value

            def invalidate(*arg, **kw):
                key = key_generator(*arg, **kw)
                self.delete(key)

            def set_(value, *arg, **kw):
                key = key_generator(*arg, **kw)
                self.set(key, value)

            def get(*arg, **kw):
                key = key_generator(*arg, **kw)
                return self.get(key)

            # Use `decorate` to preserve the signature of :param:`user_func`.
            decorated = decorate(
                user_func, partial(get_or_create_for_user_func, key_generator)
            )
            decorated.set = set_
            decorated.invalidate = invalidate
            decorated.get = get
            decorated.refresh = refresh
            decorated.original = user_func
            return decorated

        return cache_decorator


def make_region(*arg: Any, **kw: Any) -> ComputeRegion:
    """Instantiate a new :class:`.ComputeRegion`.

    Currently, :func:`.make_region` is a passthrough
    to :class:`.ComputeRegion`.  See that class for
    constructor arguments.

    """
    return ComputeRegion(*arg, **kw)


default_region = make_region("stratatlas.default")
"""The region consulted by every enumeration in the package."""
