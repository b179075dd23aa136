import collections
import inspect


ArgSpec = collections.namedtuple(
    "ArgSpec", ["args", "varargs", "keywords", "defaults"]
)


def inspect_getargspec(func):
    """Return the positional argument layout of ``func``.

    Functions wrapped by the ``decorator`` package carry a
    ``__signature__``; the builtin inspection handles those directly.

    """
    if inspect.ismethod(func):
        func = func.__func__
    if not inspect.isfunction(func) and not hasattr(func, "__signature__"):
        raise TypeError("{!r} is not a Python function".format(func))

    spec = inspect.getfullargspec(func)
    return ArgSpec(spec.args, spec.varargs, spec.varkw, spec.defaults)
