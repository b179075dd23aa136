"""Exception classes for stratatlas.

Every exception that the command line reports carries a ``prefix`` and an
``exit_status``; the prefix starts the diagnostic line so that scripts can
tell the failure kinds apart.

"""


class StratAtlasException(Exception):
    """Base Exception for stratatlas exceptions to inherit from."""

    prefix = "error:"
    exit_status = 1


class DatumError(StratAtlasException):
    """A root datum, cocharacter or datum file is malformed."""

    prefix = "malformed datum:"


class CapExceeded(StratAtlasException):
    """An enumeration grew past its configured cap.

    Caps are set on the :class:`.ComputeRegion` and may be overridden with
    the ``STRAT_ATLAS_CAP`` environment variable.

    """

    prefix = "cap exceeded:"

    def __init__(self, cap_name, limit, detail=""):
        self.cap_name = cap_name
        self.limit = limit
        super().__init__(
            "%s enumeration exceeded %d%s"
            % (cap_name, limit, (" (%s)" % detail) if detail else "")
        )


class ValidationError(StratAtlasException):
    """A cross-validation check failed.

    The message names the failed check first, so that a diagnostic reads
    ``validation failed: route equivalence: ...``.

    """

    prefix = "validation failed:"

    def __init__(self, check, detail):
        self.check = check
        super().__init__("%s: %s" % (check, detail))


class PresetNotFound(StratAtlasException):
    """The specified preset could not be found."""

    prefix = "unknown preset:"
    exit_status = 2


class UsageError(StratAtlasException):
    """Invalid preset parameters or command line usage."""

    prefix = "usage error:"
    exit_status = 2


class RegionAlreadyConfigured(StratAtlasException):
    """ComputeRegion instance is already configured."""
