class CkitError(Exception):
    pass


class TableRangeError(CkitError, IndexError):
    """A query fell outside the range covered by a table."""


class ResourceLimitError(CkitError, MemoryError):
    pass


class NotFoundError(CkitError, LookupError):
    pass


class UncertifiedError(CkitError):
    """The table is too short to certify the requested answer."""


class FrontierError(CkitError):
    """The request reaches past the computed prefix of the compact set."""


class CacheFormatError(CkitError, ValueError):
    pass
