"""Exception hierarchy shared across the package."""


class CopmaintError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(CopmaintError, ValueError):
    """A model parameter is outside its admissible range."""


class DomainError(CopmaintError, ValueError):
    """A function argument is outside the function's domain."""


class RegionError(CopmaintError, ValueError):
    """Evaluation requested inside a region where the quantity is undefined
    (e.g. the Clayton zero region)."""


class NumericsError(CopmaintError, RuntimeError):
    """A numerical routine failed to converge to the requested accuracy."""


class NoInteriorOptimumError(CopmaintError, RuntimeError):
    """No interior optimum exists: the cost rate keeps decreasing toward
    T -> infinity, i.e. 'never replace preventively' is optimal."""


class NoFiniteOptimumError(CopmaintError, RuntimeError):
    """The discrete search cap was reached without the stopping inequality
    being satisfied."""


class CapabilityError(CopmaintError, RuntimeError):
    """The requested (family, parameter, dimension) combination is not
    supported by the sampler; raised instead of silently approximating."""
