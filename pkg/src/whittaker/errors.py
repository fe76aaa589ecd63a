"""Exception hierarchy. All library errors derive from ``WhittakerError``."""


class WhittakerError(ValueError):
    """Base class for domain, pole and convergence failures."""


class PoleError(WhittakerError):
    """A Gamma/digamma or hypergeometric parameter pole was hit."""


class DomainError(WhittakerError):
    """An argument lies outside the documented domain of an operation."""


class BranchError(DomainError):
    """The requested value is not real on the chosen branch."""


class ConvergenceError(WhittakerError):
    """A series or quadrature failed to converge within its budget."""


class DivergenceError(DomainError):
    """An improper integral does not converge for these parameters."""
