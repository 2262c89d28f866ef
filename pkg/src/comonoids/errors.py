"""Exception types shared across the library."""


class ComonoidsError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(ComonoidsError):
    """Shapes of matrices/subspaces do not line up."""


class FieldMismatch(ComonoidsError):
    """Operands live over different ground fields."""


class InconsistentSystem(ComonoidsError):
    """A linear system has no solution."""


class BudgetExceeded(ComonoidsError):
    """An enumeration would exceed the configured search budget."""


class InvalidStructure(ComonoidsError):
    """A structure failed its axiom check where validity is required."""


class IllFormedDiagram(ComonoidsError):
    """A diagram references unknown objects or carries non-morphisms."""


class BaseMismatch(ComonoidsError):
    """Bimodules over different base algebras were combined."""


class NotASubmodule(ComonoidsError):
    """A subspace is not closed under the relevant module action."""


class NotHopf(ComonoidsError):
    """The convolution system for an antipode is inconsistent."""


class ConventionFailure(ComonoidsError):
    """A constructed structure map failed its mandatory axiom check."""


class NameCollision(ComonoidsError):
    """A store name is already bound to different content."""


class ParseError(ComonoidsError):
    """A document could not be parsed."""
