class InapplicableError(ValueError):
    """The instance violates a claim's residue or range condition."""


class DegenerateParameters(ValueError):
    """A parameter specialization makes some factor vanish or coincide."""
