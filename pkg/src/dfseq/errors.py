"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent user input (CLI exit status 2)."""


class CertificateError(RuntimeError):
    """An internal consistency certificate failed (CLI exit status 3).

    Raised for example when the Hilbert function of the central fiber
    disagrees with that of the general fiber, which would mean the
    computed degeneration is not flat.
    """


class TrivialConfigurationError(InputError):
    """A configuration whose normalized weights all vanish was used where a nontrivial one is required."""
