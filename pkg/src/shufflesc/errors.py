class SizeGuardError(ValueError):
    """A computation would exceed its configured size guard.

    Guards protect against accidentally launching exponential-size
    enumerations; every guarded entry point takes an explicit limit
    argument that can be raised to override the default.
    """
