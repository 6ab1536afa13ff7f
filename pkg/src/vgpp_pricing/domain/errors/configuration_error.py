class ConfigurationError(Exception):
    """Raised for unusable run input: bad flags, unreadable or ill-formed CSV and JSON files."""

    pass
