"""lct-certify: exact arithmetic certificates for log canonical thresholds."""

__version__ = "0.1.0"
