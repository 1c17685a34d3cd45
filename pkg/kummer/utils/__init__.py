"""The package contains the utils used throughout the library."""
