"""The package contains the tests of the library."""
