"""The package contains facilities for testing Kummer."""
