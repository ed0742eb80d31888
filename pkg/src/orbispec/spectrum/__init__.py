"""Hodge spectra, equivariant Hodge–Deligne classes and their orbifold
versions of arbitrary order."""
