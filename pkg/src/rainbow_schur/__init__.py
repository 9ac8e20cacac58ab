"""Rainbow Schur - exact counting, bounds and searches for rainbow Schur triples."""

__version__ = "0.1.0"
