"""Equivariant Hodge classes of elliptic surfaces pulled back along Galois covers."""

__version__ = "0.1.0"
