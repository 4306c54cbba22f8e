"""Exact computations with dendriform coalgebras: cohomology, operadic
products, deformations and homotopy structures."""

__version__ = "0.1.0"
