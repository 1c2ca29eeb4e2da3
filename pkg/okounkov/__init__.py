"""Exact multipoint Okounkov bodies, Zariski decompositions and Seshadri constants."""

__version__ = "1.0.0"
