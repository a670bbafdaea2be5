"""Cluster R-matrices on cylindric networks: exact and randomized checks."""

__version__ = "0.1.0"
