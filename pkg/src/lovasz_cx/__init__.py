"""Exact search and verification toolkit for line-hypergraph counterexamples
to Lovász' conjecture built from Petersen-type graphs."""

__version__ = "0.1.0"
