"""Minimal forbidden induced subgraphs of the Δ-χ and Δ-ω bounded graph classes."""

__version__ = "0.1.0"
