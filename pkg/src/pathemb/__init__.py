"""Pathway embedding toolkit.

Learns fixed-dimensional representations of algebraic solution pathways
from transition-difference embeddings with a contrastively trained
Transformer encoder, probes what those representations capture, and
derives embedding-based strategy measures with regression analysis.
"""

__version__ = "0.1.0"
