"""Desk-scale combinatorics of coded words and Baire-space points.

Modules:
  seqcoding  - prime codes of finite words, rank bijections, dense words
  points     - finitely presented points with certified hit logs
  digraph    - witnessed tuple digraphs and their finite truncations
  levelgraph - level tree graphs, unique paths, fiber decompositions
  classhom   - per-class homomorphism into a chosen generated point
  adversary  - refutation procedure for claimed continuous prefix maps
  cli        - the bairecomb executable
"""

from . import (  # noqa: F401
    adversary,
    classhom,
    digraph,
    errors,
    levelgraph,
    points,
    seqcoding,
)

__version__ = "0.1.0"
