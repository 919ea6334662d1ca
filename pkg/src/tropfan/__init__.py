"""Exact arithmetic for stacky fans and tropical semiabelian varieties.

Submodules:
  lattice      sublattices of Z^n in Hermite normal form
  cones        pointed rational polyhedral cones
  fans         stacky fans and fan morphism predicates
  minimal      minimal fans, colorings, birational equivalence
  semiabelian  polarized bases, translation fans, Jacobians
  serialize    JSON documents
  render       SVG output for rank-2 fans
  oracle       brute-force cross-check oracles
  cli          command-line entry point
"""

from . import cones, fans, lattice, minimal, oracle, render, semiabelian, serialize
from .cones import Cone
from .fans import FanMorphismData, StackyCone, StackyFan
from .lattice import Sublattice
from .minimal import MinimalFan, SublatticeColoring
from .semiabelian import AVStackyFan, PolarizedBase, QuotientComplex

__all__ = [
    "AVStackyFan",
    "Cone",
    "FanMorphismData",
    "MinimalFan",
    "PolarizedBase",
    "QuotientComplex",
    "StackyCone",
    "StackyFan",
    "Sublattice",
    "SublatticeColoring",
    "cones",
    "fans",
    "lattice",
    "minimal",
    "oracle",
    "render",
    "semiabelian",
    "serialize",
]
