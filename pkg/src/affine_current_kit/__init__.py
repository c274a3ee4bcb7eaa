"""Exact finite data of simple-current extensions of affine vertex operator algebras.

Modules: :mod:`rootdata` (root systems, coweights, ``P^vee/Q^vee``),
:mod:`lattice` (Gram matrices, sign cocycle, theta series), :mod:`fusion`
(level-k weights, sl(2) fusion, simple currents), :mod:`extension` (the
extension lattices), :mod:`modrep` (modules and extended fusion) and
:mod:`qchar` (truncated characters).
"""
from .errors import KitError, ValidationError

__version__ = "0.1.0"

__all__ = ["KitError", "ValidationError", "__version__"]
