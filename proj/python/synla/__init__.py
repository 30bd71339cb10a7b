"""Calculus on real symmetric matrices under the Loewner order.

Spectral operator functions (square root, absolute value, carrier,
spectral resolutions), the generalized infimum/supremum, commutants and
C-blocks, MV/OML/Boolean classification of effect and projection sets,
and a vector-lattice certifier for linear subspaces of Sym(n).
"""

try:
    from ._synla import *  # noqa: F401,F403
    from ._synla import __doc__ as _core_doc  # noqa: F401
except ImportError:  # pragma: no cover - dev tree layout
    from _synla import *  # noqa: F401,F403

__version__ = "0.1.0"
