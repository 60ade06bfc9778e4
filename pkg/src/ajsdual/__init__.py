"""Exact computations in the combinatorial category of graded sheaves on alcoves.

The package is organised bottom-up:

* :mod:`ajsdual.rootsys`  root data and the finite Weyl group
* :mod:`ajsdual.alcove`   affine Weyl group, alcoves, walls, up/down maps
* :mod:`ajsdual.fracring` graded fractions with root-monomial denominators
* :mod:`ajsdual.lattice`  free modules and submodule bases, local at a root
* :mod:`ajsdual.ajscat`   objects, morphisms, translation functors
* :mod:`ajsdual.dualtilt` duality, tilting and the self-duality witnesses
* :mod:`ajsdual.cli`      command line front end
"""

__version__ = "0.1.0"
