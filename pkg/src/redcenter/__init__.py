"""Exact computations for the reduced tensor product on Drinfeld centers of Rep(G).

Modules, bottom up: ``cyclo`` (exact cyclotomic scalars), ``linalg``
(sparse exact matrices), ``group`` and ``rep`` (finite groups and their
representations), ``zoo`` (the shipped irrep data), ``algebra`` (Drinfeld
doubles, coproducts and the torus algebra), ``bundles`` (D(G)-modules as
equivariant bundles and their products), ``matvec`` (the matrix model),
``oracle`` (string-diagram composites) and ``cli``.
"""

__version__ = "0.1.0"
