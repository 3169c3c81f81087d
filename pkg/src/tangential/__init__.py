"""Tangential varieties of Segre-Veronese varieties, exactly.

Library layout:

* ``exactalg``  exact sparse linear algebra over Q
* ``symfun``    partitions, characters, Kostka numbers, multiplicities
* ``generic``   the generic block algebra, tabloids, Young symmetrizers
* ``graphs``    colored multigraphs <-> two-row tabloids, generator catalogs
* ``tangent``   concrete tensor-space computations and the two oracles
* ``cli``       command-line front end with JSON certificates
"""

__version__ = "0.1.0"
