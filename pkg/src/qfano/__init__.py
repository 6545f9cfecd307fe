"""Exact-arithmetic engine for numerical Q-Fano threefold classification.

Subpackages and modules:

- ``ratmod``: exact rationals, residues, lcm.
- ``basket``: terminal-singularity baskets and torsion compatibility.
- ``orbifold_rr``: orbifold Riemann-Roch (chi(mA), Hilbert rows, genus).
- ``wps``: weighted-hypersurface monomial oracles and the del Pezzo table.
- ``search``: candidate enumeration reproducing the classification tables.
- ``sarkisov``: link relation solving, intersection calculus, proof replay.
- ``cli``: the ``qfano`` command-line tool.
"""

__version__ = "1.0.0"
