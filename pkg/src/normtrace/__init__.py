"""Decreasing evaluation codes on extended norm-trace curves ``x^u = Tr(y)``.

Modules: :mod:`gf` (field tower), :mod:`ffla` (linear algebra over it),
:mod:`curve` (points, polynomials, Groebner reduction), :mod:`monset`
(monomial lower sets), :mod:`code` (parameters, duals, hulls),
:mod:`repair` (trace repair) and :mod:`cli`.
"""

__version__ = "0.1.0"
