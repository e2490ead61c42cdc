"""Exact colored HOMFLY-PT polynomials of twist knots.

>>> from coloredhomfly import colored_homfly_twist
>>> print(colored_homfly_twist(1, -1))
a^2 - q^2 + 1 - q^-2 + a^-2
"""

from .coefficients import coefficient
from .invariants import (
    TwistKnotQuery,
    colored_homfly_fig8,
    colored_homfly_trefoil,
    colored_homfly_twist,
    colored_jones,
    compute,
    h_to_r,
)
from .kauffman import PlanarDiagram, jones_in_t, kauffman_bracket, kauffman_oracle
from .laurent import LaurentPoly1, LaurentPoly2, NotDivisible, QRational, parse_poly
from .verify import IdentityReport, resolve_jones_convention, run_all, run_suite

__all__ = [
    "LaurentPoly1",
    "LaurentPoly2",
    "QRational",
    "NotDivisible",
    "parse_poly",
    "coefficient",
    "TwistKnotQuery",
    "colored_homfly_twist",
    "colored_homfly_trefoil",
    "colored_homfly_fig8",
    "colored_jones",
    "compute",
    "h_to_r",
    "PlanarDiagram",
    "kauffman_bracket",
    "kauffman_oracle",
    "jones_in_t",
    "IdentityReport",
    "run_suite",
    "run_all",
    "resolve_jones_convention",
]
