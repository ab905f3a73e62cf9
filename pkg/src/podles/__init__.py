"""Exact symbolic computation and verification for the q-deformed
differential, Hermitian and Kahler geometry of the Podles sphere.

Everything is computed over the exact field Q(i)(s) with s^2 = q; the
verification suites check the structural identities (Hodge decomposition,
the Lefschetz sl2 triple, the Kahler identities, the Dolbeault refinement
of de Rham cohomology) as exact matrix identities on finite dimensional
Peter-Weyl blocks.
"""

from .calculus import Calculus, CalibrationError, CalibrationReport, Form, calibrate
from .qalgebra import Element
from .scalars import Scalar

__all__ = [
    "Calculus",
    "CalibrationError",
    "CalibrationReport",
    "Element",
    "Form",
    "Scalar",
    "calibrate",
]

__version__ = "0.1.0"
