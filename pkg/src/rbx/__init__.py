"""rbx: exact-arithmetic checks for operator identities on
structure-constant algebras, with constructive builders and finite-field
search.

Importing the package populates the identity catalog (every module
registers the identities it owns).
"""

from . import kernel, structures, systems, representations, bisystems
from . import yangbaxter, bridges, search, fixtures, regression, cli
from .kernel import (Matrix, PrimeField, Rationals, Tensor2, Tensor3,
                     field_make)
from .report import Report, Violation
from .identities import CATALOG, known_tags, seeded_fault

__version__ = "0.1.0"
