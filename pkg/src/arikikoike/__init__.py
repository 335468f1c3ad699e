"""Exact workbench for semisimple Ariki-Koike algebras.

Normal-form arithmetic on the basis {L^c T_w}, the Murphy-type cellular basis
and its dual, seminormal idempotents and matrix units, Specht representations,
and Schur elements by four independent methods -- all over the exact rational
function field in q, Q_1, ..., Q_r (or at exact rational evaluation points).
"""

from arikikoike.algebra import AlgebraElem, AlgebraSpec, shared_spec
from arikikoike.combinat import (
    Multipartition,
    Perm,
    Tableau,
    multipartitions,
    std_tableaux,
)
from arikikoike.kernel import BACKEND as KERNEL_BACKEND
from arikikoike.ratfunc import EvalPoint, ParamSpec, RatFunc

__version__ = "0.1.0"

__all__ = [
    "AlgebraElem",
    "AlgebraSpec",
    "shared_spec",
    "Multipartition",
    "Perm",
    "Tableau",
    "multipartitions",
    "std_tableaux",
    "EvalPoint",
    "ParamSpec",
    "RatFunc",
    "KERNEL_BACKEND",
    "__version__",
]
