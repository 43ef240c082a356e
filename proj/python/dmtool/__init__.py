"""Exact delta-matroid calculus.

Thin python face over the C++ core.  Ground sets are lists of label
strings, set families are lists of label lists, and polynomial
coefficients come back as exact rational strings; ``as_fractions`` turns
one polynomial dict into a ``Fraction`` list, constant term first.
"""

from fractions import Fraction

from ._core import (
    apply_word,
    bicycle,
    is_delta_matroid,
    is_vf_safe,
    p1,
    penrose,
    tripartition,
    tutte,
)
from ._core import transition as _transition

__all__ = [
    "apply_word",
    "as_fractions",
    "bicycle",
    "is_delta_matroid",
    "is_vf_safe",
    "p1",
    "penrose",
    "transition",
    "tripartition",
    "tutte",
]


def transition(elements, sets, a, b, c):
    """Weighted transition polynomial; weights may be int, Fraction or str."""
    return _transition(
        elements, sets, str(Fraction(a)), str(Fraction(b)), str(Fraction(c))
    )


def as_fractions(poly):
    """Coefficient list of a polynomial dict, constant term first."""
    return [Fraction(c) for c in poly["coeffs"]]
