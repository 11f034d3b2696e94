"""Simple closed curves on the torus.

An unoriented essential simple closed curve on the torus is a primitive
integer vector up to sign.  We store the canonical representative whose
first nonzero coordinate is positive.  The geometric intersection number
of two classes is the absolute determinant of their vectors, and the left
twist along v acts by w |-> w + det(v, w) * v.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import IntMat2


@dataclass(frozen=True)
class CurveClass:
    p: int
    q: int

    def __post_init__(self):
        if (self.p, self.q) == (0, 0):
            raise ValueError("curve class must be a nonzero vector")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"({self.p}, {self.q}) is not primitive")
        if self.p < 0 or (self.p == 0 and self.q < 0):
            object.__setattr__(self, "p", -self.p)
            object.__setattr__(self, "q", -self.q)

    def vector(self) -> tuple[int, int]:
        return (self.p, self.q)


def _det(u: CurveClass, v: CurveClass) -> int:
    return u.p * v.q - u.q * v.p


def intersection(u: CurveClass, v: CurveClass) -> int:
    """Geometric intersection number i(u, v) = |det(u, v)|."""
    return abs(_det(u, v))


def twist_action(v: CurveClass, w: CurveClass, n: int = 1) -> CurveClass:
    """Class of T_v^n(w), realized as w + n*det(v, w)*v.

    The image of a primitive vector under an SL_2(Z) shear is primitive,
    so the result is a valid class.
    """
    d = _det(v, w)
    return CurveClass(w.p + n * d * v.p, w.q + n * d * v.q)


def twist_matrix(v: CurveClass) -> IntMat2:
    """The determinant-1 matrix realizing twist_action(v, . , 1) on column
    vectors: columns are the images of the standard basis."""
    p, q = v.p, v.q
    # e1 |-> e1 - q*v, e2 |-> e2 + p*v
    return IntMat2(1 - p * q, p * p, -q * q, 1 + p * q)
