"""Exact arithmetic substrate.

2x2 matrices over Python's arbitrary-precision integers, 2x2 matrices over
integer Laurent polynomials in one variable t, and the index of a rank-2
sublattice of Z^2.  Everything is an immutable value; "infinite" results
are math.inf.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Mapping, Tuple, Union

INFINITE = math.inf


class NotInvertibleError(ValueError):
    """Determinant is not a unit of the coefficient ring."""


@dataclass(frozen=True)
class IntMat2:
    """2x2 integer matrix, row-major entries (a, b, c, d)."""

    a: int
    b: int
    c: int
    d: int

    def __mul__(self, other: "IntMat2") -> "IntMat2":
        return IntMat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def inv(self) -> "IntMat2":
        det = self.det()
        if det not in (1, -1):
            raise NotInvertibleError(
                f"determinant {det} is not a unit in Z"
            )
        return IntMat2(det * self.d, -det * self.b, -det * self.c, det * self.a)

    def pow(self, n: int) -> "IntMat2":
        if n < 0:
            return self.inv().pow(-n)
        result, base = INT_IDENTITY, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]


INT_IDENTITY = IntMat2(1, 0, 0, 1)


class LaurentPoly:
    """Integer Laurent polynomial in t, stored as a sparse exponent ->
    coefficient map with no zero coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] = ()):
        self.coeffs: Dict[int, int] = {e: c for e, c in dict(coeffs).items() if c}

    @classmethod
    def const(cls, n: int) -> "LaurentPoly":
        return cls({0: n})

    @classmethod
    def t(cls, exp: int = 1, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: Dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_unit(self) -> bool:
        """Units of Z[t, t^-1] are +-t^n."""
        return len(self.coeffs) == 1 and next(iter(self.coeffs.values())) in (1, -1)

    def unit_inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise NotInvertibleError(f"{self} is not a unit in Z[t, t^-1]")
        (e, c), = self.coeffs.items()
        return LaurentPoly({-e: c})

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(str(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c)) + "*"
                sign = "-" if c < 0 else ""
                parts.append(f"{sign}{mag}t^{e}" if e != 1 else f"{sign}{mag}t")
        return " + ".join(parts).replace("+ -", "- ")


LP_ZERO = LaurentPoly()
LP_ONE = LaurentPoly.const(1)


@dataclass(frozen=True)
class LaurentMat2:
    """2x2 matrix over LaurentPoly, row-major entries."""

    a: LaurentPoly
    b: LaurentPoly
    c: LaurentPoly
    d: LaurentPoly

    def __mul__(self, other: "LaurentMat2") -> "LaurentMat2":
        return LaurentMat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> LaurentPoly:
        return self.a * self.d - self.b * self.c

    def inv(self) -> "LaurentMat2":
        u = self.det().unit_inverse()
        return LaurentMat2(u * self.d, -(u * self.b), -(u * self.c), u * self.a)

    def rows(self) -> list[list[LaurentPoly]]:
        return [[self.a, self.b], [self.c, self.d]]


LAURENT_IDENTITY = LaurentMat2(LP_ONE, LP_ZERO, LP_ZERO, LP_ONE)


def lattice_index(
    v1: Tuple[int, int], v2: Tuple[int, int]
) -> Union[int, float]:
    """Index of the sublattice of Z^2 spanned by v1, v2.

    |det| when nonzero; INFINITE when the span has rank < 2.
    """
    det = v1[0] * v2[1] - v1[1] * v2[0]
    return abs(det) if det else INFINITE
