"""Equality oracles for twist words.

Which group <T_a, T_b> is depends on the geometric intersection number
i(a,b) and, when i(a,b) = 1, on whether the surface is the torus:

  i = 0            Z^2        oracle: exponent vectors
  i = 1, torus     SL_2(Z)    oracle: integer matrices
  i = 1, other     B_3        oracle: reduced Burau matrices (faithful
                              for three strands)
  i >= 2           F_2        oracle: free reduction

All oracles are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union

from .algebra import (
    INFINITE,
    INT_IDENTITY,
    LAURENT_IDENTITY,
    IntMat2,
    LaurentMat2,
    LaurentPoly,
)
from .words import TwistWord, free_reduce

SL2_A = IntMat2(1, 1, 0, 1)
SL2_B = IntMat2(1, 0, -1, 1)

_t = LaurentPoly.t
_c = LaurentPoly.const
BURAU_A = LaurentMat2(_t(1, -1), _c(1), _c(0), _c(1))
BURAU_B = LaurentMat2(_c(1), _c(0), _t(1), _t(1, -1))

_SL2 = {("a", 1): SL2_A, ("b", 1): SL2_B,
        ("a", -1): SL2_A.inv(), ("b", -1): SL2_B.inv()}
_BURAU = {("a", 1): BURAU_A, ("b", 1): BURAU_B,
          ("a", -1): BURAU_A.inv(), ("b", -1): BURAU_B.inv()}


@dataclass(frozen=True)
class SurfaceContext:
    """The data the classification depends on: i(a,b) and a torus flag."""

    intersection: int
    is_torus: bool = False

    def __post_init__(self):
        if self.intersection < 0:
            raise ValueError("intersection number must be >= 0")
        if self.is_torus and self.intersection == 0:
            raise ValueError(
                "distinct primitive classes on the torus always intersect"
            )

    def regime(self) -> str:
        if self.intersection == 0:
            return "Z2"
        if self.intersection == 1:
            return "SL2Z" if self.is_torus else "B3"
        return "F2"


def eval_sl2(w: TwistWord) -> IntMat2:
    """Image of w under a -> [[1,1],[0,1]], b -> [[1,0],[-1,1]]."""
    m = INT_IDENTITY
    for letter in w:
        m = m * _SL2[letter]
    return m


def eval_burau(w: TwistWord) -> LaurentMat2:
    """Image of w under the reduced Burau assignment
    a -> [[-t,1],[0,1]], b -> [[1,0],[t,-t]]."""
    m = LAURENT_IDENTITY
    for letter in w:
        m = m * _BURAU[letter]
    return m


def exponent_vector(w: TwistWord) -> Tuple[int, int]:
    """(total a-exponent, total b-exponent); the abelianization."""
    ea = eb = 0
    for gen, sign in w:
        if gen == "a":
            ea += sign
        else:
            eb += sign
    return ea, eb


def is_trivial(w: TwistWord, ctx: SurfaceContext) -> bool:
    regime = ctx.regime()
    if regime == "Z2":
        return exponent_vector(w) == (0, 0)
    if regime == "SL2Z":
        return eval_sl2(w) == INT_IDENTITY
    if regime == "B3":
        return eval_burau(w) == LAURENT_IDENTITY
    return len(free_reduce(w)) == 0


def equal_in_context(w1: TwistWord, w2: TwistWord, ctx: SurfaceContext) -> bool:
    """Whether w1 and w2 represent the same element of <T_a, T_b> in the
    group determined by ctx."""
    regime = ctx.regime()
    if regime == "Z2":
        return exponent_vector(w1) == exponent_vector(w2)
    if regime == "SL2Z":
        return eval_sl2(w1) == eval_sl2(w2)
    if regime == "B3":
        return eval_burau(w1) == eval_burau(w2)
    return free_reduce(w1) == free_reduce(w2)


def order_of(w: TwistWord, ctx: SurfaceContext) -> Union[int, float]:
    """Smallest n >= 1 with w^n trivial in ctx, or INFINITE.

    Z^2, B_3 and F_2 are torsion free, so there the answer is 1 or
    INFINITE.  In SL_2(Z) every finite order divides 12, so powers up to
    12 suffice.
    """
    if ctx.regime() != "SL2Z":
        return 1 if is_trivial(w, ctx) else INFINITE
    m = eval_sl2(w)
    power = m
    for n in range(1, 13):
        if power == INT_IDENTITY:
            return n
        power = power * m
    return INFINITE
