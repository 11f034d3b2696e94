"""Classification of G = <X, Y> with X in {(T_aT_b)^k, (T_bT_a)^k}, Y = T_a.

The verdict gives the isomorphism type of G, its relation to the full
group <T_a, T_b> (equal, finite index n, or infinite index), and a bundle
of independently computed certificates.  A certificate that disagrees
with the verdict raises InternalConsistencyError: that means a bug, never
a user error.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from . import stallings
from .algebra import lattice_index
from .reps import (
    INFINITE,
    SurfaceContext,
    equal_in_context,
    exponent_vector,
    is_trivial,
    order_of,
)
from .words import EMPTY, TwistWord, XSpec, concat, expand_xform, invert, parse_word


class GroupClass(str, enum.Enum):
    Z = "Z"
    Z2 = "Z2"
    F2 = "F2"
    B3 = "B3"
    SL2Z = "SL2Z"
    Z2xZ = "Z2xZ"


_PRETTY = {
    GroupClass.Z: "ℤ",
    GroupClass.Z2: "ℤ²",
    GroupClass.F2: "F₂",
    GroupClass.B3: "B₃",
    GroupClass.SL2Z: "SL₂(ℤ)",
    GroupClass.Z2xZ: "ℤ₂ × ℤ",
}


def pretty_group(g: GroupClass) -> str:
    return _PRETTY[g]


@dataclass(frozen=True)
class Relation:
    """Relation of G to <T_a, T_b>: equal, finite index n > 1, or infinite
    index."""

    kind: str  # "equal" | "finite_index" | "infinite_index"
    index: Optional[int] = None

    @classmethod
    def equal(cls) -> "Relation":
        return cls("equal")

    @classmethod
    def finite(cls, n: int) -> "Relation":
        if n == 1:
            return cls.equal()
        return cls("finite_index", n)

    @classmethod
    def infinite(cls) -> "Relation":
        return cls("infinite_index")

    def to_json(self) -> Union[str, Dict[str, int]]:
        if self.kind == "finite_index":
            return {"finite_index": self.index}
        return self.kind


@dataclass(frozen=True)
class Verdict:
    group_class: GroupClass
    relation: Relation
    full_group_class: GroupClass

    def to_json(self, certificates: Optional[List[dict]] = None) -> dict:
        doc = {
            "group": self.group_class.value,
            "relation": self.relation.to_json(),
            "full_group": self.full_group_class.value,
        }
        if certificates is not None:
            doc["certificates"] = certificates
        return doc


class InternalConsistencyError(AssertionError):
    """A certificate disagreed with the verdict; implementation bug."""


def full_group_class(ctx: SurfaceContext) -> GroupClass:
    regime = ctx.regime()
    return {
        "Z2": GroupClass.Z2,
        "SL2Z": GroupClass.SL2Z,
        "B3": GroupClass.B3,
        "F2": GroupClass.F2,
    }[regime]


def classify(x: XSpec, ctx: SurfaceContext) -> Verdict:
    """Total decision procedure for the structure of G = <X, T_a>."""
    full = full_group_class(ctx)
    k, i = x.k, ctx.intersection
    if k == 0:
        # G = <T_a> = Z, infinite index in every possible full group
        return Verdict(GroupClass.Z, Relation.infinite(), full)
    if i == 0:
        return Verdict(GroupClass.Z2, Relation.finite(abs(k)), full)
    if i >= 2:
        if abs(k) == 1:
            return Verdict(GroupClass.F2, Relation.equal(), full)
        return Verdict(GroupClass.F2, Relation.infinite(), full)
    # i == 1
    if k % 3 != 0:
        return Verdict(full, Relation.equal(), full)
    if ctx.is_torus:
        if k % 6 == 0:
            return Verdict(GroupClass.Z, Relation.infinite(), full)
        return Verdict(GroupClass.Z2xZ, Relation.infinite(), full)
    return Verdict(GroupClass.Z2, Relation.infinite(), full)


# ---------------------------------------------------------------------------
# conjugation of Y = T_a by powers of X (i(a,b) = 1)

CONJ_WORDS = {
    "a": "a",
    "b": "b",
    "aba^-1": "abA",
    "bab^-1": "baB",
    "a^-1ba": "Aba",
}

# residue of the positive exponent mod 3 -> canonical conjugate of a
_CONJ_TABLE = {
    ("ab", 1): ["a", "b", "aba^-1"],     # (ab)^m  a (ab)^-m
    ("ab", -1): ["a", "aba^-1", "b"],    # (ab)^-m a (ab)^m
    ("ba", 1): ["a", "bab^-1", "b"],     # (ba)^m  a (ba)^-m
    ("ba", -1): ["a", "b", "a^-1ba"],    # (ba)^-m a (ba)^m
}


def conjugation_class(x: XSpec, direction: str = "by_X") -> str:
    """Canonical form of X a X^-1 (direction "by_X") or X^-1 a X
    ("by_X_inverse"), valid whenever i(a,b) = 1.

    Returns one of the keys of CONJ_WORDS.
    """
    if direction not in ("by_X", "by_X_inverse"):
        raise ValueError(f"bad direction {direction!r}")
    if x.k == 0:
        raise ValueError("conjugation table requires k != 0")
    exponent = x.k if direction == "by_X" else -x.k
    sign = 1 if exponent > 0 else -1
    return _CONJ_TABLE[(x.form, sign)][abs(exponent) % 3]


def conjugation_word(x: XSpec, direction: str = "by_X") -> TwistWord:
    return parse_word(CONJ_WORDS[conjugation_class(x, direction)])


# ---------------------------------------------------------------------------
# generation witnesses: how to obtain T_b from X and Y = T_a

class NoWitnessError(ValueError):
    """T_b is not in G when k is a multiple of three."""


# (form, sign of k) -> witness token strings for |k| mod 3 in {1, 2}
_WITNESS_TABLE = {
    ("ab", 1): {1: "X Y X^-1", 2: "Y^-1 X Y X^-1 Y"},
    ("ab", -1): {1: "Y^-1 X Y X^-1 Y", 2: "X Y X^-1"},
    ("ba", 1): {1: "Y X Y X^-1 Y^-1", 2: "X Y X^-1"},
    ("ba", -1): {1: "X Y X^-1", 2: "Y X Y X^-1 Y^-1"},
}


def generation_witness(x: XSpec) -> List[str]:
    """Word over {X, X^-1, Y, Y^-1} that equals T_b when i(a,b) = 1.

    Only defined for k not a multiple of three; otherwise T_b lies outside
    G and NoWitnessError is raised.
    """
    if x.k % 3 == 0:
        raise NoWitnessError(
            "no witness exists: T_b is not in G when k = 0 mod 3"
        )
    sign = 1 if x.k > 0 else -1
    return _WITNESS_TABLE[(x.form, sign)][abs(x.k) % 3].split()


def substitute_witness(tokens: List[str], x: XSpec) -> TwistWord:
    """Replace X by (form)^k and Y by a in a witness word."""
    xw = expand_xform(x)
    pieces = {
        "X": xw,
        "X^-1": invert(xw),
        "Y": parse_word("a"),
        "Y^-1": parse_word("A"),
    }
    out = EMPTY
    for tok in tokens:
        if tok not in pieces:
            raise ValueError(f"bad witness token {tok!r}")
        out = concat(out, pieces[tok])
    return out


# ---------------------------------------------------------------------------
# relation suite for the i(a,b) = 1 regimes

def verify_relations(ctx: SurfaceContext) -> Dict[str, bool]:
    """Named relation checks, all expected true, in the oracle picked by
    ctx.  Only meaningful at i(a,b) = 1."""
    if ctx.intersection != 1:
        raise ValueError("relation suite applies only at intersection 1")
    w = parse_word
    checks = {
        "braid relation aba = bab": equal_in_context(w("aba"), w("bab"), ctx),
        "(ab)^3 = (ba)^3": equal_in_context(w("(ab)^3"), w("(ba)^3"), ctx),
        "(ab)^3 commutes with a": equal_in_context(
            w("(ab)^3 a"), w("a (ab)^3"), ctx
        ),
        "(ab)^3 commutes with b": equal_in_context(
            w("(ab)^3 b"), w("b (ab)^3"), ctx
        ),
        "(ab)^3 nontrivial": not is_trivial(w("(ab)^3"), ctx),
    }
    if ctx.is_torus:
        checks["(ab)^6 = 1"] = is_trivial(w("(ab)^6"), ctx)
        checks["(ab)^3 has order 2"] = order_of(w("(ab)^3"), ctx) == 2
    else:
        checks["(ab)^6 != 1"] = not is_trivial(w("(ab)^6"), ctx)
    return checks


# ---------------------------------------------------------------------------
# certificates

def _cert(name: str, ok: bool, detail: str, derived: bool = False) -> dict:
    doc = {"name": name, "ok": bool(ok), "detail": detail}
    if derived:
        doc["derived"] = True
    return doc


def certify(x: XSpec, ctx: SurfaceContext) -> Tuple[Verdict, List[dict]]:
    """Classify and confirm the verdict by independent computations.

    Raises InternalConsistencyError on any mismatch.
    """
    verdict = classify(x, ctx)
    k, i = x.k, ctx.intersection
    certs: List[dict] = []

    if k == 0:
        certs.append(_cert(
            "X trivial",
            len(expand_xform(x)) == 0,
            "k = 0 expands to the empty word",
        ))
        certs.append(_cert(
            "Y has infinite order",
            order_of(parse_word("a"), ctx) == INFINITE,
            "T_a is infinite order in every regime",
        ))
        certs.append(_cert(
            "infinite index of <T_a>",
            _cyclic_infinite_index(ctx),
            "Z sits at infinite index in the full group",
            derived=True,
        ))
    elif i == 0:
        idx = lattice_index(exponent_vector(parse_word("a")),
                            exponent_vector(expand_xform(x)))
        expected = 1 if verdict.relation.kind == "equal" else verdict.relation.index
        certs.append(_cert(
            "lattice index",
            idx == expected,
            f"det of exponent vectors gives index {idx}",
        ))
    elif i >= 2:
        graph = stallings.build_subgroup_graph(
            [parse_word("a"), expand_xform(x)]
        )
        s_index, _rank = graph.index_and_rank()
        want_equal = verdict.relation.kind == "equal"
        certs.append(_cert(
            "Stallings index",
            (s_index == 1) == want_equal and (s_index == 1 or s_index == INFINITE),
            f"folded core graph has index {s_index}",
        ))
        certs.append(_cert(
            "membership of T_b",
            graph.member(parse_word("b")) == want_equal,
            "b traces a base loop iff G is the whole group",
        ))
    elif k % 3 != 0:
        wit = substitute_witness(generation_witness(x), x)
        certs.append(_cert(
            "generation witness equals T_b",
            equal_in_context(wit, parse_word("b"), ctx),
            "substituted witness reduces to b in the i = 1 oracle",
        ))
    else:
        # i == 1, k = 0 mod 3: X is central; finer structure on the torus
        xw = expand_xform(x)
        certs.append(_cert(
            "X central",
            equal_in_context(concat(xw, parse_word("a")),
                             concat(parse_word("a"), xw), ctx)
            and equal_in_context(concat(xw, parse_word("b")),
                                 concat(parse_word("b"), xw), ctx),
            "X commutes with both twists",
        ))
        ord_x = order_of(xw, ctx)
        if ctx.is_torus:
            expected_order = 1 if k % 6 == 0 else 2
            certs.append(_cert(
                "order of X",
                ord_x == expected_order,
                f"order_of(X) = {ord_x}, expected {expected_order}",
            ))
        else:
            certs.append(_cert(
                "X nontrivial of infinite order",
                ord_x == INFINITE,
                f"order_of(X) = {ord_x} in the Burau oracle",
            ))
        certs.append(_cert(
            "Y has infinite order",
            order_of(parse_word("a"), ctx) == INFINITE,
            "T_a is infinite order",
        ))

    bad = [c["name"] for c in certs if not c["ok"]]
    if bad:
        raise InternalConsistencyError(
            f"certificates disagree with verdict for {x}, {ctx}: {bad}"
        )
    return verdict, certs


def _cyclic_infinite_index(ctx: SurfaceContext) -> bool:
    """<T_a> has infinite index in the full group, checked per regime."""
    regime = ctx.regime()
    if regime == "Z2":
        # exponent lattice of <a> has rank 1
        return lattice_index((1, 0), (0, 0)) == INFINITE
    if regime == "F2":
        graph = stallings.build_subgroup_graph([parse_word("a")])
        return graph.index_and_rank()[0] == INFINITE
    # SL2(Z) / B3: b never lies in any <a>-coset structure of finite index;
    # certified by b not being a power of a (distinct exponent vectors of
    # a^n vs b for the abelianized images would require matching b-count)
    return all(
        not equal_in_context(parse_word("a").pow(n), parse_word("b"), ctx)
        for n in range(-6, 7)
    )
