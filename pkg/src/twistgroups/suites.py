"""Named verification suites.

Each suite re-derives one of the classification's ingredient statements
by independent computation and returns a list of (check name, passed)
pairs.  The CLI exposes them through ``verify --suite NAME``.
"""

from __future__ import annotations

import random
from typing import Callable, Dict, List, Tuple

from . import stallings
from .classify import (
    CONJ_WORDS,
    certify,
    classify,
    conjugation_class,
    generation_witness,
    substitute_witness,
)
from .reps import (
    INFINITE,
    SurfaceContext,
    equal_in_context,
    eval_burau,
    eval_sl2,
    is_trivial,
    order_of,
)
from .torus import CurveClass, intersection, twist_action
from .words import XSpec, concat, expand_xform, invert, parse_word

Check = Tuple[str, bool]

CTX_TORUS = SurfaceContext(1, is_torus=True)
CTX_B3 = SurfaceContext(1, is_torus=False)


def suite_lemma_conjugation(kmax: int = 9) -> List[Check]:
    """Conjugates of T_a by powers of X match the table, in both i = 1
    oracles."""
    checks: List[Check] = []
    for form in ("ab", "ba"):
        for k in range(1, kmax + 1):
            for direction in ("by_X", "by_X_inverse"):
                x = XSpec(form, k)
                xw = expand_xform(x)
                if direction == "by_X_inverse":
                    xw = invert(xw)
                conj = concat(concat(xw, parse_word("a")), invert(xw))
                table = parse_word(CONJ_WORDS[conjugation_class(x, direction)])
                for ctx, tag in ((CTX_TORUS, "sl2"), (CTX_B3, "burau")):
                    checks.append((
                        f"conj {form} k={k} {direction} [{tag}]",
                        equal_in_context(conj, table, ctx),
                    ))
    return checks


def suite_prop_generation(kmax: int = 9) -> List[Check]:
    """Substituted generation witnesses equal T_b in both i = 1 oracles."""
    checks: List[Check] = []
    b = parse_word("b")
    for form in ("ab", "ba"):
        for k in range(1, kmax + 1):
            if k % 3 == 0:
                continue
            for signed_k in (k, -k):
                x = XSpec(form, signed_k)
                wit = substitute_witness(generation_witness(x), x)
                for ctx, tag in ((CTX_TORUS, "sl2"), (CTX_B3, "burau")):
                    checks.append((
                        f"witness {form} k={signed_k} [{tag}]",
                        equal_in_context(wit, b, ctx),
                    ))
    return checks


def suite_chain_relation(kmax: int = 0) -> List[Check]:
    """(ab)^6 trivial on the torus but not in B_3; (ab)^3 an involution on
    the torus and central everywhere."""
    w = parse_word
    return [
        ("(ab)^6 = 1 on the torus", is_trivial(w("(ab)^6"), CTX_TORUS)),
        ("(ab)^3 != 1 on the torus", not is_trivial(w("(ab)^3"), CTX_TORUS)),
        ("(ab)^3 has order 2 on the torus", order_of(w("(ab)^3"), CTX_TORUS) == 2),
        ("(ab)^6 != 1 in B3", not is_trivial(w("(ab)^6"), CTX_B3)),
        ("(ab)^3 central in B3",
         equal_in_context(w("(ab)^3 a"), w("a (ab)^3"), CTX_B3)
         and equal_in_context(w("(ab)^3 b"), w("b (ab)^3"), CTX_B3)),
        ("braid relation [sl2]", eval_sl2(w("aba")) == eval_sl2(w("bab"))),
        ("braid relation [burau]", eval_burau(w("aba")) == eval_burau(w("bab"))),
    ]


def suite_nielsen_schreier(count: int = 20, seed: int = 20240823) -> List[Check]:
    """Random complete folded graphs on q <= 8 vertices have rank q + 1."""
    rng = random.Random(seed)
    checks: List[Check] = []
    made = 0
    while made < count:
        q = rng.randint(1, 8)
        perm_a = list(range(q))
        perm_b = list(range(q))
        rng.shuffle(perm_a)
        rng.shuffle(perm_b)
        try:
            graph = stallings.from_permutations(perm_a, perm_b)
        except ValueError:
            continue
        index, rank = graph.index_and_rank()
        checks.append((
            f"covering #{made + 1}: q={q} index/rank",
            index == q and rank == q + 1,
        ))
        made += 1
    return checks


def suite_main_theorem_grid(kmax: int = 12) -> List[Check]:
    """Classify-and-certify every case of the grid, plus the stated
    symmetry and k-sign invariances."""
    contexts = [
        SurfaceContext(0),
        SurfaceContext(1, is_torus=True),
        SurfaceContext(1, is_torus=False),
        SurfaceContext(2),
        SurfaceContext(3),
        SurfaceContext(5),
    ]
    checks: List[Check] = []
    for ctx in contexts:
        tag = f"i={ctx.intersection}" + (",torus" if ctx.is_torus else "")
        for k in range(-kmax, kmax + 1):
            verdicts = []
            ok = True
            for form in ("ab", "ba"):
                try:
                    verdict, _certs = certify(XSpec(form, k), ctx)
                    verdicts.append(verdict)
                except AssertionError:
                    ok = False
            ok = ok and len(set(verdicts)) == 1
            ok = ok and classify(XSpec("ab", k), ctx) == classify(XSpec("ab", -k), ctx)
            checks.append((f"grid {tag} k={k}", ok))
    return checks


def suite_twist_intersection(count: int = 200, seed: int = 20240823) -> List[Check]:
    """i(T_v^n(w), w) = |n| i(v,w)^2 on random torus classes."""
    rng = random.Random(seed)
    checks: List[Check] = []

    def random_class() -> CurveClass:
        import math
        while True:
            p, q = rng.randint(-9, 9), rng.randint(-9, 9)
            if (p, q) != (0, 0) and math.gcd(p, q) == 1:
                return CurveClass(p, q)

    for trial in range(count):
        v, w, n = random_class(), random_class(), rng.randint(-20, 20)
        got = intersection(twist_action(v, w, n), w)
        want = abs(n) * intersection(v, w) ** 2
        checks.append((f"twist formula #{trial + 1}", got == want))
    a, b = CurveClass(1, 0), CurveClass(0, 1)
    checks.append((
        "i(T_a^2(b), b) = 2",
        intersection(twist_action(a, b, 2), b) == 2,
    ))
    return checks


SUITES: Dict[str, Callable[..., List[Check]]] = {
    "lemma-conjugation": suite_lemma_conjugation,
    "prop-generation": suite_prop_generation,
    "chain-relation": suite_chain_relation,
    "nielsen-schreier": suite_nielsen_schreier,
    "main-theorem-grid": suite_main_theorem_grid,
    "twist-intersection": suite_twist_intersection,
}


def run_suite(name: str, kmax: int | None = None) -> List[Check]:
    if name == "all":
        checks: List[Check] = []
        for suite_name in SUITES:
            checks.extend(
                (f"{suite_name}: {n}", ok) for n, ok in run_suite(suite_name, kmax)
            )
        return checks
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; options: {sorted(SUITES)} or 'all'")
    fn = SUITES[name]
    if kmax is not None and name in (
        "lemma-conjugation", "prop-generation", "main-theorem-grid"
    ):
        return fn(kmax)
    return fn()
