"""Acceptance suite: one test per criterion, all exact (zero tolerance).

Run with ``pytest tests/test_acceptance.py -s`` to see one PASS line per
criterion.
"""

import math
import random

import pytest

from twistgroups.algebra import INFINITE, INT_IDENTITY, LAURENT_IDENTITY, IntMat2, LaurentPoly
from twistgroups.classify import (
    CONJ_WORDS,
    certify,
    classify,
    conjugation_class,
    generation_witness,
    substitute_witness,
)
from twistgroups.reps import (
    SurfaceContext,
    equal_in_context,
    eval_burau,
    eval_sl2,
    exponent_vector,
    order_of,
)
from twistgroups.stallings import build_subgroup_graph, from_permutations
from twistgroups.torus import CurveClass, intersection, twist_action
from twistgroups.words import (
    EMPTY,
    TwistWord,
    XSpec,
    concat,
    expand_xform,
    free_reduce,
    invert,
    parse_word,
)

w = parse_word
SEED = 20240823

CTX_SL2 = SurfaceContext(1, is_torus=True)
CTX_B3 = SurfaceContext(1, is_torus=False)
GRID_CONTEXTS = [
    SurfaceContext(0),
    CTX_SL2,
    CTX_B3,
    SurfaceContext(2),
    SurfaceContext(3),
    SurfaceContext(5),
]


def report(n, text):
    print(f"ACCEPTANCE {n}: PASS - {text}")


def test_criterion_1_main_theorem_grid():
    cases = 0
    for ctx in GRID_CONTEXTS:
        for form in ("ab", "ba"):
            for k in range(-12, 13):
                verdict, certs = certify(XSpec(form, k), ctx)
                assert all(c["ok"] for c in certs)
                assert verdict == classify(XSpec("ab", abs(k)), ctx)
                cases += 1
    assert cases == 2 * 25 * 6
    report(1, f"main-theorem grid, {cases} classify+certify cases")


def test_criterion_2_chain_relation():
    assert eval_sl2(w("(ab)^6")) == INT_IDENTITY
    minus_i = IntMat2(-1, 0, 0, -1)
    assert eval_sl2(w("(ab)^3")) == minus_i
    assert minus_i != INT_IDENTITY
    burau6 = eval_burau(w("(ab)^6"))
    t6 = LaurentPoly.t(6)
    assert burau6.rows() == [[t6, LaurentPoly()], [LaurentPoly(), t6]]
    assert burau6 != LAURENT_IDENTITY
    report(2, "(ab)^6 = I and (ab)^3 = -I in SL2(Z); (ab)^6 = t^6 I != I in Burau")


def test_criterion_3_braid_relation():
    assert eval_sl2(w("aba")) == eval_sl2(w("bab"))
    assert eval_burau(w("aba")) == eval_burau(w("bab"))
    assert free_reduce(w("aba")) != free_reduce(w("bab"))
    report(3, "braid relation in both i=1 oracles, fails under free reduction")


def test_criterion_4_conjugation_table():
    checks = 0
    for form in ("ab", "ba"):
        for direction in ("by_X", "by_X_inverse"):
            for k in range(1, 10):
                x = XSpec(form, k)
                xw = expand_xform(x)
                if direction == "by_X_inverse":
                    xw = invert(xw)
                conj = concat(concat(xw, w("a")), invert(xw))
                table = w(CONJ_WORDS[conjugation_class(x, direction)])
                assert equal_in_context(conj, table, CTX_B3)
                assert equal_in_context(conj, table, CTX_SL2)
                checks += 2
    assert checks == 72
    report(4, "conjugation table: 72 exact equalities (Burau and SL2)")


def test_criterion_5_generation_witnesses():
    checks = 0
    for form in ("ab", "ba"):
        for k in range(1, 10):
            if k % 3 == 0:
                continue
            for signed in (k, -k):
                x = XSpec(form, signed)
                wit = substitute_witness(generation_witness(x), x)
                assert equal_in_context(wit, w("b"), CTX_B3)
                assert equal_in_context(wit, w("b"), CTX_SL2)
                checks += 2
    assert checks == 48
    report(5, "generation witnesses: 48 exact checks")


def test_criterion_6_index_certificates():
    from twistgroups.algebra import lattice_index

    for form in ("ab", "ba"):
        for k in range(1, 11):
            idx = lattice_index(
                exponent_vector(w("a")),
                exponent_vector(expand_xform(XSpec(form, k))),
            )
            assert idx == k
        for k in (1, -1):
            g = build_subgroup_graph([w("a"), expand_xform(XSpec(form, k))])
            assert g.index_and_rank()[0] == 1
        for k in list(range(2, 7)) + list(range(-6, -1)):
            g = build_subgroup_graph([w("a"), expand_xform(XSpec(form, k))])
            assert g.index_and_rank()[0] == INFINITE
    report(6, "lattice indices |k| at i=0; Stallings index 1 / infinite at i>=2")


def test_criterion_7_nielsen_schreier():
    rng = random.Random(SEED)
    made = 0
    while made < 20:
        q = rng.randint(1, 8)
        pa, pb = list(range(q)), list(range(q))
        rng.shuffle(pa)
        rng.shuffle(pb)
        try:
            g = from_permutations(pa, pb)
        except ValueError:
            continue
        index, rank = g.index_and_rank()
        assert (index, rank) == (q, q + 1)
        made += 1
    report(7, "20 random complete coverings: rank = q + 1 exactly")


def test_criterion_8_centrality_and_torsion():
    center = w("(ab)^3")
    for gen in ("a", "b"):
        assert eval_burau(concat(center, w(gen))) == eval_burau(concat(w(gen), center))
    assert order_of(center, CTX_SL2) == 2
    assert order_of(center, CTX_B3) == INFINITE
    report(8, "(ab)^3 central in Burau; order 2 on torus, infinite otherwise")


def test_criterion_9_twist_intersection_formula():
    rng = random.Random(SEED)

    def random_class():
        while True:
            p, q = rng.randint(-9, 9), rng.randint(-9, 9)
            if (p, q) != (0, 0) and math.gcd(p, q) == 1:
                return CurveClass(p, q)

    for _ in range(200):
        v, u, n = random_class(), random_class(), rng.randint(-20, 20)
        assert intersection(twist_action(v, u, n), u) == \
            abs(n) * intersection(v, u) ** 2
    a, b = CurveClass(1, 0), CurveClass(0, 1)
    assert intersection(twist_action(a, b, 2), b) == 2
    report(9, "twist-intersection formula: 200 random triples + i(T_a^2(b),b)=2")


def test_criterion_10_property_suites():
    rng = random.Random(SEED)
    alphabet = [("a", 1), ("a", -1), ("b", 1), ("b", -1)]

    def random_word(maxlen):
        return TwistWord(tuple(
            rng.choice(alphabet) for _ in range(rng.randint(0, maxlen))
        ))

    # free-reduction idempotence
    for _ in range(100):
        u = random_word(25)
        assert free_reduce(free_reduce(u)) == free_reduce(u)

    # det multiplicativity on random integer matrices
    for _ in range(100):
        m1 = IntMat2(*(rng.randint(-9, 9) for _ in range(4)))
        m2 = IntMat2(*(rng.randint(-9, 9) for _ in range(4)))
        assert (m1 * m2).det() == m1.det() * m2.det()

    # Burau determinant law det = (-t)^(exponent sum)
    for _ in range(100):
        u = random_word(15)
        s = sum(exponent_vector(u))
        assert eval_burau(u).det() == LaurentPoly.t(s, (-1) ** (s % 2))

    # folding confluence under generator shuffles
    gens = [w("a^2"), w("b"), w("abA"), w("(ab)^3"), w("baBA")]
    reference = build_subgroup_graph(gens)
    for _ in range(100):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert build_subgroup_graph(shuffled) == reference

    # membership vs an independent oracle on words of length <= 6:
    # a word lies in <a^2, b, aba^-1> iff its a-exponent is even
    parity_graph = build_subgroup_graph([w("a^2"), w("b"), w("abA")])
    for _ in range(100):
        u = random_word(6)
        a_exp = exponent_vector(u)[0]
        assert parity_graph.member(u) == (a_exp % 2 == 0)
    report(10, "property suites: 5 x 100 randomized instances, fixed seed")
