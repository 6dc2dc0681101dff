import random

import pytest
from hypothesis import given, settings, strategies as st

from garside.catalog import build, distinguished
from garside.element import (
    Element,
    _bubble,
    conjugate,
    delta_power,
    exponent_sum,
    format_element,
    from_factor_words,
    identity,
    inverse,
    is_garside_element,
    multiply,
    normalize,
    parse_element,
    power,
    simple_element,
)
from garside.lattice import StructureError
from garside.words import WordParseError

import freegroup
from conftest import SMALL_GROUPS, group, random_element

ALL = SMALL_GROUPS + ["A:4", "B:4", "D:4", "dualA:4"]


def P(s, w):
    return parse_element(s, w)


def test_normalize_basics():
    s = group("A:2")
    d = normalize(s, 0, [s.from_atoms([0, 1, 0])])
    assert (d.u, d.factors) == (1, ())
    e = normalize(s, 0, [])
    assert (e.u, e.factors) == (0, ())
    assert normalize(s, 2, [0, s.delta, 0]) == delta_power(s, 3)


def test_braid5_square_of_g1_matches_printed_factorization():
    s = group("A:4")
    g1 = P(s, "s1 s4 s3 s2 s1")
    assert g1.length == 1
    expected = from_factor_words(s, 0, [["s1", "s4", "s3", "s2", "s1", "s4", "s3", "s2"], ["s1", "s2"]])
    sq = power(g1, 2)
    assert sq == expected and sq.u == 0 and sq.length == 2
    assert [s.norm(a) for a in sq.factors] == [8, 2]


def test_braid5_epsilon_facts():
    s, e = build("A:4")
    eps = distinguished(s, e, "epsilon")
    assert (eps.inf, eps.length) == (0, 2)
    assert power(eps, 4) == delta_power(s, 2)
    assert exponent_sum(eps) == 5
    assert conjugate(P(s, "s1 s4 s3 s2 s1"), P(s, "s1")) == eps
    g1 = P(s, "s1 (s4 s3 s2 s1)")
    assert g1.length == 1


def test_braid3_delta_cubed():
    s = group("A:2")
    delta = P(s, "s2 s1")
    assert power(delta, 3) == delta_power(s, 2)
    assert exponent_sum(delta_power(s, 1)) == 3
    assert exponent_sum(identity(s)) == 0


def test_inverse_and_power_basics():
    s = group("A:2")
    assert inverse(identity(s)) == identity(s)
    assert inverse(delta_power(s, 1)) == delta_power(s, -1)
    g = P(s, "s1 s2^-1 s1")
    assert power(g, 0) == identity(s)
    assert multiply(g, identity(s)) == g
    assert multiply(delta_power(s, 2), delta_power(s, -5)) == delta_power(s, -3)


def test_conjugate_trivial_cases():
    s = group("A:3")
    g = P(s, "s1 s2^-1 s3")
    assert conjugate(g, identity(s)) == g
    x = P(s, "s2 s3^-1 s1 s1")
    assert conjugate(delta_power(s, s.m), x) == delta_power(s, s.m)


def test_exponent_sum_rejected_without_homogeneity():
    s = group("A:2")
    s.homogeneous = False
    try:
        with pytest.raises(StructureError):
            exponent_sum(identity(s))
    finally:
        s.homogeneous = True


def test_is_garside_element():
    s = group("A:2")
    assert is_garside_element(delta_power(s, s.m))
    assert not is_garside_element(P(s, "s1"))
    with pytest.raises(StructureError):
        is_garside_element(delta_power(s, -1))
    z = group("Z:2,2")
    assert is_garside_element(P(z, "z1^2 z2^3"))


@pytest.mark.parametrize("desc", ALL)
def test_normal_form_invariants(desc, rng):
    s = group(desc)
    for _ in range(30):
        g = random_element(s, rng, 8)
        for a in g.factors:
            assert a not in (s.identity, s.delta)
        for a, b in zip(g.factors, g.factors[1:]):
            assert s.make_left_weighted(a, b) == (a, b)
        assert normalize(s, g.u, g.factors) == g
        # re-split every factor into atoms
        atoms = [s.atoms[i] for a in g.factors for i in s.word(a)]
        assert normalize(s, g.u, atoms) == g
        assert _bubble(s, g.u, atoms) == (g.u, list(g.factors))


@pytest.mark.parametrize("desc", ALL)
def test_group_axioms(desc, rng):
    s = group(desc)
    for _ in range(100):
        g = random_element(s, rng, rng.randint(0, 8))
        assert multiply(g, inverse(g)) == identity(s)
        assert multiply(inverse(g), g) == identity(s)


@pytest.mark.parametrize("desc", ALL)
def test_associativity_and_exponent_sum(desc, rng):
    s = group(desc)
    for _ in range(40):
        g, h, k = (random_element(s, rng, 5) for _ in range(3))
        assert multiply(multiply(g, h), k) == multiply(g, multiply(h, k))
        gh = multiply(g, h)
        assert exponent_sum(gh) == exponent_sum(g) + exponent_sum(h)
        assert exponent_sum(conjugate(g, h)) == exponent_sum(g)
        assert gh.inf >= g.inf + h.inf
        assert gh.sup <= g.sup + h.sup
        d = conjugate(g, delta_power(s, 1))
        assert (d.inf, d.sup) == (g.inf, g.sup)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_normal_forms_against_free_group_action(n, rng):
    """Words and their normal forms act identically on the free group."""
    s = group(f"A:{n}")
    for _ in range(60):
        letters = [(rng.randint(1, n), rng.choice((1, -1))) for _ in range(rng.randint(0, 10))]
        word = " ".join(f"s{i}^{e}" for i, e in letters)
        g = P(s, word)
        assert freegroup.signature(n + 1, freegroup.element_letters(g)) == freegroup.signature(n + 1, letters)


@pytest.mark.parametrize("n", [2, 3])
def test_distinct_normal_forms_are_distinct_braids(n, rng):
    s = group(f"A:{n}")
    seen = {}
    for _ in range(300):
        g = random_element(s, rng, 5)
        sig = freegroup.signature(n + 1, freegroup.element_letters(g))
        if sig in seen:
            assert seen[sig] == g
        seen[sig] = g


def test_permutation_backend_normal_forms_agree():
    t = build("A:5", backend="table")[0]
    p = build("A:6")[0]
    q = build("A:5", backend="perm")[0]
    rng = random.Random(7)
    for _ in range(30):
        w = " ".join(f"s{rng.randint(1, 5)}^{rng.choice((1, -1))}" for _ in range(8))
        a, b = P(t, w), P(q, w)
        assert a.u == b.u
        assert a == from_factor_words(t, b.u, [q.word_names(x) for x in b.factors])
    assert p.size == 5040


def test_parse_and_format_round_trip(rng):
    for desc in ["A:3", "D:4", "dualA:3", "torus:3", "Z:2,3"]:
        s = group(desc)
        for _ in range(20):
            g = random_element(s, rng, 7)
            assert P(s, format_element(g)) == g


def test_parser_errors_report_positions():
    s = group("A:2")
    with pytest.raises(WordParseError) as exc:
        P(s, "s1 s3")
    assert exc.value.pos == 3
    for bad in ["(s1", "s1)", "s1^", "^2", "s1 $", "2"]:
        with pytest.raises(WordParseError):
            P(s, bad)
    assert P(s, "(s1 s2)^3 D^-2") == identity(s)
    assert P(s, "1") == identity(s)
    assert P(s, "s1^0 D^1") == delta_power(s, 1)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 3), st.sampled_from([1, -1])), max_size=12))
def test_word_evaluation_is_a_homomorphism(letters):
    s = group("A:3")
    words = [f"s{i}^{e}" for i, e in letters]
    cut = len(words) // 2
    left, right = " ".join(words[:cut]) or "1", " ".join(words[cut:]) or "1"
    assert P(s, " ".join(words) or "1") == multiply(P(s, left), P(s, right))
    assert freegroup.signature(4, freegroup.element_letters(P(s, " ".join(words) or "1"))) == freegroup.signature(4, letters)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_power_matches_repeated_product(data):
    s = group(data.draw(st.sampled_from(["A:3", "I2:5", "dualA:3", "torus:3"])))
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    g = random_element(s, rng, 4)
    k = data.draw(st.integers(-6, 6))
    expected = identity(s)
    step = g if k >= 0 else inverse(g)
    for _ in range(abs(k)):
        expected = multiply(expected, step)
    assert power(g, k) == expected


def test_elements_from_different_structures_do_not_mix():
    a, b = group("A:2"), group("A:3")
    with pytest.raises(StructureError):
        multiply(simple_element(a, a.atoms[0]), simple_element(b, b.atoms[0]))
