import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from garside.catalog import build, distinguished
from garside.conjugacy import conjugacy_decide, orbit, summit_representative
from garside.element import (
    conjugate,
    delta_power,
    exponent_sum,
    identity,
    inverse,
    multiply,
    normalize,
    parse_element,
    power,
)
from garside.lattice import StructureError
from garside.periodicity import (
    NotPeriodic,
    cyclic_generator,
    ext_gcd,
    exp_sum_conjugacy,
    is_periodic,
    kth_root_of_periodic,
    periodic_profile,
    periodic_root_uniqueness_check,
    power_conjugacy_transfer,
    primitive_table,
    slim_exponent,
    translation_limits,
)

from conftest import group, random_element

P = parse_element


def dist(desc, which):
    s, e = build(desc)
    return distinguished(s, e, which)


def catalog_periodic():
    out = []
    for desc in ["A:2", "A:3", "A:4", "B:3", "D:4", "I2:5", "I2:6", "dualA:3", "dualI2:5", "torus:3"]:
        s, e = build(desc)
        for which in ("delta", "epsilon", "big_delta"):
            try:
                out.append((desc, which, distinguished(s, e, which)))
            except ValueError:
                pass
    t = group("torus:3")
    out += [("torus:3", "x", P(t, "x")), ("torus:3", "y", P(t, "y"))]
    return out


CATALOG = catalog_periodic()
IDS = [f"{d}-{w}" for d, w, _ in CATALOG]


def test_translation_limits_examples():
    s = group("A:4")
    for k in (-2, 0, 3):
        assert translation_limits(delta_power(s, k)) == (k, k, 0)
    assert translation_limits(dist("A:4", "epsilon"))[0] == Fraction(1, 2)
    assert translation_limits(dist("A:5", "epsilon"))[0] == Fraction(2, 5)


def test_is_periodic_examples():
    s = group("A:2")
    assert is_periodic(delta_power(s, 1))
    assert not is_periodic(P(s, "s1"))
    assert is_periodic(dist("A:4", "epsilon"))


def test_profile_examples():
    p5 = periodic_profile(dist("A:4", "epsilon"))
    assert (p5.p, p5.q, p5.m, p5.slim, p5.precentral, p5.order_in_quotient) == (1, 2, 2, True, False, 4)
    p6 = periodic_profile(dist("A:5", "epsilon"))
    assert (p6.p, p6.q, p6.slim, p6.precentral) == (2, 5, False, True)
    s = group("A:3")
    for k in range(-3, 5):
        pk = periodic_profile(delta_power(s, k))
        assert (pk.p, pk.q, pk.slim, pk.precentral) == (k, 1, True, k % 2 == 0)
    with pytest.raises(NotPeriodic):
        periodic_profile(P(s, "s1"))
    assert p5.to_json() == {"p": 1, "q": 2, "m": 2, "slim": True, "precentral": False, "order_in_quotient": 4}


def test_slim_exponent_examples():
    assert slim_exponent(dist("A:4", "epsilon")) == 1
    assert slim_exponent(dist("A:5", "epsilon")) == 3
    assert slim_exponent(delta_power(group("A:2"), 1)) == 1
    with pytest.raises(NotPeriodic):
        slim_exponent(identity(group("A:2")))
    with pytest.raises(NotPeriodic):
        slim_exponent(P(group("A:2"), "s1"))


@pytest.mark.parametrize("desc,which,g", CATALOG, ids=IDS)
def test_slim_exponent_properties(desc, which, g):
    for k in (1, 2, 3, -1, -2):
        h = power(g, k)
        prof = periodic_profile(h)
        if prof.p == 0:
            continue
        r = slim_exponent(h)
        hr = periodic_profile(power(h, r))
        assert hr.slim
        assert math.gcd(r, prof.order_in_quotient) == 1
        # no smaller exponent works
        mm = prof.m // math.gcd(prof.p, prof.m)
        for r2 in range(1, r):
            assert (prof.p * r2 - 1) % prof.q != 0 or math.gcd(r2, mm) != 1


def test_ext_gcd():
    rng = random.Random(3)
    for _ in range(200):
        a, b = rng.randint(-50, 50), rng.randint(-50, 50)
        d, x, y = ext_gcd(a, b)
        assert d == math.gcd(a, b) and a * x + b * y == d


def test_cyclic_generator_examples():
    s = group("A:2")
    d = delta_power(s, 1)
    h, r, t = cyclic_generator(d)
    assert power(h, s.m) == delta_power(s, s.m)
    eps = dist("A:4", "epsilon")
    assert cyclic_generator(eps) == (eps, 1, 0)
    delta = dist("A:2", "delta")
    assert cyclic_generator(delta) == (delta, 1, 0)
    with pytest.raises(NotPeriodic):
        cyclic_generator(identity(s))


@pytest.mark.parametrize("desc,which,g", CATALOG, ids=IDS)
def test_cyclic_generator_recovers_both(desc, which, g):
    for k in (1, 2, -3):
        h = power(g, k)
        if h.u == 0 and not h.factors:
            continue
        gen, r, t = cyclic_generator(h)
        prof = periodic_profile(h)
        e = math.gcd(prof.p, prof.m)
        assert power(gen, prof.p // e) == h
        assert power(gen, prof.q * prof.m // e) == delta_power(h.structure, prof.m)


def test_power_conjugacy_transfer():
    s6, e6 = build("A:5")
    eps = distinguished(s6, e6, "epsilon")
    x = P(s6, "s2 s4^-1 s5 s1")
    h = conjugate(eps, x)
    ok, w = power_conjugacy_transfer(eps, h, 3)
    assert ok and conjugate(eps, w) == h
    assert power_conjugacy_transfer(eps, h, 1)[0] == conjugacy_decide(eps, h)[0]
    with pytest.raises(ValueError):
        power_conjugacy_transfer(eps, h, 5)
    t = group("torus:3")
    assert power_conjugacy_transfer(P(t, "x"), P(t, "y"), 2) == (False, None)


def test_uniqueness_check_examples():
    s = group("A:2")
    delta = P(s, "s2 s1")
    assert periodic_root_uniqueness_check(delta, 2, 3, 5)
    assert summit_representative(power(delta, 15))[0] == delta_power(s, 10)
    assert summit_representative(power(delta, 3))[0] == delta_power(s, 2)
    t = group("torus:4")
    x = P(t, "x")
    assert power(x, 8) == delta_power(t, 2) and power(x, 4) == delta_power(t, 1)
    assert periodic_root_uniqueness_check(x, 1, 4, 2)
    assert periodic_root_uniqueness_check(x, 0, 1, 1)


def test_kth_root_examples():
    s = group("A:2")
    d2 = delta_power(s, 2)
    assert kth_root_of_periodic(d2, 1) == d2
    root = kth_root_of_periodic(d2, 3)
    assert root is not None and power(root, 3) == d2
    assert conjugacy_decide(root, P(s, "s2 s1"))[0]
    assert kth_root_of_periodic(d2, 5) is None
    with pytest.raises(NotPeriodic):
        kth_root_of_periodic(P(s, "s1"), 2)


def _roots_exhaustive(h, k, spread):
    s = h.structure
    found = []
    for u in range(-spread, spread + 1):
        for a in s.simples():
            if a == s.delta:
                continue
            x = normalize(s, u, [a])
            if conjugacy_decide(power(x, k), h)[0]:
                found.append(x)
    return found


@pytest.mark.parametrize("desc", ["A:2", "torus:2", "torus:3", "I2:4", "dualA:2"])
def test_kth_root_scan_window_matches_exhaustive(desc):
    s = group(desc)
    m = s.m
    for u in range(0, m + 1):
        for a in s.simples():
            if a == s.delta:
                continue
            h = normalize(s, u, [a])
            if not is_periodic(h):
                continue
            for k in range(2, m * s.delta_norm + 1):
                fast = kth_root_of_periodic(h, k)
                slow = _roots_exhaustive(h, k, 2 * m + 2)
                assert (fast is not None) == bool(slow), (h, k)


def test_exp_sum_conjugacy():
    s, e = build("A:2")
    d = distinguished(s, e, "delta")
    eps = distinguished(s, e, "epsilon")
    big = delta_power(s, 1)
    assert exp_sum_conjugacy(power(big, 2), power(d, 3))
    assert not exp_sum_conjugacy(d, power(d, 2))
    assert exp_sum_conjugacy(eps, big) and conjugacy_decide(eps, big)[0]
    t = group("torus:3")
    x, y = P(t, "x"), P(t, "y")
    assert exponent_sum(x) == exponent_sum(y)
    assert not conjugacy_decide(x, y)[0]
    with pytest.raises(StructureError):
        exp_sum_conjugacy(x, y)
    with pytest.raises(StructureError):
        exp_sum_conjugacy(P(group("Z:1,1"), "D"), P(group("Z:1,1"), "D"))


@pytest.mark.parametrize("desc", ["A:2", "A:3", "I2:4", "I2:5", "dualA:3", "dualI2:5"])
def test_exp_sum_agrees_with_conjugacy(desc):
    s, e = build(desc)
    elems = []
    for which in ("delta", "epsilon", "big_delta"):
        try:
            x = distinguished(s, e, which)
        except ValueError:
            continue
        elems += [power(x, k) for k in (1, 2, 3)]
    for g in elems:
        for h in elems:
            assert exp_sum_conjugacy(g, h) == conjugacy_decide(g, h)[0]


def test_primitive_table_examples():
    s = group("A:2")
    reps = primitive_table(s)
    assert len(reps) == 2
    assert any(conjugacy_decide(r, P(s, "s2 s1"))[0] for r in reps)
    assert any(conjugacy_decide(r, delta_power(s, 1))[0] for r in reps)
    assert conjugacy_decide(P(s, "s2 s1 s1"), delta_power(s, 1))[0]
    t = group("torus:3")
    assert primitive_table(t) == [P(t, "x"), P(t, "y")]
    z = group("Z:1,1")
    assert primitive_table(z) == [delta_power(z, 1)]


@pytest.mark.parametrize("desc", ["A:3", "B:2", "I2:5", "I2:6", "dualA:3", "dualI2:4", "torus:4", "Z:1,2"])
def test_primitive_table_soundness(desc):
    s = group(desc)
    reps = primitive_table(s)
    assert reps == sorted(reps, key=lambda h: h.sort_key())
    top = s.m * s.delta_norm
    for h in reps:
        assert any(power(h, k) == delta_power(s, s.m) for k in range(1, top + 1))
        assert all(kth_root_of_periodic(h, k) is None for k in range(2, top + 1))
    for i, a in enumerate(reps):
        for b in reps[i + 1 :]:
            assert not conjugacy_decide(a, b)[0]
            assert not conjugacy_decide(a, inverse(b))[0]


def periodic_random(s, rng):
    """Random conjugates of powers of catalog periodic elements."""
    base = [delta_power(s, 1)]
    for desc, which, g in CATALOG:
        if g.structure is s:
            base.append(g)
    g = power(rng.choice(base), rng.choice([-3, -2, -1, 1, 2, 3, 4]))
    return conjugate(g, random_element(s, rng, 3))


@pytest.mark.parametrize("desc", ["A:2", "A:3", "I2:5", "dualA:3", "torus:3"])
def test_len_zero_iff_periodic(desc, rng):
    s = group(desc)
    for _ in range(30):
        g = random_element(s, rng, rng.randint(1, 6))
        assert (translation_limits(g)[2] == 0) == is_periodic(g)
        h = periodic_random(s, rng)
        assert is_periodic(h) and translation_limits(h)[2] == 0


@pytest.mark.parametrize("desc", ["A:2", "A:3", "I2:5", "dualA:3", "torus:3"])
def test_floor_ceil_of_limits(desc, rng):
    s = group(desc)
    for _ in range(25):
        g = random_element(s, rng, rng.randint(1, 6))
        lo, hi, _ = translation_limits(g)
        rep = summit_representative(g)[0]
        assert rep.inf == math.floor(lo)
        assert rep.sup == math.ceil(hi)


@pytest.mark.parametrize("desc,which,g", CATALOG, ids=IDS)
def test_periodic_power_laws(desc, which, g):
    prof = periodic_profile(g)
    inf_g = translation_limits(g)[0]
    for k in range(-6, 7):
        gk = power(g, k)
        assert translation_limits(gk)[0] == k * inf_g
        rep = summit_representative(gk)[0]
        assert rep.length in (0, 1)
        assert (rep.length == 0) == (k % prof.q == 0)
        if prof.precentral and k:
            assert periodic_profile(gk).precentral


@pytest.mark.parametrize("desc,which,g", CATALOG, ids=IDS)
def test_slim_stable_members_satisfy_product_identity(desc, which, g):
    s = g.structure
    for k in (1, 2, 3):
        h = power(g, k)
        prof = periodic_profile(h)
        if not prof.slim or prof.q < 2:
            continue
        for mem in orbit(h, "stable").members:
            assert mem.length == 1
            u, a = mem.u, mem.factors[0]
            word = [s.tau(a, j * u) for j in range(prof.q - 1, -1, -1)]
            assert normalize(s, 0, word) == delta_power(s, 1)


@pytest.mark.parametrize("desc,which,g", CATALOG, ids=IDS)
def test_integer_inf_characterisation(desc, which, g):
    s = g.structure
    for k in range(-4, 5):
        h = power(g, k)
        t = translation_limits(h)[0]
        if t.denominator == 1:
            assert summit_representative(h)[0] == delta_power(s, t.numerator)
            if t.numerator % s.m == 0:
                assert h == delta_power(s, t.numerator)
        else:
            assert summit_representative(h)[0].length == 1


@pytest.mark.parametrize("desc,which,g", CATALOG, ids=IDS)
def test_order_in_quotient_by_direct_powering(desc, which, g):
    s = g.structure
    prof = periodic_profile(g)
    t = next(t for t in range(1, 200) if power(g, t).length == 0 and power(g, t).u % s.m == 0)
    assert t == prof.order_in_quotient


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["A:2", "A:3", "I2:5", "dualA:3"]))
def test_inf_additive_on_commuting_pairs(seed, desc):
    s = group(desc)
    rng = random.Random(seed)
    g = periodic_random(s, rng)
    j, k = rng.randint(-4, 4), rng.randint(-3, 3)
    h = multiply(power(g, j), delta_power(s, s.m * k))
    assert translation_limits(multiply(g, h))[0] == translation_limits(g)[0] + translation_limits(h)[0]
