"""Hypothesis-driven invariants; instances come from the seeded generators."""

import random
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from ordchoquet import generators as gen
from ordchoquet import monge
from ordchoquet.choquet import classical_integral, comonotonic, integral
from ordchoquet.set_system import build, classify
from ordchoquet.valuation import (
    Valuation,
    combine,
    cumulative,
    decompose,
    is_belief,
    mobius_inverse,
)

from strategies import seeds, systems


def _setup(seed, kinds=gen.KINDS, n_max=5, m_max=16):
    rng = random.Random(seed)
    sys = gen.random_system(rng, rng.choice(kinds), n_max, m_max)
    return rng, sys


@given(seeds)
def test_mobius_roundtrip(seed):
    rng, sys = _setup(seed)
    v = gen.random_valuation(rng, sys)
    assert combine(sys, mobius_inverse(v)) == v
    w = gen.random_density(rng, sys)
    assert mobius_inverse(cumulative(w)) == w.values


@given(seeds)
def test_decomposition_parts_are_beliefs(seed):
    rng, sys = _setup(seed)
    v = gen.random_valuation(rng, sys)
    dec = decompose(v)
    assert is_belief(dec.v_plus) and is_belief(dec.v_minus)
    assert dec.v_plus - dec.v_minus == v
    assert all(not (a and b) for a, b in zip(mobius_inverse(dec.v_plus), mobius_inverse(dec.v_minus)))


@given(seeds)
def test_monge_always_feasible(seed):
    rng, sys = _setup(seed)
    f = gen.random_weighting(rng, sys.n)
    out = monge.run(sys, f)
    assert monge.is_feasible(sys, out, f)
    assert len(out.chosen_sets) <= sys.n


@given(seeds)
def test_certify_on_intersection_systems(seed):
    rng = random.Random(seed)
    sys = gen.intersection_system(rng, rng.randint(1, 5), 14)
    assert classify(sys).intersection_system
    assert monge.certify(sys, gen.random_weighting(rng, sys.n))


@given(seeds, st.sampled_from([Fraction(0), Fraction(1, 2), Fraction(2), Fraction(3)]))
def test_positive_homogeneity(seed, lam):
    rng, sys = _setup(seed, m_max=12)
    v = gen.random_valuation(rng, sys)
    f = gen.random_weighting(rng, sys.n)
    assert integral(sys, v, tuple(lam * t for t in f)).value == lam * integral(sys, v, f).value


@given(seeds)
def test_belief_integral_superadditive_and_subadditive(seed):
    rng, sys = _setup(seed, m_max=12)
    u, w = gen.random_belief(rng, sys), gen.random_belief(rng, sys)
    f, g = gen.random_weighting(rng, sys.n), gen.random_weighting(rng, sys.n)
    fg = tuple(a + b for a, b in zip(f, g))
    assert integral(sys, u, fg).value >= integral(sys, u, f).value + integral(sys, u, g).value
    assert integral(sys, u + w, f).value <= integral(sys, u, f).value + integral(sys, w, f).value


@given(st.permutations(range(4)),
       st.lists(st.integers(0, 3), min_size=4, max_size=4),
       st.lists(st.integers(0, 3), min_size=4, max_size=4),
       st.lists(st.integers(-5, 5), min_size=15, max_size=15))
def test_comonotonic_additivity(order, steps_f, steps_g, table):
    f, g = [0] * 4, [0] * 4
    a = b = 0
    for k, sf, sg in zip(order, steps_f, steps_g):
        a, b = a + sf, b + sg
        f[k], g[k] = a, b
    assert comonotonic(f, g)
    vhat = [0] + table
    fg = [x + y for x, y in zip(f, g)]
    assert classical_integral(vhat, fg) == classical_integral(vhat, f) + classical_integral(vhat, g)


@given(systems(kinds=("wuc",)))
def test_wuc_systems_stay_wuc(sys):
    assert classify(sys).weakly_union_closed


@given(st.integers(1, 4), seeds)
def test_boolean_integral_matches_level_sets(n, seed):
    rng = random.Random(seed)
    sys = gen.boolean(n)
    v = gen.random_valuation(rng, sys)
    table = [Fraction(0)] * (1 << n)
    for i, mk in enumerate(sys.masks):
        table[mk] = v[i]
    f = gen.random_weighting(rng, n)
    assert integral(sys, v, f).value == classical_integral(table, f)


def test_trivial_order_valuation_roundtrip():
    sys = build([1, 2], [[1], [2]])
    v = Valuation(sys, [Fraction(-1, 2), 3])
    assert mobius_inverse(v) == v.values
