from fractions import Fraction

import pytest

from ordchoquet import generators as gen
from ordchoquet import monge
from ordchoquet.choquet import integral
from ordchoquet.errors import NegativeWeighting
from ordchoquet.fixtures import boolean_pair
from ordchoquet.set_system import build, classify
from ordchoquet.valuation import Valuation


def test_single_set_run():
    sys = build([1, 2, 3], [[1, 2, 3]])
    out = monge.run(sys, (4, 2, 7))
    assert out.chosen_sets == (0,)
    assert out.y == (2,)
    assert out.pi == (1,)
    assert monge.certify(sys, (4, 2, 7))


def test_boolean_pair_trace():
    sys = boolean_pair()
    out = monge.run(sys, (3, 5))
    assert [sys.name(i) for i in out.chosen_sets] == ["12", "2"]
    assert out.y == (3, 0, 2)
    assert out.residual == (0, 0)
    d = out.to_dict(sys)
    assert d["rounds"][0] == {"M": "12", "p": 1, "c_p": "3", "c": ["0", "2"]}


def test_ties_go_to_first_element():
    sys = boolean_pair()
    assert monge.run(sys, (2, 2)).pi == (0, 1)


def test_no_set_chosen_twice(rng):
    for _ in range(50):
        sys = gen.random_system(rng, rng.choice(gen.KINDS), 5, 20)
        out = monge.run(sys, gen.random_weighting(rng, sys.n))
        assert len(set(out.chosen_sets)) == len(out.chosen_sets)


def test_negative_rejected():
    with pytest.raises(NegativeWeighting):
        monge.run(boolean_pair(), (-1, 0))


def test_functional_is_linear(rng):
    sys = gen.poset(rng, 4, 10)
    out = monge.run(sys, gen.random_weighting(rng, 4))
    v, w = gen.random_valuation(rng, sys), gen.random_valuation(rng, sys)
    assert monge.monge_functional(out, v + w) == monge.monge_functional(out, v) + monge.monge_functional(out, w)
    assert monge.monge_functional(out, Valuation.zeros(sys)) == 0


def test_wuc_forest_and_father_formula(rng):
    for _ in range(40):
        sys = gen.weakly_union_closed(rng, rng.randint(1, 6), 30)
        f = gen.random_weighting(rng, sys.n)
        v = gen.random_valuation(rng, sys)
        out = monge.run(sys, f)
        monge.forest_parents(sys, out)
        assert monge.children_disjoint(sys, out)
        assert monge.father_formula(sys, out, f, v) == monge.monge_functional(out, v)
        assert monge.monge_functional(out, v) == integral(sys, v, f).value


def test_ordered_eight_certifies(eight, rng):
    for _ in range(20):
        f = gen.random_weighting(rng, 6)
        cert = monge.certify(eight, f)
        assert cert and cert.failures == ()


def test_uncertified_systems_exist_but_stay_feasible(rng):
    failures = 0
    for _ in range(80):
        sys = gen.poset(rng, rng.randint(2, 5), 10)
        f = gen.random_weighting(rng, sys.n)
        out = monge.run(sys, f)
        assert monge.is_feasible(sys, out, f)
        cert = monge.certify(sys, f, out)
        if not cert:
            failures += 1
            assert not classify(sys).intersection_system
            assert cert.witness == cert.failures[0]
    assert failures > 0


def test_run_stats_count_feasible_runs():
    before = dict(monge.RUN_STATS)
    monge.run(boolean_pair(), (Fraction(1, 2), 1))
    assert monge.RUN_STATS["runs"] == before.get("runs", 0) + 1
    assert monge.RUN_STATS["feasible"] == before.get("feasible", 0) + 1
