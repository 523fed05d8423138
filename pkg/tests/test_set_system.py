import random
from itertools import combinations

import numpy as np
import pytest

from ordchoquet import generators as gen
from ordchoquet.errors import (
    ChoquetError,
    CoverViolation,
    CycleInOrder,
    DuplicateSet,
    EmptySetInFamily,
    OrderContradiction,
)
from ordchoquet.set_system import (
    GroundSet,
    build,
    classify,
    maximal_in,
    mobius_matrix,
    relabel,
    restrict,
)


def names(sys, idx):
    return {sys.name(i) for i in idx}


def test_single_set_system():
    sys = build([1, 2, 3], [[1, 2, 3]])
    assert sys.m == 1
    assert sys.zeta.tolist() == [[1]]
    assert mobius_matrix(sys).tolist() == [[1]]


def test_boolean_pair_indexing():
    sys = build([1, 2], [[1], [2], [1, 2]], "containment")
    assert sys.name(0) == "12"
    assert sys.zeta.tolist() == [[1, 0, 0], [1, 1, 0], [1, 0, 1]]
    assert np.array_equal(np.triu(sys.zeta, 1), np.zeros((3, 3)))


def test_two_chain_mobius():
    sys = build(["a", "b"], [["a", "b"], ["a"]], [(1, 0)])
    assert sys.zeta.tolist() == [[1, 0], [1, 1]]
    assert mobius_matrix(sys).tolist() == [[1, 0], [-1, 1]]


def test_trivial_order_identity():
    sys = build([1, 2, 3], [[1], [2], [3], [1, 2]])
    assert np.array_equal(sys.zeta, np.eye(4, dtype=int))
    assert np.array_equal(mobius_matrix(sys), np.eye(4, dtype=int))


def test_boolean_three_mobius_entries():
    sys = gen.boolean(3)
    mu = mobius_matrix(sys)
    for i, a in enumerate(sys.masks):
        for j, b in enumerate(sys.masks):
            # mu[i, j] is the coefficient of F_i in column F_j
            want = (-1) ** bin(b & ~a).count("1") if a & ~b == 0 else 0
            assert mu[i, j] == want


def test_index_rule_for_random_orders(rng):
    for _ in range(30):
        sys = gen.poset(rng, rng.randint(1, 5), 15)
        assert not np.triu(sys.leq, 1).any()
        assert (np.diag(sys.leq)).all()


@pytest.mark.parametrize("family, order, exc", [
    ([[1], []], "trivial", EmptySetInFamily),
    ([[1], [1]], "trivial", DuplicateSet),
    ([[1]], "trivial", CoverViolation),
    ([[1, 2], [1]], [(0, 5)], ChoquetError),
    ([[1, 2], [2]], [(0, 1), (1, 0)], CycleInOrder),
])
def test_build_errors(family, order, exc):
    with pytest.raises(exc):
        build([1, 2], family, order)


def test_explicit_order_may_oppose_inclusion():
    sys = build([1, 2], [[1, 2], [1]], [(0, 1)])
    assert sys.name(0) == "1" and sys.leq[1, 0]


def test_containment_pair_must_match_inclusion():
    with pytest.raises(OrderContradiction):
        build([1, 2], [[1, 2], [1]], {"kind": "containment", "pairs": [(0, 1)]})


def test_ground_set_rejects_duplicates():
    with pytest.raises(Exception):
        GroundSet([1, 1])


def test_ordered_eight_builds_and_is_not_inclusion(eight):
    assert eight.m == 8
    assert not eight.is_containment
    rep = classify(eight)
    assert rep.intersection_system
    assert not rep.containment_ordered


def test_ordered_eight_hasse_edges(eight):
    strict = eight.leq & ~np.eye(eight.m, dtype=bool)
    covers = set()
    for i, j in zip(*np.nonzero(strict)):
        between = strict[i] & strict[:, j]
        if not between.any():
            covers.add((eight.name(i), eight.name(j)))
    assert covers == {
        ("6", "45"), ("6", "16"), ("6", "236"), ("45", "234"), ("45", "15"),
        ("16", "15"), ("16", "126"), ("236", "234"), ("236", "126"),
        ("15", "12"), ("234", "12"), ("126", "12"),
    }


def test_boolean_is_everything():
    rep = classify(gen.boolean(3))
    for flag in rep.FLAGS:
        if flag != "trivially_ordered":
            assert getattr(rep, flag), flag
    assert sorted(rep.atoms) == [1, 2, 4]


def test_wuc_witness():
    sys = build([1, 2, 3], [[1, 2], [2, 3]], "containment")
    rep = classify(sys)
    assert not rep.weakly_union_closed
    assert names(sys, rep.witnesses["weakly_union_closed"]) == {"12", "23"}


def test_restrict(eight):
    assert names(eight, restrict(eight, [1, 2, 6])) == {"12", "126", "16", "6"}
    assert restrict(eight, []) == []
    assert restrict(eight, range(1, 7)) == list(range(8))


def test_maximal_in_fixture(remark_pair):
    sys, _ = remark_pair
    assert names(sys, maximal_in(sys, [1, 2, 3, 5])) == {"12", "35"}
    assert names(sys, maximal_in(sys, range(1, 6))) == {"12345"}


def test_maximal_sets_disjoint_on_wuc(rng):
    for _ in range(20):
        sys = gen.weakly_union_closed(rng, rng.randint(1, 6), 40)
        for x in range(1 << sys.n):
            top = maximal_in(sys, sys.ground.labels(x))
            for a, b in combinations(top, 2):
                assert sys.masks[a] & sys.masks[b] == 0


def _consecutive_brute(sys):
    leq = sys.leq
    r = range(sys.m)
    return all(sys.masks[f] & sys.masks[h] & ~sys.masks[g] == 0
               for f in r for g in r for h in r if leq[f, g] and leq[g, h])


def _wuc_brute(sys):
    fam = set(sys.masks)
    return all(a | b in fam for a in fam for b in fam if a & b)


def test_classify_against_definitions(rng):
    for _ in range(60):
        sys = gen.random_system(rng, rng.choice(gen.KINDS), 5, 20)
        rep = classify(sys)
        assert rep.consecutive == _consecutive_brute(sys)
        assert rep.weakly_union_closed == _wuc_brute(sys)
        fam = set(sys.masks)
        assert rep.union_closed == all(a | b in fam for a in fam for b in fam)
        if rep.intersection_system:
            assert rep.consecutive


def test_algebra_generator_atoms(rng):
    for _ in range(20):
        sys = gen.algebra(rng, rng.randint(1, 6), 40)
        rep = classify(sys)
        assert rep.algebra
        cover = 0
        for a in rep.atoms:
            assert cover & a == 0
            cover |= a
        assert cover == sys.ground.full


def test_relabel_keeps_structure(rng):
    sys = gen.intersection_system(rng, 4, 12)
    perm = [2, 0, 3, 1]
    other = relabel(sys, perm)
    assert classify(other).intersection_system
    assert other.m == sys.m


def test_to_dict_roundtrip(eight):
    for indexing in ("input", "internal"):
        d = eight.to_dict(indexing)
        again = build(d["ground"], d["family"], d["order"]["pairs"])
        assert again.masks == eight.masks
        assert np.array_equal(again.leq, eight.leq)
    assert eight.to_dict()["family"][0] == [1, 2]
    assert eight.to_dict()["family"][3] == [1, 5]


def test_generators_deterministic():
    for kind in gen.KINDS:
        a = gen.random_system(random.Random(5), kind)
        b = gen.random_system(random.Random(5), kind)
        assert a.masks == b.masks and np.array_equal(a.leq, b.leq)
