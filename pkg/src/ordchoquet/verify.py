"""Seeded property suites behind ``ordchoquet verify``.

A suite draws one instance per trial from ``random.Random(f"{suite}/{seed}/{trial}")``
and hands it to one or more *checks*.  A check takes a JSON-ready instance
and returns a list of failure messages, so any violation can be written to a
file and replayed later with :func:`replay`.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from . import generators as gen
from . import monge, oracles
from .choquet import (
    atom_form_integral,
    check_strong,
    classical_integral,
    comonotonic,
    extension_hat,
    indicator,
    induced_capacity,
    integral,
    integral_shifted,
    is_monotone_set_function,
    lehrer_integral,
    mobius_form_integral,
    set_function_from_valuation,
)
from .errors import ChoquetError, InternalCheckFailed
from .fixtures import nonmonotone_extension, ordered_eight
from .io import render, system_from_json
from .lp_core import check_certificates, solve_core_min, solve_packing_max
from .set_system import SetSystem, bits, classify
from .valuation import (
    ZERO,
    Valuation,
    as_fraction,
    combine,
    cumulative,
    decompose,
    is_belief,
    is_supermodular_boolean,
    is_supermodular_ordered,
    mobius_inverse,
    simple_function,
)

CheckFn = Callable[[dict], list]
CHECKS: dict[str, CheckFn] = {}


def check(fn: CheckFn) -> CheckFn:
    CHECKS[fn.__name__.removeprefix("check_")] = fn
    return fn


# -- instance encoding ---------------------------------------------------------

def enc_sys(sys: SetSystem) -> dict:
    # internal indexing, so valuation lists line up with the rebuilt system
    return sys.to_dict("internal")


def enc_vec(xs) -> list[str]:
    return [render(x) for x in xs]


def dec_sys(inst: dict) -> SetSystem:
    return system_from_json(inst["system"])


def dec_vec(xs) -> tuple[Fraction, ...]:
    return tuple(as_fraction(x) for x in xs)


def dec_val(sys: SetSystem, xs) -> Valuation:
    return Valuation(sys, dec_vec(xs))


def _eq(msgs: list, label: str, *values):
    if any(v != values[0] for v in values[1:]):
        msgs.append(f"{label}: " + " vs ".join(render(v) for v in values))


# -- checks --------------------------------------------------------------------

@check
def check_mobius(inst: dict) -> list:
    sys = dec_sys(inst)
    v = dec_val(sys, inst["v"])
    w = dec_val(sys, inst["w"])
    msgs = []
    prod = sys.zeta.astype(object) @ sys.mobius.astype(object)
    if not (prod == np.eye(sys.m, dtype=np.int64)).all():
        msgs.append("Z * Z^-1 is not the identity")
    beta = mobius_inverse(v)
    if list(beta) != oracles.mobius_recursive(v):
        msgs.append("incidence coordinates differ from the recursive oracle")
    if combine(sys, beta) != v:
        msgs.append("combine(mobius_inverse(v)) != v")
    if is_belief(v) and cumulative(Valuation(sys, beta)) != v:
        msgs.append("cumulative(mobius_inverse(v)) != v for a belief function")
    what = cumulative(w)
    if mobius_inverse(what) != w.values:
        msgs.append("mobius_inverse(cumulative(w)) != w")
    if cumulative(Valuation(sys, mobius_inverse(what))) != what:
        msgs.append("cumulative(mobius_inverse(b)) != b for a belief function b")
    dec = decompose(v)
    if dec.v_plus - dec.v_minus != v:
        msgs.append("v_plus - v_minus != v")
    if not (is_belief(dec.v_plus) and is_belief(dec.v_minus)):
        msgs.append("decomposition parts are not belief functions")
    for i in range(sys.m):
        unit = tuple(Fraction(int(k == i)) for k in range(sys.m))
        if mobius_inverse(simple_function(sys, i)) != unit:
            msgs.append(f"simple function {sys.name(i)} is not a basis vector")
            break
    return msgs


@check
def check_duality(inst: dict) -> list:
    sys = dec_sys(inst)
    v = dec_val(sys, inst["v"])
    f = dec_vec(inst["f"])
    msgs = []
    if not is_belief(v):
        return ["instance valuation is not a belief function"]
    core = solve_core_min(sys, v, f)
    pack = solve_packing_max(sys, v, f)
    _eq(msgs, "covering vs packing optimum", core.value, pack.value)
    if not check_certificates(sys, v, f, core):
        msgs.append("covering certificates fail")
    if not check_certificates(sys, v, f, pack):
        msgs.append("packing certificates fail")
    if sys.n + sys.m <= 10:
        _eq(msgs, "LP vs vertex enumeration", core.value, oracles.core_min_by_vertices(sys, v, f))
    return msgs


@check
def check_simple_min(inst: dict) -> list:
    sys = dec_sys(inst)
    f = dec_vec(inst["f"])
    msgs = []
    for i, mk in enumerate(sys.masks):
        lo = min(f[k] for k in bits(mk))
        _eq(msgs, f"integral of zeta^{sys.name(i)}", integral(sys, simple_function(sys, i), f).value, lo)
    return msgs


@check
def check_monge_wuc(inst: dict) -> list:
    sys = dec_sys(inst)
    v = dec_val(sys, inst["v"])
    f = dec_vec(inst["f"])
    msgs = []
    if not classify(sys).weakly_union_closed:
        return ["instance system is not weakly union-closed"]
    out = monge.run(sys, f)
    mv = monge.monge_functional(out, v)
    lp = integral(sys, v, f).value
    mf = mobius_form_integral(sys, mobius_inverse(v), f)
    cl = classical_integral(extension_hat(sys, v), f)
    _eq(msgs, "monge / LP / moebius form / classical", mv, lp, mf, cl)
    try:
        _eq(msgs, "father formula", monge.father_formula(sys, out, f, v), mv)
        if not monge.children_disjoint(sys, out):
            msgs.append("children of a node in the chosen forest overlap")
    except InternalCheckFailed as exc:
        msgs.append(str(exc))
    cert = monge.certify(sys, f, out)
    if not cert:
        msgs.append(f"certificate fails at {sys.name(cert.witness)}")
    return msgs


@check
def check_monge_intersection(inst: dict) -> list:
    sys = dec_sys(inst)
    v = dec_val(sys, inst["v"])
    msgs = []
    if not classify(sys).intersection_system:
        return ["instance system is not an intersection system"]
    for t, fv in enumerate(inst["fs"]):
        f = dec_vec(fv)
        out = monge.run(sys, f)
        cert = monge.certify(sys, f, out)
        if not cert:
            msgs.append(f"weighting {t}: certificate fails at {sys.name(cert.witness)}")
        _eq(msgs, f"weighting {t}: monge vs LP", monge.monge_functional(out, v),
            integral(sys, v, f).value)
    return msgs


@check
def check_monge_any(inst: dict) -> list:
    """Feasibility on an arbitrary system; certification is only recorded."""
    sys = dec_sys(inst)
    f = dec_vec(inst["f"])
    out = monge.run(sys, f)
    if not monge.is_feasible(sys, out, f):
        return ["Monge packing is infeasible"]
    return []


def _half(sys, mask):
    return tuple(Fraction((mask >> k) & 1, 2) for k in range(sys.n))


def _add(f, g):
    return tuple(a + b for a, b in zip(f, g))


@check
def check_supermodular(inst: dict) -> list:
    sys = dec_sys(inst)
    v = dec_val(sys, inst["v"])
    msgs = []
    if not classify(sys).union_closed or not sys.is_containment:
        return ["instance system is not union-closed under inclusion"]
    sm = is_supermodular_ordered(v)
    vhat = extension_hat(sys, v)
    if bool(sm) != bool(is_supermodular_boolean(vhat, sys.n)):
        msgs.append(f"ordered ({bool(sm)}) and lattice ({not bool(sm)}) supermodularity disagree")

    def both(f):
        return integral(sys, v, f).value, solve_packing_max(sys, v, f).value

    for t, (fv, gv) in enumerate(inst["pairs"]):
        f, g = dec_vec(fv), dec_vec(gv)
        (i_f, p_f), (i_g, p_g), (i_fg, p_fg) = both(f), both(g), both(_add(f, g))
        violated = i_fg < i_f + i_g
        if sm:
            if violated:
                msgs.append(f"pair {t}: superadditivity fails for a supermodular valuation")
            if (i_f, i_g, i_fg) != (p_f, p_g, p_fg):
                msgs.append(f"pair {t}: integral differs from the packing optimum")
        elif violated and sm.witness is None:
            msgs.append(f"pair {t}: violation without a supermodularity witness")
    if not sm:
        if sm.witness is None:
            msgs.append("non-supermodular verdict without witness")
            return msgs
        i, j = sm.witness
        f, g = _half(sys, sys.masks[i]), _half(sys, sys.masks[j])
        (i_f, p_f), (i_g, p_g), (i_fg, p_fg) = both(f), both(g), both(_add(f, g))
        if not i_fg < i_f + i_g:
            msgs.append(f"witness {sys.name(i)},{sys.name(j)} gives no superadditivity violation")
        if (i_f, i_g, i_fg) == (p_f, p_g, p_fg):
            msgs.append(f"witness {sys.name(i)},{sys.name(j)}: packing equality still holds")
    return msgs


@check
def check_extension(inst: dict) -> list:
    sys = dec_sys(inst)
    v = dec_val(sys, inst["v"])
    msgs = []
    vhat = extension_hat(sys, v)
    if vhat[0] != 0:
        msgs.append("extension is non-zero on the empty set")
    for i, mk in enumerate(sys.masks):
        _eq(msgs, f"extension at {sys.name(i)}", vhat[mk], v[i])
        if msgs:
            break
    if classify(sys).weakly_union_closed:
        for i, mk in enumerate(sys.masks):
            _eq(msgs, f"integral of 1_{sys.name(i)}", integral(sys, v, indicator(sys, mk)).value, v[i])
    if is_belief(v) and not is_supermodular_boolean(vhat, sys.n):
        msgs.append("extension of a belief function is not supermodular")
    return msgs


@check
def check_nonmonotone(inst: dict) -> list:
    """Extension values on given label strings and the expected monotonicity flag."""
    sys = dec_sys(inst)
    v = dec_val(sys, inst["v"])
    vhat = extension_hat(sys, v)
    msgs = []
    for labels, want in inst["expect"].items():
        mask = sys.ground.mask([int(c) for c in labels])
        _eq(msgs, f"extension at {labels}", vhat[mask], as_fraction(want))
    monotone, _ = is_monotone_set_function(vhat)
    if monotone != inst["monotone"]:
        msgs.append(f"monotone flag is {monotone}, expected {inst['monotone']}")
    return msgs


@check
def check_lehrer(inst: dict) -> list:
    sys = dec_sys(inst)
    p = dec_val(sys, inst["p"])
    f = dec_vec(inst["f"])
    msgs = []
    if not is_belief(p):
        msgs.append("probability is not a belief function")
    _eq(msgs, "lehrer / LP / atom form", lehrer_integral(sys, p, f),
        integral(sys, p, f).value, atom_form_integral(sys, p, f))
    if induced_capacity(sys, p) != extension_hat(sys, p):
        msgs.append("induced capacity differs from the extension")
    return msgs


@check
def check_classical(inst: dict) -> list:
    sys = dec_sys(inst)
    v = dec_val(sys, inst["v"])
    f = dec_vec(inst["f"])
    g = dec_vec(inst["g"])
    lam = as_fraction(inst["lam"])
    msgs = []
    table = set_function_from_valuation(sys, v)
    _eq(msgs, "LP vs level-set integral", integral(sys, v, f).value, classical_integral(table, f))
    cm = oracles.classical_mobius(table, sys.n)
    beta = mobius_inverse(v)
    if any(beta[i] != cm[mk] for i, mk in enumerate(sys.masks)):
        msgs.append("incidence coordinates differ from inclusion-exclusion")
    mf = sum((cm[a] * min(f[k] for k in bits(a)) for a in range(1, 1 << sys.n)), ZERO)
    _eq(msgs, "level-set vs moebius form", classical_integral(table, f), mf)
    sh = integral_shifted(sys, v, g)
    _eq(msgs, "shifted LP vs level-set on signed f", sh.value, classical_integral(table, g))
    if sh.shift_dependent:
        msgs.append("shifted integral depends on the shift")
    plus = decompose(v).v_plus
    if not check_strong(sys, plus, f, lam):
        msgs.append("strongness fails on the Boolean system")
    return msgs


@check
def check_functional(inst: dict) -> list:
    sys = dec_sys(inst)
    v = dec_val(sys, inst["v"])
    u = dec_val(sys, inst["u"])
    w = dec_val(sys, inst["w"])
    f, g = dec_vec(inst["f"]), dec_vec(inst["g"])
    msgs = []
    base = integral(sys, v, f).value
    for lam in (ZERO, Fraction(1, 2), Fraction(2), Fraction(3)):
        _eq(msgs, f"homogeneity at {lam}", integral(sys, v, tuple(lam * t for t in f)).value, lam * base)
    iu_f, iu_g = integral(sys, u, f).value, integral(sys, u, g).value
    if integral(sys, u, _add(f, g)).value < iu_f + iu_g:
        msgs.append("superadditivity in f fails for a belief function")
    if integral(sys, u + w, f).value > iu_f + integral(sys, w, f).value:
        msgs.append("subadditivity in v fails")
    for i, mk in enumerate(sys.masks):
        if integral(sys, u, indicator(sys, mk)).value < u[i]:
            msgs.append(f"domination fails at {sys.name(i)}")
    table = [as_fraction(x) for x in inst["table"]]
    cf, cg = dec_vec(inst["cf"]), dec_vec(inst["cg"])
    if not comonotonic(cf, cg):
        msgs.append("generated pair is not comonotonic")
    _eq(msgs, "comonotonic additivity", classical_integral(table, _add(cf, cg)),
        classical_integral(table, cf) + classical_integral(table, cg))
    return msgs


# -- suites --------------------------------------------------------------------

@dataclass
class SuiteReport:
    suite: str
    seed: int
    trials: int
    n_max: int
    m_max: int
    checks: int = 0
    violations: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "trials": self.trials,
            "n_max": self.n_max,
            "m_max": self.m_max,
            "checks": self.checks,
            "ok": self.ok,
            "violations": self.violations,
            "notes": self.notes,
        }


class _Runner:
    def __init__(self, report: SuiteReport):
        self.report = report

    def run(self, name: str, trial: int, inst: dict) -> list:
        self.report.checks += 1
        try:
            msgs = CHECKS[name](inst)
        except (ChoquetError, InternalCheckFailed) as exc:
            msgs = [f"{type(exc).__name__}: {exc}"]
        if msgs:
            self.report.violations.append(
                {"suite": self.report.suite, "trial": trial, "check": name,
                 "messages": msgs, "instance": inst})
        return msgs


def _rng(suite: str, seed: int, trial: int) -> random.Random:
    return random.Random(f"{suite}/{seed}/{trial}")


def _kind(rng, kinds):
    return kinds[rng.randrange(len(kinds))]


def suite_mobius(r: _Runner, rng_for, trials, n_max, m_max):
    kinds = ("poset", "containment", "wuc", "intersection", "algebra", "boolean")
    for t in range(trials):
        rng = rng_for(t)
        sys = gen.random_system(rng, _kind(rng, kinds), n_max, m_max)
        v = gen.random_valuation(rng, sys)
        w = gen.random_density(rng, sys)
        r.run("mobius", t, {"system": enc_sys(sys), "v": enc_vec(v), "w": enc_vec(w)})


def suite_duality(r, rng_for, trials, n_max, m_max):
    kinds = ("poset", "containment", "wuc", "intersection")
    for t in range(trials):
        rng = rng_for(t)
        if t % 4 == 0:  # small enough for vertex enumeration
            n = rng.randint(1, min(4, n_max))
            sys = gen.containment(rng, n, min(m_max, 10 - n)) if rng.random() < 0.5 \
                else gen.poset(rng, n, min(m_max, 10 - n))
        else:
            sys = gen.random_system(rng, _kind(rng, kinds), n_max, m_max)
        v = gen.random_belief(rng, sys)
        f = gen.random_weighting(rng, sys.n)
        r.run("duality", t, {"system": enc_sys(sys), "v": enc_vec(v), "f": enc_vec(f)})


def suite_simple_min(r, rng_for, trials, n_max, m_max):
    for t in range(trials):
        rng = rng_for(t)
        sys = gen.containment(rng, rng.randint(1, n_max), m_max)
        f = gen.random_weighting(rng, sys.n)
        r.run("simple_min", t, {"system": enc_sys(sys), "f": enc_vec(f)})


def suite_monge_wuc(r, rng_for, trials, n_max, m_max):
    for t in range(trials):
        rng = rng_for(t)
        sys = gen.weakly_union_closed(rng, rng.randint(1, n_max), m_max)
        v = gen.random_valuation(rng, sys)
        f = gen.random_weighting(rng, sys.n)
        r.run("monge_wuc", t, {"system": enc_sys(sys), "v": enc_vec(v), "f": enc_vec(f)})


def suite_monge_intersection(r, rng_for, trials, n_max, m_max, n_weightings=20):
    uncertified = 0
    for t in range(trials):
        rng = rng_for(t)
        sys = ordered_eight() if t == 0 else gen.intersection_system(rng, rng.randint(1, n_max), m_max)
        v = gen.random_valuation(rng, sys)
        fs = [enc_vec(gen.random_weighting(rng, sys.n)) for _ in range(n_weightings)]
        r.run("monge_intersection", t, {"system": enc_sys(sys), "v": enc_vec(v), "fs": fs})
        # a general poset next to it: feasibility must hold, certification may fail
        other = gen.poset(rng, rng.randint(1, n_max), min(m_max, 12))
        f = gen.random_weighting(rng, other.n)
        r.run("monge_any", t, {"system": enc_sys(other), "f": enc_vec(f)})
        if not classify(other).intersection_system and not monge.certify(other, f):
            uncertified += 1
    r.report.notes["uncertified_non_intersection_runs"] = uncertified


def _union_closed_system(n: int, fam) -> SetSystem:
    return gen._from_masks(n, fam)


def _capacity(rng, sys):
    if rng.random() < 0.35:
        return gen.random_belief(rng, sys)
    return gen.random_capacity(rng, sys)


def suite_supermodular_equiv(r, rng_for, trials, n_max, m_max, n_pairs=50,
                             exhaustive_n: int = 3):
    """Exhaustive union-closed families up to ``exhaustive_n`` points, then random ones."""
    m_cap = min(m_max, 20)
    families = [(n, fam) for n in range(1, min(exhaustive_n, n_max) + 1)
                for fam in gen.all_union_closed(n, m_cap)]
    n_hi = min(n_max, 5)
    sm_count = 0
    total = len(families) + trials
    for t in range(total):
        rng = rng_for(t)
        if t < len(families):
            sys = _union_closed_system(*families[t])
        else:
            sys = gen.union_closed(rng, rng.randint(min(exhaustive_n + 1, n_hi), n_hi), m_cap)
        v = _capacity(rng, sys)
        pairs = [[enc_vec(gen.random_weighting(rng, sys.n, hi=4)),
                  enc_vec(gen.random_weighting(rng, sys.n, hi=4))] for _ in range(n_pairs)]
        r.run("supermodular", t, {"system": enc_sys(sys), "v": enc_vec(v), "pairs": pairs})
        sm_count += bool(is_supermodular_ordered(v))
    r.report.notes["exhaustive_families"] = len(families)
    r.report.notes["supermodular_instances"] = sm_count
    r.report.notes["non_supermodular_instances"] = total - sm_count


def suite_extension(r, rng_for, trials, n_max, m_max):
    sys, v = nonmonotone_extension()
    r.run("nonmonotone", -1, {"system": enc_sys(sys), "v": enc_vec(v),
                              "expect": {"1235": "2", "12345": "1"}, "monotone": False})
    vhat = extension_hat(sys, v)
    monotone, wit = is_monotone_set_function(vhat)
    r.report.notes["fixture"] = {
        "vhat_1235": render(vhat[sys.ground.mask([1, 2, 3, 5])]),
        "vhat_N": render(vhat[sys.ground.full]),
        "monotone": monotone,
        "witness": [list(sys.ground.labels(m)) for m in wit] if wit else None,
    }
    for t in range(trials):
        rng = rng_for(t)
        kind = ("containment", "wuc", "union_closed")[t % 3]
        sys = gen.random_system(rng, kind, n_max, m_max)
        v = gen.random_belief(rng, sys) if rng.random() < 0.5 else gen.random_valuation(rng, sys)
        r.run("extension", t, {"system": enc_sys(sys), "v": enc_vec(v)})


def _probability(rng, sys: SetSystem) -> Valuation:
    atoms = classify(sys).atoms
    raw = [Fraction(rng.randint(0, 6)) for _ in atoms]
    if not any(raw):
        raw[rng.randrange(len(raw))] = Fraction(1)
    total = sum(raw)
    weight = {a: x / total for a, x in zip(atoms, raw)}
    return Valuation(sys, (sum((w for a, w in weight.items() if a & ~mk == 0), ZERO)
                           for mk in sys.masks))


def suite_lehrer(r, rng_for, trials, n_max, m_max):
    for t in range(trials):
        rng = rng_for(t)
        sys = gen.algebra(rng, rng.randint(1, n_max), m_max)
        p = _probability(rng, sys)
        f = gen.random_weighting(rng, sys.n)
        r.run("lehrer", t, {"system": enc_sys(sys), "p": enc_vec(p), "f": enc_vec(f)})


def suite_classical_agreement(r, rng_for, trials, n_max, m_max):
    n_hi = min(n_max, (m_max + 1).bit_length() - 1, 4)
    for t in range(trials):
        rng = rng_for(t)
        sys = gen.boolean(rng.randint(1, n_hi))
        v = gen.random_valuation(rng, sys)
        f = gen.random_weighting(rng, sys.n)
        g = gen.random_weighting(rng, sys.n, hi=6, lo=-6)
        lam = gen.random_rational(rng, 0, 5, 2)
        r.run("classical", t, {"system": enc_sys(sys), "v": enc_vec(v), "f": enc_vec(f),
                               "g": enc_vec(g), "lam": render(lam)})


def _comonotonic_pair(rng, n):
    order = list(range(n))
    rng.shuffle(order)
    f, g = [ZERO] * n, [ZERO] * n
    a = b = ZERO
    for k in order:
        a += rng.choice((0, 0, 1, 2))
        b += Fraction(rng.randint(0, 4), rng.choice((1, 2)))
        f[k], g[k] = a, b
    return f, g


def suite_homogeneity_superadditivity(r, rng_for, trials, n_max, m_max):
    kinds = ("poset", "containment", "wuc", "intersection", "algebra")
    strong_fail = 0
    for t in range(trials):
        rng = rng_for(t)
        sys = gen.random_system(rng, _kind(rng, kinds), n_max, m_max)
        v = gen.random_valuation(rng, sys)
        u, w = gen.random_belief(rng, sys), gen.random_belief(rng, sys)
        f, g = gen.random_weighting(rng, sys.n), gen.random_weighting(rng, sys.n)
        n_tab = rng.randint(1, min(n_max, 5))
        table = [ZERO] + [gen.random_rational(rng, -4, 6) for _ in range((1 << n_tab) - 1)]
        cf, cg = _comonotonic_pair(rng, n_tab)
        r.run("functional", t, {
            "system": enc_sys(sys), "v": enc_vec(v), "u": enc_vec(u), "w": enc_vec(w),
            "f": enc_vec(f), "g": enc_vec(g),
            "table": enc_vec(table), "cf": enc_vec(cf), "cg": enc_vec(cg)})
        if not check_strong(sys, u, f, gen.random_rational(rng, 1, 4)):
            strong_fail += 1
    # strongness on general systems is searched, not asserted
    r.report.notes["strongness_counterexamples"] = strong_fail


SUITES = {
    "mobius": suite_mobius,
    "duality": suite_duality,
    "simple_min": suite_simple_min,
    "monge_wuc": suite_monge_wuc,
    "monge_intersection": suite_monge_intersection,
    "supermodular_equiv": suite_supermodular_equiv,
    "extension": suite_extension,
    "lehrer": suite_lehrer,
    "classical_agreement": suite_classical_agreement,
    "homogeneity_superadditivity": suite_homogeneity_superadditivity,
}


def run_suite(name: str, seed: int = 0, trials: int = 100, n_max: int = 6, m_max: int = 40,
              **options) -> SuiteReport:
    if name not in SUITES:
        raise ChoquetError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if n_max < 1 or m_max < 1 or trials < 0:
        raise ChoquetError("n_max and m_max must be positive, trials non-negative")
    report = SuiteReport(name, seed, trials, n_max, m_max)
    before = dict(monge.RUN_STATS)
    SUITES[name](_Runner(report), lambda t: _rng(name, seed, t), trials, n_max, m_max, **options)
    runs = monge.RUN_STATS["runs"] - before.get("runs", 0)
    feasible = monge.RUN_STATS["feasible"] - before.get("feasible", 0)
    report.notes["monge_runs"] = runs
    if runs != feasible:  # pragma: no cover - run() raises first
        report.violations.append({"suite": name, "trial": -1, "check": "monge_feasibility",
                                  "messages": [f"{runs - feasible} infeasible Monge runs"],
                                  "instance": {}})
    return report


def replay(source) -> list:
    """Re-run the check recorded in a violation file; returns its failure messages."""
    if isinstance(source, dict):
        data = source
    else:
        with open(source) as fh:
            data = json.load(fh)
    name = data.get("check")
    if name not in CHECKS:
        raise ChoquetError(f"violation file names unknown check {name!r}")
    try:
        return CHECKS[name](data["instance"])
    except (ChoquetError, InternalCheckFailed) as exc:
        return [f"{type(exc).__name__}: {exc}"]
