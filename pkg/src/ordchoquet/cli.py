"""Command-line front end.

Exit status: 0 on success, 1 when a property check or certificate fails,
2 on bad input (unreadable JSON, dimension mismatches, unmet preconditions).
"""

from __future__ import annotations

import argparse
import json
import sys as _sys
from fractions import Fraction
from pathlib import Path

from . import monge, verify
from .choquet import (
    classical_integral,
    extension_hat,
    integral,
    integral_shifted,
    is_monotone_set_function,
    lehrer_integral,
    atom_form_integral,
    induced_capacity,
)
from .errors import ChoquetError, NegativeWeighting
from .io import decimal, render, system_from_json, valuation_from_json, weighting_from_json
from .set_system import classify
from .valuation import decompose, is_belief, mobius_inverse

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class Violation(Exception):
    """Carries a report that should be printed before exiting with status 1."""

    def __init__(self, report: dict):
        super().__init__(report.get("error", "violation"))
        self.report = report


def _number(x: Fraction) -> dict:
    return {"exact": render(x), "decimal": decimal(x)}


def _by_name(sys, values) -> dict:
    return {sys.name(i): render(x) for i, x in enumerate(values)}


def _subset_name(sys, mask) -> str:
    labels = [str(e) for e in sys.ground.labels(mask)]
    if not labels:
        return "{}"
    return "".join(labels) if all(len(s) == 1 for s in labels) else "{" + ",".join(labels) + "}"


# -- commands ------------------------------------------------------------------

def cmd_integrate(args) -> dict:
    sys = system_from_json(args.system)
    v = valuation_from_json(sys, args.valuation)
    f = weighting_from_json(sys, args.weighting)
    negative = any(t < 0 for t in f)
    if negative and not args.shift:
        raise NegativeWeighting("weighting has negative entries; pass --shift")
    method = args.method
    if method == "auto":
        method = "monge" if not negative and classify(sys).intersection_system else "lp"
    report: dict = {"method": method}

    if method == "lp":
        if negative:
            res = integral_shifted(sys, v, f)
            report["shift"] = {"lambda": render(res.shift), "shift_dependent": res.shift_dependent}
        else:
            res = integral(sys, v, f)
        report["value"] = _number(res.value)
        if args.certificates and res.dual_y is not None:
            report["certificates"] = {"core_point": [render(t) for t in res.primal_x],
                                      "packing": _by_name(sys, res.dual_y)}
        return report

    if method == "monge":
        if negative:
            raise NegativeWeighting("the Monge method needs f >= 0")
        out = monge.run(sys, f)
        if not args.unchecked or args.certificates:
            cert = monge.certify(sys, f, out)
            if args.certificates:
                report["certificates"] = {
                    "ok": cert.ok,
                    "monge": [render(t) for t in cert.monge_values],
                    "lp": [render(t) for t in cert.lp_values],
                }
            if not cert and not args.unchecked:
                raise Violation({
                    "error": "Monge result is not certified for this system and weighting",
                    "witness": sys.name(cert.witness),
                    "monge": render(cert.monge_values[cert.witness]),
                    "lp": render(cert.lp_values[cert.witness]),
                })
        report["value"] = _number(monge.monge_functional(out, v))
        return report

    if method == "classical":
        rep = classify(sys)
        if not (rep.containment_ordered and rep.weakly_union_closed):
            raise ChoquetError("classical method needs a weakly union-closed family under inclusion")
        report["value"] = _number(classical_integral(extension_hat(sys, v), f))
        return report
    raise ChoquetError(f"unknown method {method!r}")  # pragma: no cover


def cmd_monge(args) -> dict:
    sys = system_from_json(args.system)
    f = weighting_from_json(sys, args.weighting)
    out = monge.run(sys, f)
    report = out.to_dict(sys)
    if args.certificates:
        cert = monge.certify(sys, f, out)
        report["certified"] = cert.ok
        report["failures"] = [sys.name(i) for i in cert.failures]
    return report


def cmd_classify(args) -> dict:
    sys = system_from_json(args.system)
    rep = classify(sys).to_dict(sys)
    rep["atoms"] = ["".join(map(str, a)) for a in rep["atoms"]]
    return {"order": [sys.name(i) for i in range(sys.m)], **rep}


def cmd_mobius(args) -> dict:
    sys = system_from_json(args.system)
    v = valuation_from_json(sys, args.valuation)
    return {"beta": _by_name(sys, mobius_inverse(v)), "belief": is_belief(v)}


def cmd_decompose(args) -> dict:
    sys = system_from_json(args.system)
    v = valuation_from_json(sys, args.valuation)
    dec = decompose(v)
    return {"beta": _by_name(sys, dec.beta), "v_plus": _by_name(sys, dec.v_plus.values),
            "v_minus": _by_name(sys, dec.v_minus.values)}


def cmd_extend(args) -> dict:
    sys = system_from_json(args.system)
    v = valuation_from_json(sys, args.valuation)
    vhat = extension_hat(sys, v)
    monotone, wit = is_monotone_set_function(vhat)
    return {
        "vhat": {_subset_name(sys, s): render(x) for s, x in enumerate(vhat)},
        "monotone": monotone,
        "witness": [_subset_name(sys, w) for w in wit] if wit else None,
    }


def cmd_lehrer(args) -> dict:
    sys = system_from_json(args.system)
    p = valuation_from_json(sys, args.valuation)
    f = weighting_from_json(sys, args.weighting)
    value = lehrer_integral(sys, p, f)
    return {
        "value": _number(value),
        "atom_form": render(atom_form_integral(sys, p, f)),
        "induced_capacity": {_subset_name(sys, s): render(x)
                             for s, x in enumerate(induced_capacity(sys, p))},
    }


def cmd_verify(args) -> dict:
    if args.replay:
        msgs = verify.replay(args.replay)
        report = {"replay": str(args.replay), "ok": not msgs, "messages": msgs}
        if msgs:
            raise Violation(report)
        return report
    if not args.suite:
        raise ChoquetError("name a suite or pass --replay FILE")
    rep = verify.run_suite(args.suite, seed=args.seed, trials=args.trials,
                           n_max=args.n_max, m_max=args.m_max)
    report = rep.to_dict()
    if not rep.ok:
        dump = Path(args.dump_dir)
        dump.mkdir(parents=True, exist_ok=True)
        files = []
        for k, viol in enumerate(rep.violations):
            path = dump / f"violation-{rep.suite}-seed{rep.seed}-{k}.json"
            path.write_text(json.dumps(viol, indent=2) + "\n")
            files.append(str(path))
        report["replay_files"] = files
        raise Violation(report)
    return report


# -- plumbing ------------------------------------------------------------------

def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}-")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(obj))
    return lines


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if v == [] or v == {}:
        return "[]" if isinstance(v, list) else "{}"
    return str(v)


def emit(report: dict, fmt: str, stream=None):
    stream = stream or _sys.stdout
    if fmt == "json":
        stream.write(json.dumps(report, indent=2) + "\n")
    else:
        stream.write("\n".join(_text(report)) + "\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")

    p = argparse.ArgumentParser(prog="ordchoquet",
                                description="Choquet integrals on ordered set systems.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("integrate", parents=[common], help="integrate a weighting")
    s.add_argument("system")
    s.add_argument("valuation")
    s.add_argument("weighting")
    s.add_argument("--method", choices=("lp", "monge", "classical", "auto"), default="auto")
    s.add_argument("--certificates", action="store_true", help="include optimality certificates")
    s.add_argument("--shift", action="store_true", help="allow negative weightings")
    s.add_argument("--unchecked", action="store_true", help="skip Monge certification")
    s.set_defaults(func=cmd_integrate)

    s = sub.add_parser("monge", parents=[common], help="Monge trace for a weighting")
    s.add_argument("system")
    s.add_argument("weighting")
    s.add_argument("--certificates", action="store_true")
    s.set_defaults(func=cmd_monge)

    s = sub.add_parser("classify", parents=[common], help="structural predicates")
    s.add_argument("system")
    s.set_defaults(func=cmd_classify)

    for name, func, text in (("mobius", cmd_mobius, "incidence coordinates"),
                             ("decompose", cmd_decompose, "split into belief functions"),
                             ("extend", cmd_extend, "extension to all subsets")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("system")
        s.add_argument("valuation")
        s.set_defaults(func=func)

    s = sub.add_parser("lehrer", parents=[common], help="Lehrer integral on an algebra")
    s.add_argument("system")
    s.add_argument("valuation", help="probability on the algebra")
    s.add_argument("weighting")
    s.set_defaults(func=cmd_lehrer)

    s = sub.add_parser("verify", parents=[common], help="run a seeded property suite")
    s.add_argument("suite", nargs="?", help=", ".join(verify.SUITES))
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--n-max", type=int, default=6)
    s.add_argument("--m-max", type=int, default=40)
    s.add_argument("--dump-dir", default=".", help="where violation files go")
    s.add_argument("--replay", help="re-run a violation file")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or _sys.stdout
    stderr = stderr or _sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.command == "verify" and args.seed < 0:
        stderr.write("error: --seed must be non-negative\n")
        return EXIT_INPUT
    try:
        report = args.func(args)
    except Violation as exc:
        emit(exc.report, args.format, stdout)
        return EXIT_VIOLATION
    except (ChoquetError, OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    emit(report, args.format, stdout)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
