"""Command-line front end: verify, glicci, betti, report and random-suite."""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .algebra import QQ, parse_field
from .configuration import ConfigurationError, build_ideal, verify_theorem
from .instances import InputError, ProblemInput, parse_input, random_instance, to_document
from .invariants import ResourceCapExceeded, betti_monomial, betti_polynomial
from .liaison import GlicciError, glicci_chain
from .multicomplex import MulticomplexError, ideal_of

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3
COMMANDS = ("verify", "glicci", "betti", "report", "random-suite")


def _verify_section(problem: ProblemInput) -> dict:
    rep = verify_theorem(problem.multicomplex, problem.families)
    return {
        "passed": rep.passed,
        "checks": {c.name: {"passed": c.passed, "detail": c.detail} for c in rep.checks},
        "invariants": {"size": rep.size, "degree": rep.degree, "height": rep.height},
    }


def _glicci_section(problem: ProblemInput) -> dict:
    try:
        cert = glicci_chain(problem.multicomplex, problem.families, ring=problem.ring)
    except GlicciError as exc:
        partial = {"passed": False, "failed_check": exc.check, "error": str(exc)}
        if exc.step is not None:
            partial["failed_step"] = exc.step.kind
        return partial
    out = {"passed": cert.valid}
    out.update(cert.summary())
    return out


def _betti_section(problem: ProblemInput) -> dict:
    mono = betti_monomial(ideal_of(problem.multicomplex), problem.field)
    poly = betti_polynomial(build_ideal(problem.multicomplex, problem.families, ring=problem.ring).ideal)
    return {"passed": mono == poly, "monomial": mono.as_dict(), "configuration": poly.as_dict()}


SECTIONS = {"verify": _verify_section, "glicci": _glicci_section, "betti": _betti_section}


def run(command: str, problem: ProblemInput | None = None, seed: int = 0, count: int = 100, field=None) -> tuple[dict, int]:
    """Run ``command`` and return ``(report, exit_code)``."""
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    if command == "random-suite":
        return _random_suite(seed, count, field if field is not None else QQ)
    if problem is None:
        raise ValueError(f"{command} needs an input problem")
    report: dict = {"command": command, "seed": seed, "input": to_document(problem)}
    names = ("verify", "glicci", "betti") if command == "report" else (command,)
    try:
        for name in names:
            report[name] = SECTIONS[name](problem)
    except ResourceCapExceeded as exc:
        report["passed"] = False
        report["error"] = f"resource cap exceeded: {exc}"
        return report, EXIT_CAP
    failed = [n for n in names if not report[n]["passed"]]
    report["passed"] = not failed
    if failed:
        report["first_failure"] = _first_failure(failed[0], report[failed[0]])
    return report, EXIT_OK if not failed else EXIT_FAILED


def _first_failure(name: str, section: dict) -> str:
    if name == "verify":
        bad = next(k for k, v in section["checks"].items() if not v["passed"])
        return f"verify.{bad}"
    if name == "glicci":
        return f"glicci.{section.get('failed_check') or 'certificate'}"
    return "betti.equality"


def _random_suite(seed: int, count: int, fld) -> tuple[dict, int]:
    rng = random.Random(seed)
    results = []
    for k in range(count):
        problem = random_instance(rng, fld)
        ver = verify_theorem(problem.multicomplex, problem.families)
        try:
            cert = glicci_chain(problem.multicomplex, problem.families, ring=problem.ring)
            gl, steps = cert.valid, cert.biliaison_count
        except GlicciError:
            gl, steps = False, None
        results.append(
            {
                "index": k,
                "size": len(problem.multicomplex),
                "caps": list(problem.multicomplex.caps),
                "nvars": problem.ring.nvars,
                "verify": ver.passed,
                "glicci": gl,
                "biliaison_steps": steps,
            }
        )
    passed = sum(1 for r in results if r["verify"] and r["glicci"])
    report = {
        "command": "random-suite",
        "seed": seed,
        "field": str(fld),
        "count": count,
        "passed_count": passed,
        "passed": passed == count,
        "instances": results,
    }
    return report, EXIT_OK if passed == count else EXIT_FAILED


def _text(report: dict) -> str:
    lines = [f"{report['command']}: {'PASS' if report.get('passed') else 'FAIL'}"]
    if "error" in report:
        lines.append(f"  {report['error']}")
    if report["command"] == "random-suite":
        lines.append(f"  {report['passed_count']}/{report['count']} instances pass over {report['field']}")
        return "\n".join(lines)
    if "verify" in report:
        for name, c in report["verify"]["checks"].items():
            lines.append(f"  verify.{name}: {'pass' if c['passed'] else 'FAIL'}")
        inv = report["verify"]["invariants"]
        lines.append(f"  |M| = {inv['size']}, degree = {inv['degree']}, height = {inv['height']}")
    if "glicci" in report:
        g = report["glicci"]
        if "kinds" in g:
            lines.append(f"  glicci: {g['biliaison_steps']} biliaison steps, chain {' -> '.join(g['kinds'])}")
        else:
            lines.append(f"  glicci: failed at {g.get('failed_step')} ({g.get('failed_check')})")
    if "betti" in report:
        b = report["betti"]
        lines.append(f"  betti: {'equal' if b['passed'] else 'DIFFERENT'} {b['configuration']}")
    if "first_failure" in report:
        lines.append(f"  first failure: {report['first_failure']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multiconf", description=__doc__)
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", help="problem document (JSON)")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--count", type=int, default=100, help="instances for random-suite")
    parser.add_argument("--field", help="q or p:PRIME (overrides the document)")
    parser.add_argument("--out", help="write the JSON report here")
    parser.add_argument("--json", action="store_true", help="print the JSON report")
    parser.add_argument("--timing", action="store_true", help="add wall-clock seconds to the report")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        fld = parse_field(args.field) if args.field else None
        problem = None
        if args.command != "random-suite":
            if not args.input:
                raise InputError([("--input", f"{args.command} needs an input document")])
            with open(args.input, encoding="utf-8") as fh:
                problem = parse_input(fh.read(), field_override=args.field)
        report, code = run(args.command, problem, args.seed, args.count, fld)
    except InputError as exc:
        report = {"command": args.command, "passed": False, "errors": [{"location": l, "message": m} for l, m in exc.errors]}
        code = EXIT_INVALID
    except (OSError, ValueError, ConfigurationError, MulticomplexError) as exc:
        report = {"command": args.command, "passed": False, "errors": [{"location": "input", "message": str(exc)}]}
        code = EXIT_INVALID
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 3)
    text = json.dumps(report, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    if args.json:
        print(text)
    elif "errors" in report:
        for e in report["errors"]:
            print(f"error at {e['location']}: {e['message']}", file=sys.stderr)
    else:
        print(_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
