"""Command-line front end.

    thetarep table --scenario s3.json
    thetarep theta verify-main --scenario heis.json --json report.json
    thetarep examples heisenberg --param q=3
    thetarep suite --seed 0 --count 60

Exit status: 0 when every check passed, 1 when a falsification or finding
was recorded, 2 on input errors.
"""

import argparse
import json
import sys

from . import __version__, scenario
from .groups import DEFAULT_CAP, center, dihedral_group, quotient, subgroup, \
    symmetric_group, cyclic_group


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--scenario", help="scenario JSON file")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum group order")
    p.add_argument("--json", dest="json_out",
                   help="write the JSON report here ('-' for stdout only)")
    return p


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(prog="thetarep", parents=[common],
                                     description="Exact character-theory scenarios.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("table", "decompose", "clifford", "rieffel"):
        sub.add_parser(name, parents=[common])
    theta = sub.add_parser("theta", parents=[common])
    theta.add_argument("action", choices=["classify", "verify-main"])
    props = sub.add_parser("props", parents=[common])
    props.add_argument("action", choices=["check"])
    ex = sub.add_parser("examples", parents=[common])
    ex.add_argument("name", choices=["diagonal", "coset", "heisenberg", "wreath"])
    ex.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    suite = sub.add_parser("suite", parents=[common])
    suite.add_argument("--count", type=int, default=60)
    sub.add_parser("schema", parents=[common])
    return parser


# builtin examples ------------------------------------------------------------

def _params(items):
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise scenario.ScenarioError(f"--param expects KEY=VALUE, got {item!r}")
        out[key] = value
    return out


_NAMED = {"S3": lambda: symmetric_group(3), "S4": lambda: symmetric_group(4),
          "D8": lambda: dihedral_group(4), "C4": lambda: cyclic_group(4)}


def _named_group(name):
    if name not in _NAMED:
        raise scenario.ScenarioError(f"unknown group {name!r}; choose from {sorted(_NAMED)}")
    return _NAMED[name]()


def builtin_example(name, params):
    from . import examples as ex
    if name == "diagonal":
        G = _named_group(params.get("G", "S3"))
        chi = params.get("chi", "all")
        indices = range(len(G.classes.reps)) if chi == "all" else [int(chi)]
        reports = [ex.diagonal_example(G, i) for i in indices]
        return {"example": "diagonal", "group": G.name, "prime": reports[0]["prime"],
                "orders": reports[0]["orders"], "cases": reports,
                "ok": all(r["ok"] for r in reports)}
    if name == "coset":
        G = _named_group(params.get("G", "S3"))
        kind = params.get("N", "derived" if G.name == "S3" else "center")
        if kind == "center":
            N = center(G)
        elif kind == "derived":
            N = subgroup(G, {int(G.table[G.table[a, b], G.table[G.inv[a], G.inv[b]]])
                             for a in range(G.order) for b in range(G.order)})
        else:
            N = subgroup(G, [int(x) for x in kind.split(",")])
        reports = [ex.coset_example(N, int(g)) for g in quotient(G, N).transversal]
        return {"example": "coset", "group": G.name, "N_order": N.order,
                "prime": reports[0]["prime"], "orders": reports[0]["orders"],
                "cases": reports, "ok": all(r["ok"] for r in reports)}
    if name == "heisenberg":
        return ex.heisenberg_example(int(params.get("q", 3)), int(params.get("m", 1)),
                                     int(params.get("psi", 1)))
    if name == "wreath":
        s1 = params.get("sigma1")
        s2 = params.get("sigma2")
        return ex.wreath_example(int(params.get("m1", 2)), int(params.get("m2", 2)),
                                 int(params.get("n", 2)),
                                 None if s1 is None else int(s1),
                                 None if s2 is None else int(s2))
    raise scenario.ScenarioError(f"unknown example {name!r}")


def _suite(count, seed, cap):
    from .suite import run_suite, summarize
    records, P = run_suite(count, seed=seed, cap=min(cap, 2000))
    s = summarize(records)
    ok = s["equivalent"] == s["instances"] and s["bigraphic_iff"] == s["squarefree_instances"] \
        and s["multfree_corollary"] == s["squarefree_instances"] \
        and s["rieffel_iff"] == s["instances"] and s["prop_findings"] == 0
    return {"prime": P.p, "seed": seed, "summary": s, "records": records, "ok": ok}


# rendering -----------------------------------------------------------------

def render(report, indent=0):
    """Plain-text view of a report: nested keys, matrices as aligned rows."""
    pad = "  " * indent
    lines = []
    if isinstance(report, dict):
        for key in sorted(report):
            value = report[key]
            if isinstance(value, (dict, list)) and value and not _flat(value):
                lines.append(f"{pad}{key}:")
                lines.extend(render(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_short(value)}")
    elif isinstance(report, list):
        if report and all(isinstance(r, list) and _flat(r) for r in report):
            width = max(len(str(v)) for r in report for v in r)
            lines.extend(pad + " ".join(str(v).rjust(width) for v in r) for r in report)
        else:
            for item in report:
                sub = render(item, indent + 1)
                if sub:
                    sub[0] = pad + "- " + sub[0].lstrip()
                lines.extend(sub)
    else:
        lines.append(pad + _short(report))
    return lines


def _flat(value):
    if isinstance(value, dict):
        return False
    return all(not isinstance(v, (dict, list)) for v in value)


def _short(value):
    return json.dumps(value) if isinstance(value, (list, dict)) else str(value)


def emit(report, json_out):
    text = json.dumps(report, sort_keys=True, indent=2)
    if json_out == "-":
        print(text)
        return
    if json_out:
        with open(json_out, "w") as fh:
            fh.write(text + "\n")
    print("\n".join(render(report)))


def main(argv=None):
    args = build_parser().parse_args(argv)
    command = args.command
    if command in ("theta", "props"):
        command = f"{command} {args.action}"
    try:
        if command == "schema":
            print(json.dumps(scenario.SCHEMA, sort_keys=True, indent=2))
            return 0
        if command == "examples":
            body = builtin_example(args.name, _params(args.param))
            report = scenario.envelope(f"examples {args.name}", body.get("prime"),
                                       body.get("orders", {}), body, body["ok"])
            code = 0 if body["ok"] else 1
        elif command == "suite":
            body = _suite(args.count, args.seed, args.cap)
            report = scenario.envelope("suite", body["prime"], {}, body, body["ok"])
            code = 0 if body["ok"] else 1
        else:
            if not args.scenario:
                raise scenario.ScenarioError(f"{command} needs --scenario FILE")
            try:
                with open(args.scenario) as fh:
                    text = fh.read()
            except OSError as exc:
                raise scenario.ScenarioError(str(exc)) from None
            doc = scenario.load(text)
            report, code = scenario.run(doc, cap=args.cap, command=command)
    except scenario.INPUT_ERRORS as exc:
        report = {"version": __version__, "command": command, "error": str(exc)}
        code = 2
    emit(report, args.json_out)
    if "error" in report:
        print(f"error: {report['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
