"""``holantcsp`` command line.

Every subcommand prints one JSON value on stdout.  Exit status is 0 on
success, 1 on a domain error (the structured diagnostic goes to stderr as
JSON) and 2 on a usage error.

Arguments that take a signature accept a name (``ONE_3``, ``EQ_3``, ``OR``),
inline JSON (``'{"sym":[0,1,1,1]}'``, ``'[1,0,0,1]'``) or a path to a JSON
file.  ``--grid``, ``--csp``, ``--recipe`` and ``--matrix`` accept inline
JSON or a path.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import serialize as J
from .classify import verdict
from .errors import HolantError
from .grid import MAX_EDGES, csp_direct_sum, csp_to_grid, holant_bruteforce
from .rewrite import BUILTIN_RECIPES, holographic_grid, replay
from .signature import transform, unary
from .solver import eval_dup_grid
from .symmetrize import (EPSILON_CANDIDATES, find_binary_witness, sym, sym_closed,
                         syml, syml_closed)
from .verify import SUITES, run_suite

OK = "ok"
ERROR = "error"


@dataclass
class CommandResult:
    status: str
    payload: object = None
    diagnostics: list = field(default_factory=list)
    exit_code: int = 0


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _load_json(text):
    text = text.strip()
    if text[:1] in "{[\"":
        return json.loads(text)
    if os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            return json.load(fh)
    raise UsageError(f"not inline JSON and no such file: {text!r}")


def _signature_arg(text):
    t = text.strip()
    if t[:1] in "{[" or os.path.exists(t):
        return J.signature_from_json(_load_json(t))
    return J.signature_from_json(t)


def _sigma_arg(text):
    try:
        sigma = tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"bad permutation {text!r}; write it like 2,1,3") from None
    if sorted(sigma) != [1, 2, 3]:
        raise UsageError(f"{text!r} is not a permutation of 1,2,3")
    return sigma


def _grid_or_csp(args):
    if args.grid:
        return J.grid_from_json(_load_json(args.grid))
    if args.csp:
        return csp_to_grid(J.csp_from_json(_load_json(args.csp)))
    raise UsageError("one of --grid or --csp is required")


# -- subcommands ----------------------------------------------------------------


def cmd_classify(args):
    return J.verdict_to_json(verdict(_signature_arg(args.sig)))


def cmd_eval(args):
    if args.csp and args.direct:
        return J.scalar_to_json(csp_direct_sum(J.csp_from_json(_load_json(args.csp))))
    return J.scalar_to_json(holant_bruteforce(_grid_or_csp(args), args.max_edges))


def cmd_solve(args):
    value, trace = eval_dup_grid(_grid_or_csp(args))
    out = {"value": J.scalar_to_json(value)}
    if args.trace:
        out["trace"] = J.trace_to_json(trace)
    return out


def cmd_sym(args):
    f = _signature_arg(args.sig)
    return J.signature_to_json(sym_closed(f) if args.closed else sym(f), symmetric=True)


def cmd_syml(args):
    f = _signature_arg(args.sig)
    if args.cap is not None:
        return J.signature_to_json(syml(f, _signature_arg(args.cap)), symmetric=True)
    sigma = _sigma_arg(args.sigma)
    t = syml_closed(f, J.scalar_from_json(args.eps), sigma)
    return J.signature_to_json(t.signature, symmetric=True)


def cmd_witness(args):
    eps = EPSILON_CANDIDATES if args.eps is None else [J.scalar_from_json(e) for e in args.eps]
    w = find_binary_witness(_signature_arg(args.sig), eps)
    return {"sigma": list(w.sigma), "epsilon": J.scalar_to_json(w.epsilon, True),
            "g": J.signature_to_json(w.g, symmetric=True)}


def cmd_transform(args):
    M = J.matrix_from_json(_load_json(args.matrix))
    if args.grid:
        return J.grid_to_json(holographic_grid(J.grid_from_json(_load_json(args.grid)), M))
    if args.sig:
        return J.signature_to_json(transform(_signature_arg(args.sig), M))
    raise UsageError("one of --sig or --grid is required")


def _recipe_arg(text):
    if text in BUILTIN_RECIPES:
        return BUILTIN_RECIPES[text](), _builtin_expectation(text)
    data = _load_json(text)
    expect = J.signature_from_json(data["expect"]) if "expect" in data else None
    return J.recipe_from_json(data), expect


def _builtin_expectation(name):
    if name == "sym":
        return sym(J.signature_from_json("ONE_3"))
    if name == "syml":
        return syml(J.signature_from_json("ONE_3"), unary(1, 1))
    if name == "h":
        return J.signature_from_json({"sym": [0, 5, 6]})
    return J.signature_from_json("EQ_2")


def cmd_gadget(args):
    recipe, expect = _recipe_arg(args.recipe)
    value = replay(recipe)
    if args.action == "replay":
        return J.signature_to_json(value)
    if expect is None:
        raise UsageError("verify needs an 'expect' signature in the recipe file")
    return {"ok": value == expect, "value": J.signature_to_json(value),
            "expected": J.signature_to_json(expect)}


def cmd_verify(args):
    results = run_suite(args.suite, seed=args.seed, samples=args.samples,
                        max_edges=args.max_edges)
    return {"ok": all(r.ok for r in results),
            "passed": sum(r.passed for r in results),
            "failed": sum(r.failed for r in results),
            "suites": [r.to_json() for r in results]}


def build_parser():
    p = _Parser(prog="holantcsp", description="Exact Holant / #CSP toolkit for ternary signatures.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("classify", help="verdict for a ternary signature")
    s.add_argument("--sig", required=True)
    s.set_defaults(func=cmd_classify)

    for name, func, helptext in (("eval", cmd_eval, "brute-force Holant value"),
                                 ("solve", cmd_solve, "polynomial-time value for DUP grids")):
        s = sub.add_parser(name, help=helptext)
        g = s.add_mutually_exclusive_group(required=True)
        g.add_argument("--grid")
        g.add_argument("--csp")
        s.set_defaults(func=func)
        if name == "eval":
            s.add_argument("--max-edges", type=int, default=MAX_EDGES)
            s.add_argument("--direct", action="store_true",
                           help="sum over variable assignments instead of edges (--csp only)")
        else:
            s.add_argument("--trace", action="store_true")

    s = sub.add_parser("sym", help="triangle symmetrization")
    s.add_argument("--sig", required=True)
    s.add_argument("--closed", action="store_true", help="use the closed forms")
    s.set_defaults(func=cmd_sym)

    s = sub.add_parser("syml", help="capped binary symmetrization")
    s.add_argument("--sig", required=True)
    c = s.add_mutually_exclusive_group(required=True)
    c.add_argument("--eps", help="cap [1, eps]")
    c.add_argument("--cap", help="arbitrary unary cap")
    s.add_argument("--sigma", default="1,2,3")
    s.set_defaults(func=cmd_syml)

    s = sub.add_parser("witness", help="binary witness search")
    s.add_argument("--sig", required=True)
    s.add_argument("--eps", nargs="+")
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("transform", help="holographic transformation")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--sig")
    g.add_argument("--grid")
    s.add_argument("--matrix", required=True)
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("gadget", help="replay or verify a recipe")
    s.add_argument("action", choices=["replay", "verify"])
    s.add_argument("--recipe", required=True,
                   help=f"file, inline JSON, or one of {', '.join(BUILTIN_RECIPES)}")
    s.set_defaults(func=cmd_gadget)

    s = sub.add_parser("verify", help="run a randomized property suite")
    s.add_argument("suite", choices=["all"] + list(SUITES))
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=50)
    s.add_argument("--max-edges", type=int, default=10)
    s.set_defaults(func=cmd_verify)
    return p


def run(argv):
    try:
        args = build_parser().parse_args(argv)
        payload = args.func(args)
    except UsageError as exc:
        return CommandResult(ERROR, None, [str(exc)], 2)
    except SystemExit as exc:       # --help
        code = exc.code or 0
        return CommandResult(OK if code == 0 else ERROR, None, [], code)
    except (HolantError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        diag = {"error": type(exc).__name__, "message": str(exc).strip("'\"")}
        return CommandResult(ERROR, diag, [f"{type(exc).__name__}: {exc}"], 1)
    if args.command == "verify" and not payload["ok"]:
        return CommandResult(ERROR, payload, ["property suite reported failures"], 1)
    return CommandResult(OK, payload, [], 0)


def main(argv=None):
    result = run(sys.argv[1:] if argv is None else argv)
    report = isinstance(result.payload, dict) and "suites" in result.payload
    if result.status == OK or report:
        if result.payload is not None:
            print(J.dumps(result.payload))
    elif result.exit_code == 2:
        for d in result.diagnostics:
            print(d, file=sys.stderr)
    else:
        print(J.dumps(result.payload), file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
