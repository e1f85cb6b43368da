"""Command-line interface: ``olshanski [global flags] <subcommand> ...``.

Every subcommand prints one JSON document.  Exit status is 0 on success, 1
when a verification fails and 2 on bad input.  Elements are passed with
``--elem`` as a file path, ``-`` for standard input, or an inline JSON object.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from pathlib import Path

from . import cones, jsonio
from .cones import ConeParameter
from .exceptions import OlshanskiError
from .fock import FockSpace
from .group_complex import ComplexGroupElement, ComplexOscillatorGroup
from .group_real import OscillatorGroup
from .semigroup import Semigroup
from .spectral import Spectrum
from .verify import SUITES, Config, run_suite, semigroup_report

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

GLOBAL_DEFAULTS = {
    "spectrum": "1,2.5",
    "seed": 42,
    "trials": 100,
    "tol": None,
    "truncation": 30,
    "json": None,
    "omit_timing": False,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _global_flags() -> argparse.ArgumentParser:
    # defaults are SUPPRESSed so the flags may appear before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    S = argparse.SUPPRESS
    p.add_argument("--spectrum", default=S, help="eigenvalues of A: '1,2.5' or a JSON array (default 1,2.5)")
    p.add_argument("--seed", type=int, default=S, help="random seed (default 42)")
    p.add_argument("--trials", type=int, default=S, help="sample-count scale, 100 = nominal (default 100)")
    p.add_argument("--tol", type=float, default=S, help="override every check tolerance")
    p.add_argument("--truncation", type=int, default=S, help="Fock cutoff N (default 30)")
    p.add_argument("--json", metavar="PATH", default=S, help="write the JSON result here instead of stdout")
    p.add_argument("--omit-timing", action="store_true", default=S,
                   help="report wall_ms as 0 so reports are byte-identical across runs")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags()
    parser = _Parser(prog="olshanski", parents=[common],
                     description="Oscillator groups, Olshanski semigroups and their Fock representations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text, description=help_text)

    p = add("verify", "run a verification suite")
    p.add_argument("--suite", required=True, choices=SUITES + ("all",))
    p.add_argument("--d", action="append", help="restrict cone checks to these d values (repeatable)")

    p = add("exp", "exponential of a real or complexified algebra element")
    p.add_argument("--elem", required=True)
    p.add_argument("--quadrature", type=int, metavar="STEPS", help="use the integral formula with STEPS nodes")

    p = add("mul", "product of two or more group elements")
    p.add_argument("--elem", action="append", required=True)

    p = add("ad", "Ad(g) X; pass g then X")
    p.add_argument("--elem", action="append", required=True)

    p = add("coad", "Ad*(g) lambda; pass g then lambda")
    p.add_argument("--elem", action="append", required=True)

    p = add("polar", "polar decomposition in S_A")
    p.add_argument("--elem", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--decompose", action="store_true", help="element -> {g, w} (default)")
    mode.add_argument("--compose", action="store_true", help="{g, w} -> element")

    p = add("cone", "membership of an algebra element in +-W_d")
    p.add_argument("--elem", required=True)
    p.add_argument("--d", required=True, help="a real number or 'inf'")
    p.add_argument("--negative", action="store_true", help="test -W_d instead of W_d")

    p = add("semigroup-verify", "closure and monotonicity evidence for S_d")
    p.add_argument("--d", required=True, action="append", help="a real number or 'inf' (repeatable)")

    p = add("rep-norm", "norm of the Fock operator of a semigroup element against alpha_0")
    p.add_argument("--elem", required=True)

    p = add("momentum", "momentum map of a Fock state evaluated at an algebra element")
    p.add_argument("--state", required=True)
    p.add_argument("--elem", required=True)
    return parser


def _settings(args) -> dict:
    return {k: getattr(args, k, v) for k, v in GLOBAL_DEFAULTS.items()}


def _elems(args) -> list:
    raw = args.elem if isinstance(args.elem, list) else [args.elem]
    return [jsonio.load_json(item) for item in raw]


def _exactly(objs, k, what):
    if len(objs) != k:
        raise jsonio.InputError(f"{what} needs exactly {k} --elem argument(s), got {len(objs)}")
    return objs


def _semigroup_element(obj, sp: Spectrum, S: Semigroup) -> ComplexGroupElement:
    if isinstance(obj, dict) and "g" in obj and "w" in obj:
        return S.compose(jsonio.group_from_json(obj["g"], sp), jsonio.algebra_from_json(obj["w"], sp))
    return jsonio.complex_group_from_json(obj, sp)


def _config(opts, sp, cones_=None) -> Config:
    kwargs = dict(spectrum=sp, seed=opts["seed"], trials=opts["trials"], tol=opts["tol"],
                  truncation=opts["truncation"], omit_timing=opts["omit_timing"])
    if cones_:
        kwargs["cones"] = tuple(cones_)
    if kwargs["trials"] < 1 or kwargs["truncation"] < 1 or kwargs["seed"] < 0:
        raise jsonio.InputError("--trials and --truncation must be positive, --seed nonnegative")
    return Config(**kwargs)


def dispatch(args) -> tuple[object, int]:
    opts = _settings(args)
    sp = Spectrum.parse(opts["spectrum"])
    R, G, S = OscillatorGroup(sp), ComplexOscillatorGroup(sp), Semigroup(sp)
    cmd = args.command

    if cmd == "verify":
        cs = [ConeParameter.parse(d) for d in args.d] if args.d else None
        report = run_suite(args.suite, _config(opts, sp, cs))
        return report, EXIT_OK if report["passed"] else EXIT_FAIL

    if cmd == "semigroup-verify":
        report = semigroup_report(_config(opts, sp, [ConeParameter.parse(d) for d in args.d]))
        return report, EXIT_OK if report["passed"] else EXIT_FAIL

    if cmd == "exp":
        (obj,) = _exactly(_elems(args), 1, "exp")
        if jsonio.is_complex_element(obj):
            X = jsonio.complex_algebra_from_json(obj, sp)
            out = G.exp_quadrature(X, args.quadrature) if args.quadrature else G.exp(X)
        else:
            X = jsonio.algebra_from_json(obj, sp)
            out = R.exp_quadrature(X, args.quadrature) if args.quadrature else R.exp(X)
        return jsonio.element_to_json(out), EXIT_OK

    if cmd == "mul":
        objs = _elems(args)
        if len(objs) < 2:
            raise jsonio.InputError("mul needs at least two --elem arguments")
        if any(jsonio.is_complex_element(o) for o in objs):
            els = [jsonio.complex_group_from_json(o, sp) if jsonio.is_complex_element(o)
                   else G.embed(jsonio.group_from_json(o, sp)) for o in objs]
            op = G.mul
        else:
            els, op = [jsonio.group_from_json(o, sp) for o in objs], R.mul
        out = els[0]
        for e in els[1:]:
            out = op(out, e)
        return jsonio.element_to_json(out), EXIT_OK

    if cmd == "ad":
        g, X = _exactly(_elems(args), 2, "ad")
        return jsonio.element_to_json(R.Ad(jsonio.group_from_json(g, sp), jsonio.algebra_from_json(X, sp))), EXIT_OK

    if cmd == "coad":
        g, lam = _exactly(_elems(args), 2, "coad")
        out = R.coAd(jsonio.group_from_json(g, sp), jsonio.coalgebra_from_json(lam, sp))
        return jsonio.element_to_json(out), EXIT_OK

    if cmd == "polar":
        (obj,) = _exactly(_elems(args), 1, "polar")
        if args.compose:
            if not (isinstance(obj, dict) and "g" in obj and "w" in obj):
                raise jsonio.InputError("polar --compose expects {\"g\": ..., \"w\": ...}")
            e = S.compose(jsonio.group_from_json(obj["g"], sp), jsonio.algebra_from_json(obj["w"], sp))
            return jsonio.element_to_json(e), EXIT_OK
        pf = S.decompose(jsonio.complex_group_from_json(obj, sp))
        return {"g": jsonio.element_to_json(pf.g), "w": jsonio.element_to_json(pf.w),
                "residual": pf.residual}, EXIT_OK

    if cmd == "cone":
        (obj,) = _exactly(_elems(args), 1, "cone")
        X = jsonio.algebra_from_json(obj, sp)
        c = ConeParameter.parse(args.d, -1 if args.negative else 1)
        Y = -X if c.sign < 0 else X
        fd = cones.f_d(Y, c.d) if c.finite and Y.s > 0 else None
        margin = cones.margin(X, c)
        return {"member": cones.in_cone(X, c), "margin": margin if math.isfinite(margin) else "-inf",
                "f_d": fd, "classification": cones.classify(X, c), "cone": str(c)}, EXIT_OK

    if cmd == "rep-norm":
        (obj,) = _exactly(_elems(args), 1, "rep-norm")
        e = _semigroup_element(obj, sp, S)
        F = FockSpace(sp, opts["truncation"])
        norm, alpha0 = F.norm(F.pi_hat(e)), S.alpha(e, 0.0)
        return {"norm": norm, "alpha0": alpha0, "rel_gap": (alpha0 - norm) / alpha0,
                "truncation": F.cutoff}, EXIT_OK

    if cmd == "momentum":
        F = FockSpace(sp, opts["truncation"])
        v = jsonio.state_from_json(jsonio.load_json(args.state), F.dim)
        (obj,) = _exactly(_elems(args), 1, "momentum")
        X = jsonio.algebra_from_json(obj, sp)
        support = F.support_function(X) if X.s > 0 else None
        return {"momentum": F.momentum(v, X), "support": support, "truncation": F.cutoff}, EXIT_OK

    raise jsonio.InputError(f"unknown command {cmd!r}")  # pragma: no cover - argparse guards this


def _emit(doc, path) -> None:
    text = jsonio.dumps(doc) + "\n"
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = dispatch(args)
    except (OlshanskiError, ValueError, TypeError, json.JSONDecodeError) as exc:
        print(f"olshanski: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(doc, _settings(args)["json"])
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
