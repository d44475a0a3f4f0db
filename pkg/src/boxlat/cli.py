"""``boxlat`` command line.

Exit codes: 0 success (all checks pass), 1 some check failed, 2 usage or
input error (bad expression, unknown lattice, size cap, failed precondition).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import config
from .errors import BoxlatError, ExprSyntaxError
from .expr import evaluate, parse_expr
from .io import export

LIST_LIMIT = 200


def _common():
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global options")
    g.add_argument("--max-elements", type=int, default=argparse.SUPPRESS,
                   help=f"size cap for any constructed lattice (default ${config.ENV_MAX_ELEMENTS} "
                        f"or {config.DEFAULT_MAX_ELEMENTS})")
    g.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                   help="seed for sampled checks (default 0)")
    g.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                   help="emit the resulting lattice as JSON")
    g.add_argument("--dot", action="store_true", default=argparse.SUPPRESS,
                   help="emit the resulting lattice as Graphviz DOT")
    g.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS,
                   help="write output to PATH instead of stdout")
    return p


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(
        prog="boxlat", parents=[common],
        description="Box products, lattice tensor products and congruence lattices "
                    "of finite lattices.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def cmd(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text, description=help_text)

    cmd("show", "describe the lattice denoted by an expression").add_argument("expr")
    for name, text in (("box", "box product A □ B"), ("ltp", "lattice tensor product A ⊠ B"),
                       ("tensor", "semilattice tensor product A ⊗ B")):
        p = cmd(name, text)
        p.add_argument("A")
        p.add_argument("B")
        if name == "tensor":
            p.add_argument("--check-capped", action="store_true",
                           help="report whether every element is a union of pure tensors")
    cmd("con", "congruence lattice, with the blocks of each congruence").add_argument("expr")
    for name in ("m3", "n5"):
        p = cmd(name, f"the triple lattice {name.upper()}[L]")
        p.add_argument("L")
        p.add_argument("--angle", action="store_true", help=f"build {name.upper()}<L> instead")
    p = cmd("embed", "check that x -> 0_S □ x is a congruence-preserving embedding")
    p.add_argument("S")
    p.add_argument("L")
    p = cmd("verify", "run a verification check; `verify all` runs the whole suite")
    p.add_argument("check", help="one of: all, " + ", ".join(sorted(_VERIFY_ARITY)))
    p.add_argument("lattices", nargs="*", metavar="LATTICE")
    p.add_argument("--max-size", type=int, default=5,
                   help="largest factor size for `verify all` (default 5)")
    return parser


_VERIFY_ARITY = {
    "identities": 2, "iso_zero": 2, "iso_bounded": 2, "iso_unit": 2, "collapse": 2,
    "capped": 2, "duality": 2, "embedding": 2, "bimorphism": 3, "separations": 0,
}


def _summary(L):
    from .order import is_distributive

    lines = [f"name: {L.name}", f"elements: {L.n}", f"height: {L.height}",
             f"covers: {len(L.covers)}", f"distributive: {'yes' if is_distributive(L) else 'no'}"]
    if L.n <= LIST_LIMIT:
        lines.append("members:")
        for x in sorted(range(L.n), key=lambda v: (L.heights[v], L.labels[v])):
            extra = ""
            e = L.elements[x] if L.elements is not None else None
            if hasattr(e, "bits"):
                extra = f"  [{e.bits.bit_count()} pairs]"
            lines.append(f"  {L.labels[x]}{extra}")
    return "\n".join(lines) + "\n"


class _Output:
    def __init__(self, args):
        self.args = args
        self.chunks = []

    def text(self, s):
        self.chunks.append(s if s.endswith("\n") else s + "\n")

    def lattice(self, L, summary=True):
        a = self.args
        if getattr(a, "json", False):
            self.chunks.append(export(L, "json").decode("utf-8"))
        elif getattr(a, "dot", False):
            self.chunks.append(export(L, "dot").decode("utf-8"))
        elif summary:
            self.text(_summary(L))

    def flush(self):
        data = "".join(self.chunks)
        path = getattr(self.args, "out", None)
        if path:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(data)
        else:
            sys.stdout.write(data)


def _eval(text, args, memo):
    try:
        return evaluate(parse_expr(text), getattr(args, "max_elements", None), memo)
    except BoxlatError as exc:
        exc.source = text
        raise


def _run_verify(args, memo, out):
    from . import verify as V

    seed = getattr(args, "seed", 0)
    if args.check == "all":
        if args.lattices:
            raise _Usage("`verify all` takes no lattice arguments")
        reports = V.verify_all(max_size=args.max_size, seed=seed)
    else:
        if args.check not in _VERIFY_ARITY:
            raise _Usage(f"unknown check {args.check!r}")
        want = _VERIFY_ARITY[args.check]
        if len(args.lattices) != want:
            raise _Usage(f"check {args.check} takes {want} lattice argument(s)")
        Ls = [_eval(t, args, memo) for t in args.lattices]
        if args.check == "separations":
            reports = [V.verify_separations()]
        elif args.check == "collapse":
            reports = [V.verify_distributive_collapse(*Ls)]
        elif args.check == "embedding":
            reports = [V.verify_embedding(*Ls)]
        elif args.check == "bimorphism":
            reports = [V.verify_universal_bimorphism(*Ls, seed=seed)]
        else:
            reports = [V.CHECKS[args.check](*Ls)]
    for r in reports:
        out.text(json.dumps(r.to_record(), ensure_ascii=False, sort_keys=True))
    return 0 if all(r.passed for r in reports) else 1


class _Usage(Exception):
    pass


def run(args):
    from .box import box_product, lattice_tensor_product
    from .congruence import congruence_lattice
    from .constructions import cong_preserving_embedding, m3_angle, m3_of, n5_angle, n5_of
    from .tensor import is_capped, tensor_product

    memo = {}
    out = _Output(args)
    code = 0
    c = args.command
    mx = getattr(args, "max_elements", None)
    if c == "show":
        out.lattice(_eval(args.expr, args, memo))
    elif c in ("box", "ltp", "tensor"):
        A, B = _eval(args.A, args, memo), _eval(args.B, args, memo)
        build = {"box": box_product, "ltp": lattice_tensor_product, "tensor": tensor_product}[c]
        L = build(A, B, max_elements=mx)
        out.lattice(L)
        if c == "tensor" and args.check_capped:
            capped = is_capped(L)
            out.text(f"capped: {'yes' if capped else 'no'}")
            code = 0 if capped else 1
    elif c == "con":
        L = _eval(args.expr, args, memo)
        CL = congruence_lattice(L, max_elements=mx)
        if not (getattr(args, "json", False) or getattr(args, "dot", False)):
            out.text(f"Con({L.name}): {CL.n} congruences")
            for k, theta in enumerate(CL.elements):
                out.text(f"  {k}: {theta}")
        out.chunks.append(export(CL, "dot" if getattr(args, "dot", False) else "json")
                          .decode("utf-8"))
    elif c in ("m3", "n5"):
        L = _eval(args.L, args, memo)
        build = {("m3", False): m3_of, ("m3", True): m3_angle,
                 ("n5", False): n5_of, ("n5", True): n5_angle}[(c, args.angle)]
        out.lattice(build(L, max_elements=mx).lattice)
    elif c == "embed":
        S, L = _eval(args.S, args, memo), _eval(args.L, args, memo)
        r = cong_preserving_embedding(S, L)
        out.text(f"embedding {L.name} -> ltp({S.name}, {L.name}): "
                 f"{'injective' if r.embedding.is_injective else 'NOT injective'}")
        out.text(f"|Con(ltp)| = {r.con_ltp_size}, |Con({L.name})| = {r.con_l_size}, "
                 f"restriction bijective: {'yes' if r.bijective else 'no'}")
        out.text(f"result: {'pass' if r.passed else 'fail'}")
        code = 0 if r.passed else 1
    elif c == "verify":
        code = _run_verify(args, memo, out)
    out.flush()
    return code


def _caret(text, start, end):
    return f"  {text}\n  {' ' * start}{'^' * max(1, end - start)}"


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = os.environ.get(config.ENV_MAX_ELEMENTS)
    if getattr(args, "max_elements", None) is not None:
        os.environ[config.ENV_MAX_ELEMENTS] = str(args.max_elements)
    try:
        return run(args)
    except _Usage as exc:
        parser.error(str(exc))
    except BoxlatError as exc:
        kind = "syntax error" if isinstance(exc, ExprSyntaxError) else type(exc).__name__
        print(f"boxlat: {kind}: {exc}", file=sys.stderr)
        source = getattr(exc, "source", None)
        if source is not None and isinstance(exc, ExprSyntaxError):
            print(_caret(source, exc.column - 1, exc.column), file=sys.stderr)
        elif source is not None and exc.span is not None:
            print(_caret(source, *exc.span), file=sys.stderr)
        return 2
    finally:
        if saved is None:
            os.environ.pop(config.ENV_MAX_ELEMENTS, None)
        else:
            os.environ[config.ENV_MAX_ELEMENTS] = saved
    return 0


if __name__ == "__main__":
    sys.exit(main())
