"""Command-line entry point.

Every command prints JSON (sorted keys, compact) unless ``--emit dot`` asks
for Graphviz. Exit codes: 0 success or true, 1 false / none / violation,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import core, distance, edc, hom, tube, weighted
from .core import GraphError, SignedGraph
from .distance import Certificate, CertificateError, TheoremViolation
from .weighted import WeightedSignedGraph


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def load_graph(path):
    """A signed graph if every edge carries a "+"/"-" sign, else weighted."""
    data = _read_json(path)
    edges = data.get("edges", []) if isinstance(data, dict) else None
    if edges is None:
        raise UsageError(f"{path} does not hold a graph")
    if all(isinstance(e, (list, tuple)) and len(e) == 3 and isinstance(e[2], str) for e in edges):
        return SignedGraph.from_json(data)
    return WeightedSignedGraph.from_json(data)


def load_signed(path) -> SignedGraph:
    g = load_graph(path)
    if not isinstance(g, SignedGraph):
        raise UsageError(f"{path} holds a weighted graph; a signed graph is needed")
    return g


def _write(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_dump(obj) + "\n")


class Ctx:
    def __init__(self, args):
        self.args = args
        self.out = []

    def emit_graph(self, g):
        if self.args.emit == "dot":
            self.out.append(g.to_dot().rstrip("\n"))
        else:
            self.out.append(_dump(g.to_json()))

    def emit(self, obj):
        self.out.append(_dump(obj))

    def note(self, msg):
        if not self.args.quiet:
            print(msg, file=sys.stderr)


def _vertex_set(text):
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad vertex list {text!r}") from exc


# commands


def cmd_girths(ctx, a):
    g = load_graph(a.input)
    ctx.emit(weighted.girths_of(g).to_json())
    return 0


def cmd_switch(ctx, a):
    g = load_graph(a.input)
    xs = _vertex_set(a.set)
    if isinstance(g, SignedGraph):
        ctx.emit_graph(core.switch(g, xs))
    else:
        ctx.emit_graph(weighted.weighted_switch(g, xs))
    return 0


def cmd_eqv(ctx, a):
    x = core.switching_equivalent(load_signed(a.a), load_signed(a.b))
    ctx.emit({"equivalent": x is not None, "switching": sorted(x) if x is not None else None})
    return 0 if x is not None else 1


def cmd_edc(ctx, a):
    g = load_graph(a.input)
    ctx.emit_graph(edc.edc(g) if isinstance(g, SignedGraph) else edc.edc_weighted(g))
    return 0


def cmd_spc(ctx, a):
    ctx.emit_graph(edc.spc(a.k))
    return 0


def cmd_tube(ctx, a):
    if not a.verify:
        ctx.emit_graph(tube.build_twisted_tube(a.g))
        return 0
    cert = tube.verify_tube_certificate(a.g, threads=a.threads)
    if a.out:
        _write(a.out, cert.to_json())
    ctx.emit(cert.summary())
    return 0


def cmd_wide(ctx, a):
    g = load_graph(a.input)
    ok = weighted.is_g_wide(g, a.g)
    ctx.emit({"g": a.g, "g_wide": ok, "girths": weighted.girths_of(g).to_json()})
    return 0 if ok else 1


def cmd_triples(ctx, a):
    if a.triple:
        try:
            p, q, r = (int(x) for x in a.triple.split(","))
        except ValueError as exc:
            raise UsageError(f"bad triple {a.triple!r}") from exc
        closed = weighted.triple_is_g_wide(p, q, r, a.g)
        gadget = weighted.is_g_wide(weighted.build_T(p, q, r, a.g), a.g)
        ctx.emit({"triple": [p, q, r], "g": a.g, "closed_form": closed, "gadget": gadget})
        if closed != gadget:
            ctx.note("closed form and gadget disagree")
        return 0 if closed and gadget else 1
    ts = weighted.positive_Lg(a.g) if a.positive else weighted.enumerate_Lg(a.g)
    ctx.emit({"g": a.g, "count": len(ts), "triples": [list(t) for t in sorted(ts)]})
    return 0


def cmd_dist(ctx, a):
    g = load_signed(a.input)
    row = distance.algebraic_distances(g, getattr(a, "from"))
    out = {"from": getattr(a, "from"), "ad": row}
    if a.g:
        out["f_g"] = [None if x is None else distance.f_g_transform(x, a.g) for x in row]
        out["g"] = a.g
    ctx.emit(out)
    return 0


def cmd_certify(ctx, a):
    cert = distance.certify_sp_complete(load_signed(a.input), a.g)
    if cert is None:
        ctx.emit({"certificate": None, "g": a.g})
        ctx.note("no certificate")
        return 1
    if a.out:
        _write(a.out, cert.to_json())
    ctx.emit(cert.summary())
    return 0


def cmd_lift(ctx, a):
    cert = _load_certificate(a.cert)
    lifted = distance.lift_certificate(cert)
    if a.out:
        _write(a.out, lifted.to_json())
    ctx.emit(lifted.summary())
    return 0


def _load_certificate(path) -> Certificate:
    try:
        return Certificate.from_json(_read_json(path))
    except CertificateError as exc:
        raise UsageError(str(exc)) from exc


def cmd_hom(ctx, a):
    src, tgt = load_signed(a.src), load_signed(a.tgt)
    filt = hom.no_hom_filter(src, tgt)
    h = hom.find_homomorphism(src, tgt)
    if h is None:
        ctx.emit({"homomorphism": None, "girth_filter": filt})
        return 1
    if a.witness:
        _write(a.witness, h.to_json())
    ctx.emit({"homomorphism": h.to_json(), "girth_filter": filt})
    return 0


def cmd_gen(ctx, a):
    cls = {"c10": core.C10, "c11": core.C11}[a.cls]
    try:
        g = hom.random_sp_signed_graph(a.n, a.seed, (a.g, cls))
    except hom.GenerationError as exc:
        ctx.note(str(exc))
        return 1
    ctx.emit_graph(g)
    return 0


def cmd_export(ctx, a):
    ctx.emit_graph(load_graph(a.input))
    return 0


def cmd_verify(ctx, a):
    if a.cert:
        errs = _load_certificate(a.cert).problems()
        ctx.emit({"valid": not errs, "problems": errs})
        return 0 if not errs else 1
    if not (a.hom and a.src and a.tgt):
        raise UsageError("verify needs --cert, or --hom with --src and --tgt")
    h = hom.Homomorphism.from_json(_read_json(a.hom))
    ok = hom.verify_homomorphism(h, load_signed(a.src), load_signed(a.tgt))
    ctx.emit({"valid": ok})
    return 0 if ok else 1


def _default_threads():
    raw = os.environ.get("SGH_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--emit", choices=("json", "dot"), default="json")
    common.add_argument("--quiet", action="store_true", help="no notes on stderr")
    common.add_argument("--threads", type=int, default=_default_threads(),
                        help="worker processes (default: $SGH_THREADS or 1)")

    parser = argparse.ArgumentParser(prog="sgh", description="Signed graph bounds toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(fn=fn)
        return p

    p = add("girths", cmd_girths, "four walk-girths (null is infinity)")
    p.add_argument("--in", dest="input", required=True)
    p = add("switch", cmd_switch, "switch at a vertex set")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--set", default="", help="comma separated vertices")
    p = add("eqv", cmd_eqv, "switching equivalence")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p = add("edc", cmd_edc, "extended double cover")
    p.add_argument("--in", dest="input", required=True)
    p = add("spc", cmd_spc, "signed projective cube")
    p.add_argument("--k", type=int, required=True)
    p = add("tube", cmd_tube, "twisted tube, optionally with its certificate")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--out", help="write the certificate here")
    p = add("wide", cmd_wide, "g-wide test")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--g", type=int, required=True)
    p = add("triples", cmd_triples, "list L_g or check one triple")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--positive", action="store_true")
    p.add_argument("--triple", help="p,q,r")
    p = add("dist", cmd_dist, "algebraic distances from a vertex")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--from", type=int, required=True)
    p.add_argument("--g", type=int)
    p = add("certify", cmd_certify, "search an SP-completeness certificate")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--out")
    p = add("lift", cmd_lift, "lift a certificate to the double cover")
    p.add_argument("--cert", required=True)
    p.add_argument("--out")
    p = add("hom", cmd_hom, "find a homomorphism")
    p.add_argument("--src", required=True)
    p.add_argument("--tgt", required=True)
    p.add_argument("--witness")
    p = add("gen", cmd_gen, "random signed partial 2-tree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=("c10", "c11"), required=True)
    p = add("export", cmd_export, "re-emit a graph as JSON or DOT")
    p.add_argument("--in", dest="input", required=True)
    p = add("verify", cmd_verify, "check a certificate or a homomorphism witness")
    p.add_argument("--cert")
    p.add_argument("--hom")
    p.add_argument("--src")
    p.add_argument("--tgt")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    ctx = Ctx(args)
    try:
        code = args.fn(ctx, args)
    except (UsageError, GraphError, CertificateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TheoremViolation as exc:
        for line in ctx.out:
            print(line)
        print(f"violation: {exc}", file=sys.stderr)
        return 1
    for line in ctx.out:
        print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
