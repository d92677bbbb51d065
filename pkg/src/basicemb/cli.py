"""Command line interface.

Exit status: 0 when the answer is positive or something was constructed,
1 for a negative decision (the document carries the certificate), 2 for
malformed input or a violated precondition.
"""

import argparse
import sys

from . import decomp, formats, game, graphs, rook, sequences
from .formats import Block, ParseError, Table, render_doc
from .rational import parse_rat

FORMAT = "basicemb/1"

EPILOG = """\
examples:
  basicemb analyze grid.txt
  basicemb decompose --min-norm -e "0 0 : 1; 1 0 : -1"
  basicemb game cube.txt
  basicemb graph --plane --rxt 3 tree.txt
  basicemb seq alternating --family power --rule harmonic --N 1000
  basicemb gen alternating 3 > alt3.txt
"""


class InputError(Exception):
    pass


def _read_input(args):
    if args.expr is not None and args.input is not None:
        raise InputError("give either an input file or --expr, not both")
    if args.expr is not None:
        return args.expr.replace(";", "\n")
    if args.input is None:
        raise InputError("no input: pass a file path, '-' for stdin, or --expr")
    if args.input == "-":
        return sys.stdin.read()
    try:
        with open(args.input) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc.strerror}") from None


def _has_values(text):
    return any(":" in line.split("#", 1)[0] for line in text.splitlines())


def _points_any(text, dim=None):
    """Points from a point file or a valued file (values dropped)."""
    if _has_values(text):
        return [p for p, _ in formats.parse_points(text, dim=dim, valued=True)]
    return formats.parse_points(text, dim=dim)


def _header(command):
    return Block().add("format", FORMAT).add("command", command)


def _pt_list(points):
    return [tuple(p) for p in points]


def _array_block(arr):
    b = Block()
    b.add("parity", arr.parity).add("closed", arr.closed).add("length", len(arr.points))
    b.add("points", _pt_list(arr.points))
    return b


def _depth_value(d):
    if isinstance(d, rook.Finite):
        return f"finite {d.n}"
    return f"cyclic {len(d.core)}"


# analyze ----------------------------------------------------------------

def cmd_analyze(args, text):
    K = rook.point_set(_points_any(text, dim=2))
    doc = _header("analyze")
    doc.add("points", len(K))
    g = rook.build_incidence(K)
    doc.add("x_values", len(g.x_nodes)).add("y_values", len(g.y_nodes))
    trace = rook.e_trace(K)
    doc.add("e_trace", [len(s) for s in trace])
    d = rook.e_depth(K)
    doc.add("depth", _depth_value(d))
    if isinstance(d, rook.Cyclic):
        doc.add("core", _pt_list(d.core))
    doc.add("classes", len(rook.equivalence_classes(K)))
    lo = rook.longest_odd_array(K)
    doc.add("longest_odd_array", "unbounded" if isinstance(lo, rook.Unbounded) else lo.length)
    v = rook.is_discontinuously_basic(K)
    doc.add("decision", "basic" if v.basic else "not-basic")
    if v.basic:
        doc.add("certificate", "peeling")
        doc.add("peeling", [len(s) for s in v.peeling])
    else:
        doc.add("certificate", "closed-array")
        doc.add("closed_array", _array_block(v.closed_array))
    return doc, 0 if v.basic else 1


# decompose --------------------------------------------------------------

def _decomp_block(doc, D, rep):
    doc.add("g", Table((x, v) for x, v in sorted(D.g.items())))
    doc.add("h", Table((y, v) for y, v in sorted(D.h.items())))
    doc.add("norms", Block([
        ("sup_g", rep.sup_g), ("sup_h", rep.sup_h), ("sup_f", rep.sup_f),
        ("residual", rep.residual), ("objective", rep.objective),
    ]))


def _obstruction(doc, ob):
    doc.add("decision", "not-decomposable")
    doc.add("certificate", "closed-array")
    doc.add("closed_array", _array_block(ob.cycle))
    doc.add("alternating_sum", ob.alternating_sum)


def cmd_decompose(args, text):
    rows = formats.parse_points(text, valued=True)
    dim = len(rows[0][0]) if rows else 2
    mode = args.mode or "exact"
    doc = _header("decompose")
    doc.add("mode", mode).add("dimension", dim).add("points", len(rows))
    if dim != 2:
        if mode != "exact":
            raise InputError(f"mode {mode} is only available in dimension 2")
        res = game.decompose_nd(dict(rows))
        if isinstance(res, game.KernelObstruction):
            doc.add("decision", "not-decomposable").add("certificate", "kernel-vector")
            doc.add("kernel_vector", Table((p, m) for p, m in zip(res.points, res.mu)))
            doc.add("pairing", res.pairing)
            return doc, 1
        doc.add("decision", "decomposable")
        for t, fn in enumerate(res.funcs):
            doc.add(f"g{t + 1}", Table((c, v) for c, v in sorted(fn.items())))
        return doc, 0
    Kf = decomp.valued_set(rows)
    if mode == "exact":
        res = decomp.decompose_exact(Kf)
        if isinstance(res, decomp.Obstruction2):
            _obstruction(doc, res)
            return doc, 1
        doc.add("decision", "decomposable")
        _decomp_block(doc, res, decomp.verify(Kf, res))
        return doc, 0
    if mode == "peel":
        if isinstance(rook.e_depth(Kf.base), rook.Cyclic):
            raise InputError("peeling needs a finite E-depth; use --exact")
        D = decomp.peel_decompose(Kf)
        doc.add("decision", "decomposable")
        _decomp_block(doc, D, decomp.verify(Kf, D))
        return doc, 0
    if mode == "min-norm":
        res = decomp.min_norm_exact(Kf)
        if isinstance(res, decomp.Obstruction2):
            _obstruction(doc, res)
            return doc, 1
        doc.add("decision", "decomposable")
        _decomp_block(doc, *res)
        return doc, 0
    D, rep = decomp.best_sup_approx(Kf)
    doc.add("decision", "approximated")
    _decomp_block(doc, D, rep)
    return doc, 0


# game -------------------------------------------------------------------

def cmd_game(args, text):
    pts = _points_any(text)
    dim = len(pts[0]) if pts else 2
    doc = _header("game")
    doc.add("dimension", dim).add("cells", len(pts))
    if dim == 2 and not args.algebraic:
        v = game.winner_2d(pts)
        doc.add("method", "combinatorial")
    else:
        v = game.winner_nd(pts)
        doc.add("method", "algebraic")
    doc.add("winner", v.winner).add("certificate", v.kind)
    if v.kind == "rook-route":
        doc.add("route", _array_block(v.certificate))
    elif v.kind == "peeling":
        doc.add("peeling", [len(s) for s in v.certificate])
    elif v.kind == "kernel-vector":
        points, mu = v.certificate
        doc.add("kernel_vector", Table((p, m) for p, m in zip(points, mu)))
    else:
        scheme = v.certificate
        rows = Block()
        for (t, c), row in zip(scheme.columns, scheme.matrix):
            rows.add(f"g{t + 1}({formats.fmt_value(c)})", " ".join(formats.fmt_value(a) for a in row))
        doc.add("scheme_points", _pt_list(scheme.points))
        doc.add("scheme", rows)
    return doc, 0 if v.winner == game.VI else 1


# graph ------------------------------------------------------------------

def cmd_graph(args, text):
    n, edges = formats.parse_graph(text)
    G = graphs.FiniteGraph(n, edges)
    doc = _header("graph")
    doc.add("vertices", G.n).add("edges", len(G.edges))
    doc.add("shape", "tree" if graphs.is_tree(G) else ("forest" if graphs.is_forest(G) else "cyclic"))
    want_plane = args.plane or not (args.rxt or args.defect or args.via_rn)
    negative = False
    if want_plane:
        v = graphs.basic_in_plane(G)
        b = Block().add("decision", v.basic)
        if not v.basic:
            b.add("reason", v.reason)
            if v.reason == "cycle":
                b.add("witness", "cycle " + " ".join(map(str, v.witness)))
            elif v.reason == "degree":
                b.add("witness", f"vertex {v.witness} of degree {G.degree(v.witness)}")
            else:
                b.add("witness", f"cross at {v.witness.center} branching at " + " ".join(map(str, v.witness.branches)))
        doc.add("plane", b)
        negative |= not v.basic
    if args.via_rn:
        if not graphs.is_tree(G):
            raise InputError("--via-rn needs a tree")
        r = graphs.basic_in_plane_via_Rn(G, args.via_rn)
        b = Block().add("n_max", args.via_rn)
        b.add("decision", "inconclusive" if r.inconclusive else r.contained)
        b.add("n", r.n)
        doc.add("via_rn", b)
        negative |= r.decision is False
    if args.defect or args.rxt:
        rep = graphs.defect(G)
        b = Block().add("delta", rep.delta)
        b.add("horrible", [v for v, c in enumerate(rep.vertices) if c.horrible])
        b.add("awful", [v for v, c in enumerate(rep.vertices) if c.awful])
        doc.add("defect", b)
    if args.rxt:
        if args.rxt < 3:
            raise InputError("--rxt needs n >= 3")
        ok = graphs.basic_in_R_x_Tn(G, args.rxt)
        doc.add("r_x_tn", Block().add("n", args.rxt).add("decision", ok))
        negative |= not ok
    return doc, 1 if negative else 0


# seq --------------------------------------------------------------------

_RULES_2D = {
    "x+y": lambda x, y: x + y,
    "xy": lambda x, y: x * y,
    "zero": lambda x, y: 0.0,
}


def _family(args):
    if args.family == "geometric":
        return sequences.geometric_family()
    if args.family == "power":
        return sequences.power_family()
    if args.input is None and args.expr is None:
        raise InputError("custom family needs an input array (n x y rows)")
    return sequences.custom_family(formats.parse_custom_array(_read_input(args)))


def _value_rule(name):
    if name == "harmonic":
        return sequences.harmonic_rule
    if name == "geometric":
        return sequences.geometric_rule
    if name.startswith("const:"):
        try:
            return sequences.const_rule(float(parse_rat(name[6:])))
        except ValueError:
            raise InputError(f"bad constant in rule {name!r}") from None
    raise InputError(f"unknown value rule {name!r}")


def cmd_seq(args, text):
    doc = _header("seq").add("diagnostic", args.kind)
    kind = args.kind
    if kind == "alternating":
        gen = _family(args)
        r = sequences.alternating_sums(gen, _value_rule(args.rule), args.N, tol=args.tol)
        doc.add("family", gen.family).add("rule", args.rule).add("N", r.terms)
        doc.add("tolerance", r.tol).add("threshold", r.threshold)
        doc.add("max_partial", r.max_partial).add("min_partial", min(r.partials))
        doc.add("max_abs_partial", r.max_abs).add("last_partial", r.partials[-1])
        doc.add("verdict", r.verdict)
        return doc, 0
    if kind == "tail-ratio":
        gen = _family(args)
        r = sequences.tail_ratio(gen, args.kmax, args.N)
        doc.add("family", gen.family).add("N", r.N).add("k_max", args.kmax)
        doc.add("max_ratio", r.max_ratio)
        doc.add("verdict", r.heuristic_verdict)
        doc.add("ratios", Block((f"r_{k}", v) for k, v in r.ratios))
        return doc, 0
    if kind == "geometric-decompose":
        if args.rule not in _RULES_2D:
            raise InputError(f"rule must be one of {', '.join(_RULES_2D)}")
        doc.add("rule", args.rule).add("depth", args.depth).add("tolerance", args.tol)
        try:
            r = sequences.geometric_decompose(_RULES_2D[args.rule], args.depth, args.tol)
            ok = True
        except sequences.GeometricDecompositionError as exc:
            r, ok = exc.report, False
        doc.add("residual", r.residual).add("worst_point", r.worst_point)
        doc.add("remainder", r.remainder).add("decision", ok)
        show = range(min(args.depth, 8))
        doc.add("g_quotients", Block((f"k={k}", r.g_quotients[k][1]) for k in show))
        doc.add("h_quotients", Block((f"k={k}", r.h_quotients[k][1]) for k in show))
        return doc, 0 if ok else 1
    if kind == "w-area":
        x = _arg_rat(args.value)
        doc.add("x", x).add("W", sequences.w_area(x))
        return doc, 0
    if kind == "cross-increment":
        d = _arg_rat(args.value)
        r = sequences.cross_g_increment(d, args.depth)
        doc.add("d", r.d).add("depth", r.depth).add("value", r.value)
        doc.add("value_float", float(r.value)).add("bound", r.bound).add("tolerance", r.tol)
        doc.add("decision", r.holds)
        return doc, 0 if r.holds else 1
    raise InputError(f"unknown diagnostic {kind!r}")


def _arg_rat(s):
    if s is None:
        raise InputError("missing value argument")
    try:
        return parse_rat(s)
    except ValueError as exc:
        raise InputError(str(exc)) from None


# gen --------------------------------------------------------------------

def cmd_gen(args):
    kind, n = args.family, args.n
    if n < 1:
        raise InputError("size parameter must be >= 1")
    if kind == "alternating":
        Kf = decomp.make_alternating_instance(n)
        return formats.write_points(Kf.base, Kf.values)
    if kind == "mij":
        Kf = decomp.gen_hard_instance(n)
        return formats.write_points(Kf.base, Kf.values)
    try:
        G = graphs.gen_F(n, args.cap) if kind == "F" else graphs.gen_R(n, args.cap)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return formats.write_graph(G)


# driver -----------------------------------------------------------------

def _add_input(p):
    p.add_argument("input", nargs="?", help="input file ('-' for stdin)")
    p.add_argument("-e", "--expr", help="inline input; ';' separates lines")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="basicemb",
        description="Decide and certify additive decompositions f(x,y) = g(x) + h(y) on finite sets.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--human", action="store_true", help="prefix a one-line summary")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="E-operator trace, depth, closed array, verdict")
    _add_input(p)

    p = sub.add_parser("decompose", help="exact / peel / min-norm / approx decomposition")
    _add_input(p)
    m = p.add_mutually_exclusive_group()
    for flag, mode in (("--exact", "exact"), ("--peel", "peel"), ("--min-norm", "min-norm"), ("--approx", "approx")):
        m.add_argument(flag, dest="mode", action="store_const", const=mode)

    p = sub.add_parser("game", help="who wins 'Dare you to decompose!'")
    _add_input(p)
    p.add_argument("--algebraic", action="store_true", help="use the kernel test in 2D as well")

    p = sub.add_parser("graph", help="basic embeddability of a finite graph")
    _add_input(p)
    p.add_argument("--plane", action="store_true", help="forbidden-subgraph criterion for the plane")
    p.add_argument("--via-rn", type=int, metavar="NMAX", help="search for the graph inside R_1..R_NMAX")
    p.add_argument("--rxt", type=int, metavar="N", help="criterion for R x T_N (N >= 3)")
    p.add_argument("--defect", action="store_true", help="vertex classification and defect")

    p = sub.add_parser("seq", help="sequence diagnostics")
    p.add_argument("kind", choices=["alternating", "tail-ratio", "geometric-decompose", "w-area", "cross-increment"])
    p.add_argument("value", nargs="?", help="x for w-area, d for cross-increment")
    p.add_argument("--family", choices=["geometric", "power", "custom"], default="power")
    p.add_argument("--input", help="custom array file (rows 'n x y')")
    p.add_argument("-e", "--expr", help="inline custom array; ';' separates lines")
    p.add_argument("--rule", default="harmonic")
    p.add_argument("--N", type=int, default=1000)
    p.add_argument("--kmax", type=int, default=50)
    p.add_argument("--depth", type=int, default=30)
    p.add_argument("--tol", type=float, default=None)

    p = sub.add_parser("gen", help="fixture families in re-parsable formats")
    p.add_argument("family", choices=["alternating", "mij", "F", "R"])
    p.add_argument("n", type=int)
    p.add_argument("--cap", type=int, default=graphs.DEFAULT_CAP)
    return parser


def _summary(doc):
    d = dict(doc)
    for key in ("decision", "winner", "verdict"):
        if key in d:
            return f"{d['command']}: {key} = {formats.fmt_value(d[key])}"
    return f"{d['command']}: done"


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "gen":
            out.write(cmd_gen(args))
            return 0
        if args.command == "seq":
            if args.tol is None:
                args.tol = 1e-9 if args.kind == "geometric-decompose" else 1e-6
            if args.kind == "geometric-decompose" and args.rule == "harmonic":
                args.rule = "x+y"
            doc, code = cmd_seq(args, None)
        else:
            text = _read_input(args)
            handler = {"analyze": cmd_analyze, "decompose": cmd_decompose, "game": cmd_game, "graph": cmd_graph}
            doc, code = handler[args.command](args, text)
    except ParseError as exc:
        doc = _header(args.command).add("error", exc.msg).add("line", exc.line).add("column", exc.col)
        code = 2
    except (InputError, ValueError) as exc:
        doc = _header(args.command).add("error", str(exc))
        code = 2
    doc.add("exit_status", code)
    if args.human:
        out.write(_summary(doc) + "\n")
    out.write(render_doc(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
