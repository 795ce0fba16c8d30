"""Command line front end: ``fsdual <verb> ...``.

Exit status: 0 verified true / success, 1 verified false, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import boolfn, codes, constructions, evenset, search
from .duality import (is_formally_dual_pair, is_formally_self_dual, is_primitive,
                      reduce_to_primitive)
from .errors import FsdError
from .fields import BinaryField, OddField, parse_field_spec
from .groups import Group
from .serialize import (bundle, format_element, format_set, load_bundle, parse_elements,
                        parse_pairing, parse_set)

log = logging.getLogger("fsdual")


class UsageError(Exception):
    pass


def _frac(q) -> str:
    if q is None:
        return "irrational"
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _tf(b) -> str:
    return "true" if b else "false"


def _emit(args, text_lines, doc):
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        for line in text_lines:
            print(line)


# --- inputs ------------------------------------------------------------------

def _load_inputs(args):
    """(pairing, set, dual set or None) from --input bundle or --group/--pairing/--set."""
    if getattr(args, "input", None):
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        return load_bundle(json.loads(text))
    if not args.group or args.set is None:
        raise UsageError("give --input BUNDLE or --group and --set")
    G = Group.parse(args.group)
    P = parse_pairing(G, args.pairing)
    S = parse_set(G, args.set)
    T = parse_set(G, args.dual_set) if getattr(args, "dual_set", None) else None
    return P, S, T


def _add_set_args(p, dual=True):
    p.add_argument("--group", help='group literal, e.g. "Z4" or "Z2xZ4xZ8"')
    p.add_argument("--pairing", default="standard",
                   help='"standard", a matrix such as "[[1,0],[0,1]]", or a JSON file')
    p.add_argument("--set", help='set literal, e.g. "{0,1}" or "{(0,0),(1,1)}"')
    if dual:
        p.add_argument("--dual-set", help="second set for a formally dual pair")
    p.add_argument("--input", help="JSON bundle with group, pairing, set (use - for stdin)")


# --- verbs -----------------------------------------------------------------

def cmd_verify(args) -> int:
    P, S, T = _load_inputs(args)
    if T is None:
        cert = is_formally_self_dual(P, S)
        label = "formally self dual"
    else:
        cert = is_formally_dual_pair(P, S, T)
        label = "formally dual pair"
    lines = [f"group: {P.group}", f"pairing: {json.dumps(P.to_json())}", f"set: {format_set(S)}"]
    if T is not None:
        lines.append(f"dual set: {format_set(T)}")
    lines.append(f"{label}: {_tf(cert.verdict)}")
    if cert.size_condition is not None:
        lines.append(f"size condition |S|^2 = |G|: {_tf(cert.size_condition)}")
    if cert.table and args.table:
        lines.append("element  nu  |chi|^2")
        for e, nu, q in cert.table:
            lines.append(f"{format_element(e)}  {nu}  {_frac(q)}")
    if cert.violations:
        lines.append("first violation: " + format_element(cert.first_violation))
    _emit(args, lines, cert.to_json())
    return 0 if cert.verdict else 1


def cmd_reduce(args) -> int:
    P, S, _ = _load_inputs(args)
    if not is_formally_self_dual(P, S).verdict:
        _emit(args, ["formally self dual: false", "nothing to reduce"],
              {"verdict": False, "steps": []})
        return 1
    P2, S2, trace = reduce_to_primitive(P, S, verify=args.verify_exact)
    lines = [f"start: {format_set(S)} in {P.group}"]
    for i, st in enumerate(trace, 1):
        lines.append(f"step {i}: H of order {st.containing_subgroup_order}, annihilator of order "
                     f"{st.annihilator_order}, quotient {st.quotient}, |S| {st.set_size} -> "
                     f"{st.reduced_size}, verified: {_tf(st.verified)}")
    lines.append(f"primitive: {format_set(S2)} in {P2.group}")
    lines.append(f"pairing: {json.dumps(P2.to_json())}")
    lines.append(f"trivial: {_tf(P2.group.order == 1)}")
    doc = {"verdict": True, "steps": [st.to_json() for st in trace],
           "result": bundle(P2, S2)}
    _emit(args, lines, doc)
    return 0


def cmd_evenset(args) -> int:
    P, S, _ = _load_inputs(args)
    G = P.group
    mu = evenset.even_decomposition(S)
    lines = [f"set: {format_set(S)} in {G}"]
    doc = {"even": mu is not None}
    if mu is None:
        lines.append("even: false")
        _emit(args, lines, doc)
        return 1
    lines.append("even: true")
    lines.append("decomposition:")
    for H, c in mu.terms:
        lines.append(f"  {_frac(c)} * <{','.join(format_element(g) for g in H.generators)}>"
                     f" (order {H.order})")
    doc["decomposition"] = mu.to_json()
    fsd = is_formally_self_dual(P, S).verdict
    lines.append(f"formally self dual: {_tf(fsd)}")
    doc["formally_self_dual"] = fsd
    if len(S) ** 2 == G.order:
        tab = evenset.SubgroupTables(P)
        lam = evenset.canonical_fsd_coefficients(P, S, mu, tab)
        sig_ok, ann_ok = evenset.canonical_symmetry_holds(P, S, lam, tab)
        zs = evenset.zero_sum_check(P, S, mu, tab)
        lines.append("canonical coefficients:")
        for H, c in lam.terms:
            lines.append(f"  {_frac(c)} * <{','.join(format_element(g) for g in H.generators)}>"
                         f" (order {H.order})")
        lines.append(f"sigma symmetry: {_tf(sig_ok)}")
        lines.append(f"annihilator symmetry: {_tf(ann_ok)}")
        lines.append(f"zero sum criterion: {_tf(zs)}")
        doc.update({"canonical": lam.to_json(), "sigma_symmetry": sig_ok,
                    "annihilator_symmetry": ann_ok, "zero_sum": zs})
    _emit(args, lines, doc)
    return 0


def _construct_output(args, P, S, T=None, **extra):
    lines = [f"group: {P.group}", f"pairing: {json.dumps(P.to_json())}", f"set: {format_set(S)}"]
    if T is not None:
        lines.append(f"dual set: {format_set(T)}")
    for k, v in extra.items():
        lines.append(f"{k}: {v}")
    doc = bundle(P, S, T, **extra)
    if args.verify_exact:
        cert = is_formally_self_dual(P, S)
        lines.append(f"formally self dual: {_tf(cert.verdict)}")
        prim, reason = is_primitive(S)
        lines.append(f"primitive: {_tf(prim)}" + (f" ({reason})" if reason else ""))
        doc["verified"] = cert.verdict
        doc["primitive"] = prim
    _emit(args, lines, doc)
    return 0


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "tito":
        return _construct_output(args, *constructions.tito())
    if kind == "lattice":
        return _construct_output(args, *constructions.lattice_example(args.n))
    if kind == "gaussian":
        return _construct_output(args, *constructions.gaussian_example(args.p, args.alpha))
    if kind == "sporadic":
        items = constructions.sporadic_order64()
        if not 1 <= args.index <= len(items):
            raise UsageError(f"--index must be in 1..{len(items)}")
        return _construct_output(args, *items[args.index - 1])
    if kind == "paley":
        F = OddField(args.p, args.m)
        Pc, S, T, rep = constructions.paley_self_dual(F, args.alpha, args.beta)
        return _construct_output(args, Pc, S, None, dstar=rep["Dstar"])
    raise UsageError(f"unknown construction {kind}")


def _field(args) -> BinaryField:
    return parse_field_spec(args.field)


def cmd_boolfn(args) -> int:
    act = args.action
    if act == "gold-scan":
        ns = [int(v) for v in args.n.split(",")]
        its = [int(v) for v in args.i.split(",")] if args.i else None
        rows = boolfn.gold_scan(ns, its)
        lines = ["n  i  exponent  graph self dual"]
        lines += [f"{r.n}  {r.i}  {r.exponent}  {_tf(r.verdict)}" for r in rows]
        _emit(args, lines, [r.to_json() for r in rows])
        return 0
    if act == "ab-scan":
        ns = [int(v) for v in args.n.split(",")]
        rows = boolfn.ab_scan(ns)
        lines = ["n  family  parameter  exponent  ab  graph self dual"]
        lines += [f"{r['n']}  {r['family']}  {r['parameter'] if r['parameter'] is not None else '-'}  "
                  f"{r['exponent']}  {_tf(r['ab'])}  {_tf(r['verdict'])}" for r in rows]
        _emit(args, lines, rows)
        return 0
    Fq = _field(args)
    if act == "linpoly":
        coeffs = tuple(int(v, 0) for v in args.coeffs.split(","))
        L = boolfn.LinearizedPolynomial(Fq, coeffs)
        inv = boolfn.linpoly_inverse(L)
        adj = boolfn.linpoly_adjoint(L)
        cond = boolfn.selfdual_condition(L)
        lines = [f"L(x) = {L}", f"adjoint: {adj}",
                 f"inverse: {inv if inv is not None else 'none (singular)'}",
                 f"L = (L^-1)*: {_tf(cond)}"]
        doc = {"coeffs": list(L.coeffs), "adjoint": list(adj.coeffs),
               "inverse": list(inv.coeffs) if inv is not None else None, "selfdual_condition": cond}
        _emit(args, lines, doc)
        return 0 if cond else 1
    F = boolfn.parse_function(Fq, args.function)
    if act == "transform":
        L1 = boolfn.LinearizedPolynomial(Fq, tuple(int(v, 0) for v in args.l1.split(",")))
        L2 = boolfn.LinearizedPolynomial(Fq, tuple(int(v, 0) for v in args.l2.split(",")))
        F2 = boolfn.transform_graph(F, L1, L2)
        if args.inverse:
            F2 = boolfn.inverse_graph(F2)
        poly = boolfn.polynomial_str(Fq, F2.polynomial())
        ok = boolfn.graph_fsd_check(F2).verdict
        _emit(args, [f"F'(x) = {poly}", f"graph formally self dual: {_tf(ok)}"],
              {"values": list(F2.values), "polynomial": poly, "verdict": ok})
        return 0 if ok else 1
    if act == "classify":
        c = boolfn.classify(F)
        lines = [f"bijective: {_tf(c.bijective)}", f"apn: {_tf(c.apn)}", f"ab: {_tf(c.ab)}"]
        if c.note:
            lines.append(f"note: {c.note}")
        _emit(args, lines, c.to_json())
        return 0
    if act == "walsh":
        W = boolfn.walsh_table(F)
        lines = [" ".join(str(int(v)) for v in row) for row in W]
        _emit(args, lines, {"walsh": W.tolist()})
        return 0
    if act == "differential":
        D = boolfn.differential_table(F)
        lines = [" ".join(str(int(v)) for v in row) for row in D]
        _emit(args, lines, {"differential": D.tolist()})
        return 0
    if act == "graph-check":
        cert = boolfn.graph_fsd_check(F)
        div = boolfn.walsh_divisibility_check(F)
        lines = [f"graph formally self dual: {_tf(cert.verdict)}",
                 f"walsh divisibility: {_tf(div)}"]
        if cert.violations:
            lines.append("first violation: " + format_element(cert.first_violation))
        doc = cert.to_json()
        doc["walsh_divisibility"] = div
        _emit(args, lines, doc)
        return 0 if cert.verdict else 1
    raise UsageError(f"unknown boolfn action {act}")


def _read_code(path, alphabet):
    return codes.read_code(path, alphabet)


def cmd_codes(args) -> int:
    act = args.action
    if act == "gray":
        w = tuple(int(v) for v in args.word.split(","))
        g = codes.gray_map(w)
        _emit(args, [" ".join(str(v) for v in g)], {"word": list(w), "gray": list(g)})
        return 0
    if act == "z4-span":
        gens = [tuple(int(v) for v in g.split(",")) for g in args.gen]
        C = codes.z4_span(gens)
        out = codes.gray_image(C) if args.gray else C
        lines = [" ".join(str(v) for v in w) for w in out.words]
        _emit(args, lines, {"alphabet": str(out.alphabet), "words": [list(w) for w in out.words]})
        return 0
    C = _read_code(args.input, args.alphabet)
    if act in ("weight", "distance"):
        E = codes.weight_enumerator_poly(C) if act == "weight" else codes.distance_enumerator_poly(C)
        _emit(args, [str(E), E.coeff_line()], {"poly": str(E), "coefficients": E.coeff_line().split()})
        return 0
    if act == "macwilliams":
        E = codes.distance_enumerator_poly(C) if args.distance else codes.weight_enumerator_poly(C)
        size = Fraction(args.size) if args.size else (1 if args.distance else len(C))
        M = codes.macwilliams_transform(E, C.q, size)
        _emit(args, [str(M), M.coeff_line()], {"poly": str(M), "coefficients": M.coeff_line().split()})
        return 0
    if act == "identity":
        ok = codes.char_sum_distance_identity_check(C)
        _emit(args, [f"character sum identity: {_tf(ok)}"], {"identity": ok})
        return 0 if ok else 1
    if act in ("dual-check", "zero-counts"):
        if not args.other:
            raise UsageError("--other CODEFILE is required")
        Cp = _read_code(args.other, args.alphabet)
        if act == "dual-check":
            r = codes.formal_dual_codes_check(C, Cp)
            _emit(args, [f"dual weight enumerators: {_tf(r.weight_dual)}",
                         f"dual distance enumerators: {_tf(r.distance_dual)}",
                         f"formal dual codes: {_tf(r.formal_dual)}"], r.to_json())
            return 0 if r.formal_dual else 1
        zc, zn = codes.count_zero_charsums_and_zero_nu(C, Cp)
        cert = codes.no_pairing_certificate(C, Cp)
        lines = [f"vanishing character sums of C: {zc}", f"zeros of nu_C': {zn}"]
        if cert:
            lines.append("no pairing makes C, C' formally dual sets")
        _emit(args, lines, {"zero_char_sums": zc, "zero_nu": zn, "certificate": cert})
        return 0
    raise UsageError(f"unknown codes action {act}")


def cmd_search(args) -> int:
    G = Group.parse(args.group)
    all_p = args.pairing == "all"
    P = None if all_p else parse_pairing(G, args.pairing)
    seed = parse_elements(G, args.seed_prefix) if args.seed_prefix else ()
    spec = search.SearchSpec(G, args.size, P, all_pairings=all_p, canonical=args.canonical,
                             prune=not args.no_prune, budget_nodes=args.budget_nodes,
                             seed_prefix=tuple(seed), threads=args.threads,
                             group_bound=args.group_bound)
    if args.mode == "pairs":
        res = search.search_fd_pairs(spec)
    else:
        res = search.search_fsd(spec)
    lines = []
    for h in res.hits:
        line = format_set(h.set)
        if h.dual_set is not None:
            line += " ~ " + format_set(h.dual_set)
        if all_p:
            line += "  pairing " + json.dumps(h.pairing.to_json())
        line += "  primitive" if h.primitive else f"  non-primitive ({h.reason})"
        lines.append(line)
    lines.append(f"hits: {len(res.hits)}  nodes: {res.nodes}  partial: {_tf(res.partial)}")
    if args.emit_certificates:
        out = Path(args.emit_certificates)
        out.mkdir(parents=True, exist_ok=True)
        for i, h in enumerate(res.hits):
            if h.dual_set is None:
                cert = is_formally_self_dual(h.pairing, h.set).to_json()
            else:
                cert = is_formally_dual_pair(h.pairing, h.set, h.dual_set).to_json()
            cert["primitive"] = h.primitive
            (out / f"hit_{i:04d}.json").write_text(json.dumps(cert, indent=2) + "\n")
    _emit(args, lines, res.to_json())
    return 0


# --- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    def global_flags(default):
        g = argparse.ArgumentParser(add_help=False)
        d = (lambda v: v) if default else (lambda v: argparse.SUPPRESS)
        g.add_argument("--format", choices=("text", "json"), default=d("text"))
        g.add_argument("--threads", type=int, default=d(1))
        g.add_argument("--verify-exact", action=argparse.BooleanOptionalAction, default=d(True),
                       help="re-run the exact verifier on constructed or reduced sets")
        g.add_argument("-v", "--verbose", action="store_true", default=d(False))
        return g

    # global flags are accepted before or after the verb
    common = global_flags(False)
    ap = argparse.ArgumentParser(prog="fsdual", parents=[global_flags(True)],
                                 description="Formal duality in finite abelian groups.")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("verify", parents=[common], help="check formal (self) duality")
    _add_set_args(p)
    p.add_argument("--table", action=argparse.BooleanOptionalAction, default=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", parents=[common], help="reduce a self dual set to a primitive one")
    _add_set_args(p, dual=False)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("evenset", parents=[common], help="even-set decomposition and canonical form")
    _add_set_args(p, dual=False)
    p.set_defaults(func=cmd_evenset)

    p = sub.add_parser("construct", parents=[common], help="build a known example")
    p.add_argument("kind", choices=("tito", "lattice", "gaussian", "paley", "sporadic"))
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--p", type=int, default=3)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--alpha", type=int, default=1)
    p.add_argument("--beta", type=int, default=2)
    p.add_argument("--index", type=int, default=1)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("boolfn", parents=[common], help="vectorial Boolean functions")
    p.add_argument("action", choices=("classify", "walsh", "differential", "graph-check",
                                      "gold-scan", "ab-scan", "linpoly", "transform"))
    p.add_argument("--field", default="n=3", help='e.g. "n=3,poly=0b1011"')
    p.add_argument("--function", default="x^3",
                   help='"x^d", "coeffs:c0,c1,...", "poly:k:c,..." or a value table')
    p.add_argument("--n", default="3", help="comma separated n values for scans")
    p.add_argument("--i", help="comma separated i values for gold-scan")
    p.add_argument("--coeffs", default="1", help="c_0,...,c_{n-1} of a linearized polynomial")
    p.add_argument("--l1", default="1")
    p.add_argument("--l2", default="1")
    p.add_argument("--inverse", action="store_true", help="also invert the transformed function")
    p.set_defaults(func=cmd_boolfn)

    p = sub.add_parser("codes", parents=[common], help="enumerators and the MacWilliams transform")
    p.add_argument("action", choices=("weight", "distance", "macwilliams", "identity", "dual-check",
                                      "zero-counts", "gray", "z4-span"))
    p.add_argument("--input", help="code file (one word per line)")
    p.add_argument("--other", help="second code file")
    p.add_argument("--alphabet", help='override the file header, e.g. "F3", "Z4", "F8"')
    p.add_argument("--size", help="divisor for the transform (default |C|)")
    p.add_argument("--distance", action="store_true", help="transform the distance enumerator")
    p.add_argument("--word", help="Z4 word for gray, e.g. 2,1,3,1")
    p.add_argument("--gen", action="append", default=[], help="Z4 generator, repeatable")
    p.add_argument("--gray", action="store_true", help="print the Gray image of the span")
    p.set_defaults(func=cmd_codes)

    p = sub.add_parser("search", parents=[common], help="pruned search for self dual sets")
    p.add_argument("--group", required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--pairing", default="standard", help='"standard", "all", a matrix or a file')
    p.add_argument("--mode", choices=("fsd", "pairs"), default="fsd")
    p.add_argument("--canonical", choices=search.CANON_MODES, default="translation")
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--budget-nodes", type=int)
    p.add_argument("--seed-prefix", help='forced elements, e.g. "(0,0,0),(0,0,1)"')
    p.add_argument("--group-bound", type=int, default=search.DEFAULT_GROUP_BOUND)
    p.add_argument("--emit-certificates", metavar="DIR")
    p.set_defaults(func=cmd_search)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (FsdError, UsageError, ValueError, KeyError, OSError) as e:
        if isinstance(e, AssertionError):
            raise
        print(f"error: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
