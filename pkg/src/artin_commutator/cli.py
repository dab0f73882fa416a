"""Command-line interface.

Exit status: 0 on success, match, pass or equality; 1 on mismatch, violation,
failure or inequality; 2 on usage and parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import catalogue as cat
from .coxeter import (GraphError, SphericalType, catalogue_graph, classify, odd_components,
                      parse_graph)
from .families import LIBRARY, UnknownFamily, expected_window, get_family
from .garside import crisp_embed_B, garside_decompose, normal_form, word_equal
from .lemmas import LEMMA_IDS, verify_lemma
from .presentation import Presentation, abelianize, artin_presentation, parse_presentation
from .probe import DEFAULT_PROBES, ProbeSpec, probe_consequence
from .schreier import (UnsupportedTransversal, compare_presentations, degree_vector, derive_window,
                       format_named, format_sword, reduce_window, tau_rewrite)
from .words import WordError, format_word, parse_word

OK_STATUSES = {"ok", "match", "pass", "consistent", "equal", "classified"}
FAIL_STATUSES = {"mismatch", "violation", "fail", "unequal", "none"}


class UsageError(Exception):
    pass


def exit_code(status: str) -> int:
    if status in OK_STATUSES:
        return 0
    if status in FAIL_STATUSES:
        return 1
    return 2


def _graph(args):
    if getattr(args, "graph", None):
        try:
            with open(args.graph, encoding="utf-8") as fh:
                return parse_graph(fh.read())
        except OSError as e:
            raise UsageError(str(e)) from None
    t = getattr(args, "type", None) or getattr(args, "type_pos", None)
    if not t:
        raise UsageError("a graph is required: use --type or --graph")
    return catalogue_graph(t)


def _type(args) -> SphericalType:
    t = getattr(args, "type_pos", None) or getattr(args, "type", None)
    if t:
        return SphericalType.parse(t)
    t = classify(_graph(args))
    if t is None:
        raise UsageError("graph is not of spherical type")
    return t


def _word(text, g):
    return parse_word(text, g.vertices)


# -- verbs ------------------------------------------------------------------

def cmd_classify(args):
    t = classify(_graph(args))
    if t is None:
        return {"status": "none", "type": None}, "none"
    return {"status": "classified", "type": str(t)}, str(t)


def cmd_present(args):
    g = _graph(args)
    p = artin_presentation(g, args.flavor)
    return {"status": "ok", **p.to_json()}, p.to_text().rstrip()


def cmd_odd(args):
    g = _graph(args)
    comps = [[g.vertices[v] for v in c] for c in odd_components(g)]
    return {"status": "ok", "components": comps}, "\n".join(" ".join(c) for c in comps)


def cmd_abelianize(args):
    if args.presentation:
        with open(args.presentation, encoding="utf-8") as fh:
            p = parse_presentation(fh.read())
    else:
        p = artin_presentation(_graph(args))
    ab = abelianize(p)
    return {"status": "ok", "freeRank": ab.free_rank, "torsion": list(ab.torsion)}, str(ab)


def cmd_degree(args):
    g = _graph(args)
    d = degree_vector(_word(args.word, g), g)
    return {"status": "ok", "degree": list(d)}, "(" + ", ".join(map(str, d)) + ")"


def cmd_rs_derive(args):
    g = _graph(args)
    if args.reduce:
        red = reduce_window(g, args.window)
        p, dropped = red.presentation, red.dropped
    else:
        win = derive_window(g, args.window)
        p, dropped = win.presentation, win.dropped
    text = p.to_text() + f"# dropped relators: {dropped}"
    return {"status": "ok", **p.to_json(), "droppedRelators": dropped}, text


def cmd_rs_rewrite(args):
    g = _graph(args)
    sw = tau_rewrite(_word(args.word, g), g)
    return {"status": "ok", "rewritten": format_sword(sw, g)}, format_sword(sw, g)


def cmd_instantiate(args):
    get_family(args.family)
    rels = [format_named(r) for r in LIBRARY[args.family].instances(args.rank, args.window)] \
        if args.window >= 0 else []
    return {"status": "ok", "family": args.family, "relators": rels}, "\n".join(rels)


_COMPARE_KEYS = {"A": "A", "F": "F", "H": "H"}


def cmd_compare(args):
    t = _type(args)
    g = catalogue_graph(t)
    if t.family == "B":
        if t.rank < 4:
            raise UsageError("no relator families stored for B2 and B3")
        key = "B4" if t.rank == 4 else "B"
    elif t.family in _COMPARE_KEYS and t.family != "F":
        key = _COMPARE_KEYS[t.family]
    else:
        raise UsageError(f"no relator families stored for {t}")
    red = reduce_window(g, args.window)
    rep = compare_presentations(red.presentation, expected_window(key, t.rank, args.window), red.dropped)
    payload = rep.to_json()
    text = (f"{payload['status']}: {len(rep.missing)} missing, {len(rep.extra)} extra, "
            f"{rep.dropped} dropped")
    for r in payload["missing"]:
        text += f"\n  missing: {r}"
    for r in payload["extra"]:
        text += f"\n  extra: {r}"
    return payload, text


def cmd_verify_lemma(args):
    if args.lemma not in LEMMA_IDS:
        raise UsageError(f"unknown lemma {args.lemma}; expected one of {', '.join(LEMMA_IDS)}")
    w = (-args.window, args.window)
    probes = (ProbeSpec(3), ProbeSpec(4), ProbeSpec(5, "random", args.trials))
    rep = verify_lemma(args.lemma, w, probes, seed=args.seed, cert_window=w)
    payload = rep.to_json()
    text = f"{payload['status']}; {len(rep.certified)} certificates"
    return payload, text


def cmd_catalogue(args):
    e = cat.commutator_presentation(_type(args), args.window)
    p = e.presentation
    lines = [f"# {e.provenance} ({e.kind})"]
    lines += [f"# {n}" for n in e.notes]
    lines.append(p.to_text().rstrip())
    lines += [f"# {k} = {format_word(v, catalogue_graph(e.type).vertices)}" for k, v in p.ambient.items()]
    return {"status": "ok", **e.to_json()}, "\n".join(lines)


def cmd_verify_sound(args):
    e = cat.commutator_presentation(_type(args), args.window)
    rep = cat.verify_soundness(e)
    payload = rep.to_json()
    nfail = sum(1 for _, ok, _ in rep.relators if not ok) + sum(1 for _, _, ok in rep.generators if not ok)
    text = f"{payload['status']}: {len(rep.relators)} relators, {len(rep.generators)} generators, {nfail} failures"
    return payload, text


def cmd_nf(args):
    g = _graph(args)
    nf = normal_form(_word(args.word, g), g)
    payload = {"status": "ok", **nf.to_json(g.vertices)}
    text = f"Delta^{nf.inf}" + "".join(f" . {f}" for f in payload["factors"])
    return payload, text


def cmd_eq(args):
    g = _graph(args)
    eq = word_equal(_word(args.u, g), _word(args.v, g), g)
    s = "equal" if eq else "unequal"
    return {"status": s}, s


def cmd_decompose(args):
    g = _graph(args)
    U1, U2 = garside_decompose(_word(args.word, g), g)
    f1, f2 = format_word(U1, g.vertices), format_word(U2, g.vertices)
    return {"status": "ok", "U1": f1, "U2": f2}, f"U1 = {f1}\nU2 = {f2}"


def cmd_embed_b(args):
    n = args.rank
    if n is None:
        t = _type(args)
        if t.family != "B":
            raise UsageError("embed-b needs a type B graph or --rank")
        n = t.rank
    names = [f"b{i}" for i in range(1, n + 1)]
    w = parse_word(args.word, names)
    img = crisp_embed_B(w, n)
    text = format_word(img, [f"a{i}" for i in range(1, n + 1)])
    return {"status": "ok", "image": text}, text


def cmd_probe(args):
    with open(args.presentation, encoding="utf-8") as fh:
        p: Presentation = parse_presentation(fh.read())
    from .presentation import relator_from_text

    targets = [relator_from_text(t, p.generators) for t in args.target]
    probes = DEFAULT_PROBES
    if args.degrees:
        probes = tuple(ProbeSpec(int(d), "exhaustive" if int(d) <= 4 else "random", args.trials)
                       for d in args.degrees.split(","))
    res = probe_consequence(list(p.relators), targets, p.ngens, probes, args.seed, list(p.generators))
    payload = res.to_json()
    if res.witness is not None:
        payload["witness"] = {k: v for k, v in res.witness.items() if k != "image_indices"}
    text = payload["status"]
    if res.witness:
        text += f" in {res.witness['group']}: " + ", ".join(f"{k} -> {v}" for k, v in res.witness["images"].items())
    return payload, text


def cmd_report(args):
    rows = cat.properties_table()
    verdicts = [cat.indicability_verdict(SphericalType.parse(r.type), r) for r in rows]
    ok = all(r.match for r in rows) and all(v.consistent for v in verdicts)
    payload = {"status": "pass" if ok else "fail",
               "properties": [r.to_json() for r in rows],
               "indicability": [v.to_json() for v in verdicts],
               "inclusions": cat.inclusions()}
    head = f"{'type':7} {'fg':4} {'fp':8} {'perfect':8} {'abelianization':15} {'LI':8} {'RO':8} {'BO':3}"
    lines = [head, "-" * len(head)]
    for r, v in zip(rows, verdicts):
        ab = str(r.abelianization) if r.finitely_generated == "yes" else f"{r.abelianization} (window)"
        lines.append(f"{r.type:7} {r.finitely_generated:4} {r.finitely_presented:8} {r.perfect:8} "
                     f"{ab:15} {v.locally_indicable:8} {v.right_orderable:8} {v.bi_orderable:3}")
    lines.append(payload["status"])
    return payload, "\n".join(lines)


VERBS = {
    "classify": cmd_classify, "present": cmd_present, "odd": cmd_odd, "abelianize": cmd_abelianize,
    "degree": cmd_degree, "rs-derive": cmd_rs_derive, "rs-rewrite": cmd_rs_rewrite,
    "instantiate": cmd_instantiate, "compare": cmd_compare, "verify-lemma": cmd_verify_lemma,
    "catalogue": cmd_catalogue, "verify-sound": cmd_verify_sound, "nf": cmd_nf, "eq": cmd_eq,
    "decompose": cmd_decompose, "embed-b": cmd_embed_b, "probe": cmd_probe, "report": cmd_report,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--type", help="catalogue type such as A4, B5 or I2(7)")
    common.add_argument("--graph", help="graph file")
    common.add_argument("--window", type=int, default=3, help="window radius N")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="print the JSON payload")

    ap = _Parser(prog="artin-commutator", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="verb", parser_class=_Parser)
    for verb in VERBS:
        sp = sub.add_parser(verb, parents=[common])
        if verb == "present":
            sp.add_argument("--flavor", choices=("artin", "coxeter"), default="artin")
        elif verb == "abelianize":
            sp.add_argument("--presentation", help="presentation file")
        elif verb in ("degree", "rs-rewrite", "nf", "decompose"):
            sp.add_argument("word")
        elif verb == "rs-derive":
            sp.add_argument("--reduce", action="store_true", help="Tietze-reduce and rename")
        elif verb == "instantiate":
            sp.add_argument("family")
            sp.add_argument("--rank", type=int, required=True)
        elif verb in ("compare", "catalogue", "verify-sound"):
            sp.add_argument("type_pos", nargs="?", metavar="type")
        elif verb == "verify-lemma":
            sp.add_argument("lemma")
            sp.add_argument("--trials", type=int, default=10_000)
        elif verb == "eq":
            sp.add_argument("u")
            sp.add_argument("v")
        elif verb == "embed-b":
            sp.add_argument("word")
            sp.add_argument("--rank", type=int)
        elif verb == "probe":
            sp.add_argument("presentation")
            sp.add_argument("--target", action="append", required=True)
            sp.add_argument("--degrees", help="comma-separated probe degrees")
            sp.add_argument("--trials", type=int, default=10_000)
    return ap


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if not args.verb:
            raise UsageError("missing verb")
        if args.window < 0 and args.verb != "instantiate":
            raise UsageError("window must be nonnegative")
        payload, text = VERBS[args.verb](args)
    except (UsageError, WordError, GraphError, UnknownFamily, UnsupportedTransversal, cat.UnknownType,
            ValueError, OSError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        if argv is not None and "--json" in argv:
            print(json.dumps({"status": "error", "error": msg}), file=out)
        else:
            print(f"error: {msg}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(payload, indent=2, default=str), file=out)
    else:
        print(text, file=out)
    return exit_code(payload["status"])


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
