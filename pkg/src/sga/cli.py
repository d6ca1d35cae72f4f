"""Command-line interface.

Exit codes: 0 ok, 2 parse error, 3 precondition violation, 4 verified
theorem mismatch (the --both modes).
"""

from __future__ import annotations

import argparse
import sys

from . import gf
from .admissible import (classify, enumerate_adm, enumerate_adm_direct,
                         is_admissible, tau_adm, tau_adm_via_successors)
from .errors import ParseError, SgaError, TheoremViolation
from .homgraph import build_H, build_HQ, classify_components, real_long_bijection, \
    to_dot, winding_to_dot
from .invariants import (e_comb, enumerate_components, g_comb, is_tau_generic,
                         simplified_check, tags_for)
from .parsing import parse_module, parse_quiver, parse_tag, parse_word, print_quiver
from .quiver import as_fringing, auto_fringe, check_fringing, gabriel_presentation, \
    tilde_vertices, validate
from .repmod import (E_oracle, build_module, g_oracle, hom_dim_formula,
                     hom_dim_oracle, indecomposables_Ax)
from .words import (enumerate_bands, enumerate_strings_at, format_word,
                    string_labels, tau_string)


def _load_quiver(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_quiver(fh.read())


def _slot(text: str):
    v, s = text.rsplit(",", 1)
    return (v, 1 if s.strip() == "+" else -1)


def _require_admissible(q, allow: bool):
    rep = validate(q)
    if not rep.is_skewed_gentle and not allow:
        raise SgaError(
            "quiver is not skewed-gentle/admissible (use --allow-nonadmissible "
            "for word-level commands)")
    return rep


def _fringing(q, spec_text: str):
    if spec_text == "auto":
        return auto_fringe(q)
    return as_fringing(q, _load_quiver(spec_text))


def _adm_word(q, text: str, allow_nonadm=False):
    letters, band = parse_word(q, text)
    return classify(q, letters, band=band)


def cmd_check(args) -> int:
    q = _load_quiver(args.quiver)
    rep = validate(q)
    print(f"polarized:     {rep.is_polarized}")
    print(f"admissible:    {rep.is_admissible}")
    print(f"skewed-gentle: {rep.is_skewed_gentle}")
    print(f"gentle:        {rep.is_gentle}")
    for d in rep.diagnostics:
        print(f"note: {d}")
    gp = None
    if rep.is_skewed_gentle:
        gp = gabriel_presentation(q)
        print(f"split vertices: {len(gp.vertices)}, split arrows: "
              f"{len(gp.arrows)}, relations: {len(gp.relations)}")
    return 0


def cmd_strings(args) -> int:
    q = _load_quiver(args.quiver)
    _require_admissible(q, False)
    slot = _slot(args.at)
    words, truncated = enumerate_strings_at(q, slot, args.max_len)
    for w in words:
        labels = string_labels(q, w)
        suffix = ("   [" + " ".join(labels) + "]") if labels else ""
        print(format_word(w) + suffix)
    if truncated:
        print("# truncated at max-len", file=sys.stderr)
    return 0


def cmd_bands(args) -> int:
    q = _load_quiver(args.quiver)
    for w in enumerate_bands(q, args.max_len):
        print("band: " + format_word(w))
    return 0


def cmd_adm(args) -> int:
    q = _load_quiver(args.quiver)
    _require_admissible(q, args.allow_nonadmissible)
    if args.word:
        x, band = parse_word(q, args.word)
        ok, why = is_admissible(q, x, band=band)
        print(f"admissible: {ok}" + (f"  ({why})" if why else ""))
        if ok and not band:
            print(f"type: {classify(q, x).wtype}")
        return 0
    sets = enumerate_adm(q, args.max_len)
    direct = enumerate_adm_direct(q, args.max_len)
    if set(sets.strings) != set(direct.strings) or \
            set(sets.bands) != set(direct.bands):
        print("DUAL-ROUTE MISMATCH", file=sys.stderr)
        return 4
    for x in sets.strings:
        print(f"{x.wtype}: {x}")
    for x in sets.bands:
        print(f"b: band: {x}")
    return 0


def cmd_tau(args) -> int:
    q = _load_quiver(args.quiver)
    _require_admissible(q, False)
    if args.adm:
        x = _adm_word(q, args.adm)
        t1 = tau_adm(q, x)
        t2 = tau_adm_via_successors(q, x)
        if t1 != t2:
            print("TAU ROUTE MISMATCH", file=sys.stderr)
            return 4
        print(f"{t1.wtype}: {t1}")
        return 0
    letters, band = parse_word(q, args.word)
    if band:
        print("band: " + format_word(tau_string(q, letters)))
    else:
        print(format_word(tau_string(q, letters)))
    return 0


def cmd_hquiver(args) -> int:
    q = _load_quiver(args.quiver)
    _require_admissible(q, args.allow_nonadmissible)
    x = _adm_word(q, args.x)
    if args.y:
        y = _adm_word(q, args.y)
        g = build_HQ(q, x, y)
        if args.dot:
            print(to_dot(g))
        else:
            rep = classify_components(g)
            real_long_bijection(g, rep)
            for c in rep.plus:
                flags = [k for k in ("real", "dual_real", "hline", "dual_hline",
                                     "kiss", "dual_kiss", "generalized_diagonal")
                         if c[k]]
                print(f"{c['ctype']}: {sorted(c['vertices'])} {' '.join(flags)}")
        return 0
    h = build_H(q, x)
    if args.dot:
        print(winding_to_dot(h))
    else:
        print(f"shape {h.shape}; labels "
              + " ".join(f"{v}:{h.vlabel[v]}" for v in h.vertices))
    return 0


def cmd_hom(args) -> int:
    q = _load_quiver(args.quiver)
    _require_admissible(q, False)
    gf.check_prime(args.field)
    x = _adm_word(q, args.x)
    y = _adm_word(q, args.y)
    X = parse_module(args.X, args.field)
    Y = parse_module(args.Y, args.field)
    out = {}
    if args.mode in ("formula", "both"):
        out["formula"] = hom_dim_formula(q, x, X, y, Y)
    if args.mode in ("oracle", "both"):
        out["oracle"] = hom_dim_oracle(build_module(q, x, X), build_module(q, y, Y))
    for k in sorted(out):
        print(f"{k}: {out[k]}")
    if args.mode == "both" and out["formula"] != out["oracle"]:
        print("HOM MISMATCH", file=sys.stderr)
        return 4
    return 0


def cmd_einv(args) -> int:
    q = _load_quiver(args.quiver)
    _require_admissible(q, False)
    gf.check_prime(args.field)
    fr = _fringing(q, args.fringe)
    x = _adm_word(q, args.x)
    y = _adm_word(q, args.y)
    if args.tag_x and args.tag_y:
        s, t = parse_tag(args.tag_x), parse_tag(args.tag_y)
        print(f"e_comb: {e_comb(q, fr, (x, s), (y, t))}")
    if args.X and args.Y:
        X = parse_module(args.X, args.field)
        Y = parse_module(args.Y, args.field)
        print(f"E_oracle: {E_oracle(q, x, X, y, Y)}")
    return 0


def cmd_gvec(args) -> int:
    q = _load_quiver(args.quiver)
    _require_admissible(q, False)
    fr = _fringing(q, args.fringe)
    x = _adm_word(q, args.x)
    order = tilde_vertices(q)
    results = {}
    if args.tag:
        s = parse_tag(args.tag)
        g = g_comb(q, fr, x, s)
        results["comb"] = [g[k] for k in order]
    if args.module:
        gf.check_prime(args.field)
        X = parse_module(args.module, args.field)
        g = g_oracle(q, x, X)
        results["oracle"] = [g[k] for k in order]
    for k in sorted(results):
        print(f"{k}: (" + ",".join(str(v) for v in results[k]) + ")")
    if len(results) == 2 and results["comb"] != results["oracle"]:
        print("GVEC MISMATCH", file=sys.stderr)
        return 4
    return 0


def cmd_fringe(args) -> int:
    q = _load_quiver(args.quiver)
    _require_admissible(q, False)
    if args.check:
        ext = _load_quiver(args.check)
        ok = check_fringing(q, ext)
        print(f"valid fringing: {ok}")
        return 0 if ok else 3
    fr = auto_fringe(q)
    sys.stdout.write(print_quiver(fr.extended))
    return 0


def cmd_components(args) -> int:
    q = _load_quiver(args.quiver)
    _require_admissible(q, False)
    fr = _fringing(q, args.fringe)
    labels, matrix = enumerate_components(q, fr, args.max_len)
    order = tilde_vertices(q)
    header = ["id", "word", "tag", "type", "dim", "g"]
    print("\t".join(header))
    for i, l in enumerate(labels):
        tag = "*" if l.tag == "*" else ("**" if l.tag == ("*", "*") else
                                        "".join("+" if c > 0 else "-" for c in l.tag))
        dim = ",".join(str(l.dim[k]) for k in order)
        g = ",".join(str(l.g[k]) for k in order)
        word = ("band: " if l.word.wtype == "b" else "") + str(l.word)
        print(f"{i}\t{word}\t{tag}\t{l.word.wtype}\t({dim})\t({g})")
    print("# pairwise generic E matrix")
    for row in matrix:
        print("\t".join(str(v) for v in row))
    return 0


def cmd_selftest(args) -> int:
    q = _load_quiver(args.quiver)
    _require_admissible(q, False)
    gf.check_prime(args.field)
    fr = auto_fringe(q)
    sets = enumerate_adm(q, args.max_len)
    direct = enumerate_adm_direct(q, args.max_len)
    assert set(sets.strings) == set(direct.strings), "dual-route strings"
    assert set(sets.bands) == set(direct.bands), "dual-route bands"
    print(f"adm ok: {len(sets.strings)} strings, {len(sets.bands)} bands")
    words = list(sets.strings) + list(sets.bands)
    pairs = 0
    for x in words:
        for y in words:
            g = build_HQ(q, x, y)
            rep = classify_components(g)
            real_long_bijection(g, rep)
            pairs += 1
    print(f"real/long bijection ok on {pairs} pairs")
    checked = 0
    for x in words:
        for X in indecomposables_Ax(x.wtype, 1, args.field):
            for y in words:
                for Y in indecomposables_Ax(y.wtype, 1, args.field):
                    lhs = hom_dim_formula(q, x, X, y, Y)
                    rhs = hom_dim_oracle(build_module(q, x, X),
                                         build_module(q, y, Y))
                    if lhs != rhs:
                        print(f"HOM MISMATCH {x} {X.label} {y} {Y.label}",
                              file=sys.stderr)
                        return 4
                    checked += 1
    print(f"hom theorem ok on {checked} quadruples")
    for x in words:
        for s in tags_for(x):
            if is_tau_generic(q, fr, x, s) != simplified_check(q, fr, x, s):
                print("TAU-GENERIC MISMATCH", file=sys.stderr)
                return 4
    print("tau-generic simplification ok")
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="sga",
                                 description="skewed-gentle string calculus")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("quiver", help="quiver DSL file")
        p.set_defaults(fn=fn)
        return p

    add("check", cmd_check)
    p = add("strings", cmd_strings)
    p.add_argument("--at", required=True, help="slot, e.g. 1,-")
    p.add_argument("--max-len", type=int, default=20)
    p = add("bands", cmd_bands)
    p.add_argument("--max-len", type=int, default=10)
    p = add("adm", cmd_adm)
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--word", help="test a single word instead of enumerating")
    p.add_argument("--allow-nonadmissible", action="store_true")
    p = add("tau", cmd_tau)
    p.add_argument("--word", help="base-quiver string or band")
    p.add_argument("--adm", help="admissible word over the hat quiver")
    p = add("hquiver", cmd_hquiver)
    p.add_argument("--x", required=True)
    p.add_argument("--y")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--allow-nonadmissible", action="store_true")
    p = add("hom", cmd_hom)
    p.add_argument("--x", required=True)
    p.add_argument("--X", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--Y", required=True)
    p.add_argument("--mode", choices=["formula", "oracle", "both"],
                   default="both")
    p.add_argument("--field", type=int, default=5)
    p = add("einv", cmd_einv)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--tag-x")
    p.add_argument("--tag-y")
    p.add_argument("--X")
    p.add_argument("--Y")
    p.add_argument("--fringe", default="auto")
    p.add_argument("--field", type=int, default=5)
    p = add("gvec", cmd_gvec)
    p.add_argument("--x", required=True)
    p.add_argument("--tag")
    p.add_argument("--module")
    p.add_argument("--fringe", default="auto")
    p.add_argument("--field", type=int, default=5)
    p = add("fringe", cmd_fringe)
    p.add_argument("--check", help="validate this extended quiver instead")
    p = add("components", cmd_components)
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--fringe", default="auto")
    p = add("selftest", cmd_selftest)
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--field", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)

    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return 4
    except SgaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
