"""Tagged admissible words, the combinatorial E-invariant and g-vector,
and enumeration of the generically tau-reduced component labels.

Tags select one-parameter families of simple modules over the type algebra
of a word; the combinatorial formulas below compute the generic values of
the E-invariant and g-vector without touching any matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .admissible import AdmWord, enumerate_adm
from .errors import SgaError, TheoremViolation
from .homgraph import build_H, kisses_of, tau_f
from .quiver import Fringing, PolarizedQuiver, tilde_vertices
from .words import band_canonical, winv

Tag = object  # '*' | ('*','*') | (s1, s2) with si in {-1, 1}

STAR = "*"
DSTAR = ("*", "*")


def tags_for(x: AdmWord) -> list[Tag]:
    """The legal tag set of a word, by its type."""
    if x.wtype == "uu":
        return [(1, 1)]
    if x.wtype == "up":
        return [(1, -1), (1, 1)]
    if x.wtype == "pu":
        return [(-1, 1), (1, 1)]
    if x.wtype == "pp":
        return [(-1, -1), (-1, 1), (1, -1), (1, 1), DSTAR]
    return [STAR]


def wt(s: Tag) -> int:
    return 2 if s == DSTAR else 1


def tag_iota(s: Tag) -> Tag:
    if isinstance(s, tuple) and s != DSTAR:
        return (s[1], s[0])
    return s


def tag_chi(s: Tag) -> Tag:
    if isinstance(s, tuple) and s != DSTAR:
        return (-s[0], -s[1])
    return s


def tag_comp(s: Tag, k: int):
    """Component of the tag at loop k (0-based); '*' for the star tags."""
    if s == STAR or s == DSTAR:
        return STAR
    return s[k]


def d2(a, b) -> int:
    """Matching eigenvalue count between sign-or-star letters."""
    if a == STAR and b == STAR:
        return 2
    if a == STAR or b == STAR:
        return 1
    return 1 if a == b else 0


def d3(s: Tag, t: Tag) -> int:
    return 1 if (isinstance(s, tuple) and s != DSTAR and s == t) else 0


def check_tag(x: AdmWord, s: Tag) -> None:
    if s not in tags_for(x):
        raise SgaError(f"tag {s} illegal for a word of type {x.wtype}")


# -- kiss census -----------------------------------------------------------------

def band_class_eq(a: AdmWord, b: AdmWord) -> bool:
    if a.wtype == "pp" and b.wtype == "pp":
        return a.letters == b.letters
    if a.wtype == "b" and b.wtype == "b":
        from .words import rotations
        return b.letters in set(rotations(a.letters))
    return False


def diag_b(x: AdmWord, y: AdmWord) -> int:
    if x.wtype not in ("pp", "b") or y.wtype not in ("pp", "b"):
        return 0
    if band_class_eq(x, y):
        return 1
    if band_class_eq(x, y.inverse()):
        return -1
    return 0


@dataclass
class KissCensus:
    a_count: int                       # type-A kisses, both directions
    p_set: tuple[tuple[int, int], ...]  # pairs of punctured letters of type D'
    diag: int                          # band orientation in {-1, 0, 1}
    d_count: int                       # type-D' kisses, both directions
    at_count: int                      # cyclic types, both directions
    dpt_count: int
    total: int


def p_set(q: PolarizedQuiver, x: AdmWord, y: AdmWord) -> tuple[tuple[int, int], ...]:
    """Loop pairs (j, i) over the same special vertex, minus the diagonal
    exclusions for a word paired with itself or its inverse."""
    hx, hy = build_H(q, x), build_H(q, y)
    pairs = [(ly.key, lx.key) for ly in hy.loops for lx in hx.loops
             if ly.image == lx.image]
    if x.wtype in ("uu", "up", "pu", "pp") and y.wtype == x.wtype \
            and y.letters == x.letters:
        excl = {(0, 0), (1, 1)}
    elif y.wtype in ("uu", "up", "pu", "pp") and y.letters == winv(x.letters):
        excl = {(1, 0), (0, 1)}
    else:
        excl = set()
    return tuple(sorted(p for p in pairs if p not in excl))


def kiss_census(q: PolarizedQuiver, fr: Fringing, x: AdmWord, y: AdmWord) -> KissCensus:
    qf = fr.extended
    tx, ty = tau_f(fr, x), tau_f(fr, y)
    counts = {"A": 0, "Dp": 0, "At": 0, "Dpt": 0}
    for (u, v) in ((tx, ty), (ty, tx)):
        ks, _, _ = kisses_of(qf, u, v)
        for c in ks:
            counts[c["ctype"]] += 1
    ps = p_set(q, x, y)
    diag = diag_b(x, y)
    census = KissCensus(counts["A"], ps, diag, counts["Dp"], counts["At"],
                        counts["Dpt"], sum(counts.values()))
    if census.at_count * census.dpt_count != 0:
        raise TheoremViolation("both cyclic kiss types nonzero")
    if census.at_count + census.dpt_count != 2 * abs(diag):
        raise TheoremViolation("cyclic kisses inconsistent with band orientation")
    if census.d_count != len(ps):
        raise TheoremViolation("D' kisses do not match the punctured pairs")
    if census.a_count + len(ps) + 2 * abs(diag) != census.total:
        raise TheoremViolation("kiss census does not add up")
    return census


# -- combinatorial E and g ----------------------------------------------------------

def e_comb(q: PolarizedQuiver, fr: Fringing, xs: tuple[AdmWord, Tag],
           ys: tuple[AdmWord, Tag], census: KissCensus | None = None) -> int:
    x, s = xs
    y, t = ys
    check_tag(x, s)
    check_tag(y, t)
    census = census or kiss_census(q, fr, x, y)
    tot = census.a_count * wt(s) * wt(t)
    tchi = tag_chi(t)
    for (j, i) in census.p_set:
        tot += d2(tag_comp(s, i), tag_comp(tchi, j))
    sp = s
    if census.diag == -1:
        sp = tag_iota(s)
    tot += 2 * abs(census.diag) * d3(sp, tchi)
    return tot


def proper_sets(q: PolarizedQuiver, fr: Fringing, x: AdmWord):
    """(A+, A-, D+, D-) per base vertex on the fringed translate blueprint."""
    h = build_H(fr.extended, tau_f(fr, x))
    a_plus: dict[str, int] = {}
    a_minus: dict[str, int] = {}
    d_plus: dict[str, list[int]] = {}
    d_minus: dict[str, list[int]] = {}
    for v in h.vertices:
        lab = h.vlabel[v]
        outs = sum(1 for e in h.edges if e.src == v)
        ins = sum(1 for e in h.edges if e.tgt == v)
        if outs == 2:
            a_plus[lab] = a_plus.get(lab, 0) + 1
        if ins == 2:
            a_minus[lab] = a_minus.get(lab, 0) + 1
    for l in h.loops:
        lab = q.by_name[l.image].source if l.image in q.by_name else \
            fr.extended.by_name[l.image].source
        ins = sum(1 for e in h.edges if e.tgt == l.vertex)
        outs = sum(1 for e in h.edges if e.src == l.vertex)
        if ins == 0:
            d_plus.setdefault(lab, []).append(l.key)
        if outs == 0:
            d_minus.setdefault(lab, []).append(l.key)
    return a_plus, a_minus, d_plus, d_minus


def g_comb(q: PolarizedQuiver, fr: Fringing, x: AdmWord, s: Tag) -> dict:
    """Combinatorial g-vector over the split vertices; sources count
    positively, matching the worked examples."""
    check_tag(x, s)
    a_plus, a_minus, d_plus, d_minus = proper_sets(q, fr, x)
    out = {}
    for (v, rho) in tilde_vertices(q):
        val = (a_plus.get(v, 0) - a_minus.get(v, 0)) * wt(s)
        r = 1 if rho == "+" else -1
        for k in d_plus.get(v, ()):
            val += d2(tag_comp(s, k), r)
        for k in d_minus.get(v, ()):
            val -= d2(r, -tag_comp(s, k) if tag_comp(s, k) != STAR else STAR)
        out[(v, rho)] = val
    return out


def is_tau_generic(q: PolarizedQuiver, fr: Fringing, x: AdmWord, s: Tag) -> bool:
    return e_comb(q, fr, (x, s), (x, s)) == 0


def simplified_check(q: PolarizedQuiver, fr: Fringing, x: AdmWord, s: Tag) -> bool:
    """No self type-A kisses, and the tag avoids the excluded pairs when both
    punctured ends sit at the same vertex."""
    check_tag(x, s)
    census = kiss_census(q, fr, x, x)
    if census.a_count != 0:
        return False
    if x.wtype == "pp" and x.letters[0].vertex == x.letters[-1].vertex:
        return s in ((-1, -1), (1, 1))
    return True


# -- dimension vectors and component enumeration --------------------------------------

def dim_vector_comb(q: PolarizedQuiver, x: AdmWord, s: Tag) -> dict:
    """Dimension vector of the modules in the tag family, combinatorially:
    loops split by the tag sign, special edge pairs split evenly."""
    check_tag(x, s)
    h = build_H(q, x)
    out = {tv: 0 for tv in tilde_vertices(q)}
    w = wt(s)
    loop_vertices = {l.vertex: l.key for l in h.loops}
    paired: set[int] = set()
    for e in h.edges:
        if q.by_name[e.image].special:
            paired.add(e.src)
            paired.add(e.tgt)
    for v in h.vertices:
        lab = h.vlabel[v]
        if not q.is_special_vertex(lab):
            out[(lab, "o")] += w
        elif v in loop_vertices:
            c = tag_comp(s, loop_vertices[v])
            if c == STAR:
                out[(lab, "-")] += 1
                out[(lab, "+")] += 1
            else:
                out[(lab, "+" if c > 0 else "-")] += w
        else:
            # vertex on a doubled special edge: eigenvalues split evenly
            assert v in paired
            pass
    for e in h.edges:
        if q.by_name[e.image].special:
            lab = h.vlabel[e.src]
            out[(lab, "-")] += w
            out[(lab, "+")] += w
    return out


def c_set(x: AdmWord, s: Tag, p: int) -> list:
    """The family of simple type-algebra modules selected by a tag; a single
    module for sign tags, a parameter curve for the star tags."""
    from . import gf, repmod
    check_tag(x, s)
    if x.wtype == "uu":
        return [repmod.module_k(p)]
    if x.wtype == "up":
        return [repmod.module_V(s[1], p)]
    if x.wtype == "pu":
        return [repmod.module_V(s[0], p)]
    if x.wtype == "pp":
        if s == DSTAR:
            return [repmod.module_Vt(1, t, p) for t in range(2, p - 1)]
        return [repmod.AxModule(f"W1({s[0]},{s[1]})", 1, p,
                                T=gf.mat([[s[1]]], p), S=gf.mat([[s[0]]], p))]
    return [repmod.module_Vband(1, t, p) for t in range(1, p)]


@dataclass
class ComponentLabel:
    word: AdmWord
    tag: Tag
    dim: dict
    g: dict


def canonical_tagged(x: AdmWord, s: Tag) -> tuple[AdmWord, Tag]:
    """Representative of the inversion/rotation class of a tagged word."""
    if x.wtype == "b":
        return AdmWord(band_canonical(x.letters), "b"), STAR
    xi, si = x.inverse(), tag_iota(s)
    if (xi.letters, repr(si)) < (x.letters, repr(s)):
        return xi, si
    return x, s


def enumerate_components(q: PolarizedQuiver, fr: Fringing, max_len: int,
                         strict: bool = False):
    """Deduplicated tau-generic tagged words with dimension vectors,
    g-vectors, and the pairwise generic-E matrix.

    With strict set, a truncated enumeration (max_len cut an infinite
    family) raises instead of silently returning the partial list.
    """
    from .errors import BudgetExceeded
    sets = enumerate_adm(q, max_len)
    if strict and sets.truncated:
        raise BudgetExceeded(f"word enumeration truncated at {max_len}")
    words = list(sets.strings) + list(sets.bands)
    seen: set = set()
    labels: list[ComponentLabel] = []
    for x in words:
        for s in tags_for(x):
            cx, cs = canonical_tagged(x, s)
            key = (cx.letters, cx.wtype, repr(cs))
            if key in seen:
                continue
            seen.add(key)
            if not is_tau_generic(q, fr, cx, cs):
                continue
            labels.append(ComponentLabel(cx, cs, dim_vector_comb(q, cx, cs),
                                         g_comb(q, fr, cx, cs)))
    labels.sort(key=lambda l: (l.word.letters, repr(l.tag)))
    n = len(labels)
    matrix = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            e = e_comb(q, fr, (labels[i].word, labels[i].tag),
                       (labels[j].word, labels[j].tag))
            matrix[i][j] = matrix[j][i] = e
    return labels, matrix
