"""Windings of admissible words and the decorated product quiver.

Every admissible word has a blueprint quiver whose underlying graph is a
chain, a chain with loops, or a cycle.  Pairs of words produce a product
quiver with three arrow families and six color labels; its connected
components classify homomorphism contributions, kisses among them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .admissible import (AdmWord, doublebar_ray, hat_of, hat_ray,
                         is_projective_adm, tau_adm)
from .errors import TheoremViolation, WordError
from .quiver import Fringing, PolarizedQuiver
from .words import INV, ORD, Ray, compare_letters, ray_compare


@dataclass(frozen=True)
class HEdge:
    idx: int
    src: int
    tgt: int
    image: str  # arrow name in the base quiver


@dataclass(frozen=True)
class HLoop:
    key: int    # 0 at the left punctured end, 1 at the right one
    vertex: int
    image: str  # special loop name


@dataclass
class Winding:
    word: AdmWord
    shape: str                       # 'A' | 'Dp' | 'At' | 'Dpt'
    vertices: tuple[int, ...]
    vlabel: dict[int, str]
    edges: tuple[HEdge, ...]
    loops: tuple[HLoop, ...]

    def loop_at(self, key: int) -> HLoop:
        for l in self.loops:
            if l.key == key:
                return l
        raise KeyError(key)

    def edges_at(self, v: int) -> list[HEdge]:
        return [e for e in self.edges if v in (e.src, e.tgt)]

    def valency(self, v: int) -> int:
        """Loops count one end; boundary vertices are those of valency <= 1."""
        return len(self.edges_at(v)) + sum(1 for l in self.loops if l.vertex == v)

    def is_boundary(self, v: int) -> bool:
        return self.valency(v) <= 1


def build_Ho(q: PolarizedQuiver, x: AdmWord) -> tuple[Winding, tuple[HEdge, ...]]:
    """The doubled blueprint: for each non-loop edge over a special loop,
    the reversed partner arrow (both carry the identity unit)."""
    h = build_H(q, x)
    partners = tuple(HEdge(e.idx, e.tgt, e.src, e.image) for e in h.edges
                     if q.by_name[e.image].special)
    return h, partners


def build_H(q: PolarizedQuiver, x: AdmWord) -> Winding:
    """The blueprint quiver of an admissible word.

    String letters give chain edges oriented towards smaller index when
    direct; punctured ends carry special loops; bands close up cyclically.
    """
    w = x.letters
    if x.wtype == "b":
        n = len(w)
        vertices = tuple(range(n))
        vlabel = {i: q.by_name[w[i].name].target if w[i].kind == ORD
                  else q.by_name[w[i].name].source for i in range(n)}
        edges = []
        for i in range(n):
            jnext = (i + 1) % n
            if w[i].kind == ORD:
                edges.append(HEdge(i, jnext, i, w[i].name))
            else:
                edges.append(HEdge(i, i, jnext, w[i].name))
        return Winding(x, "At", vertices, vlabel, tuple(edges), ())
    n = len(w) - 1
    vertices = tuple(range(1, n + 1))
    vlabel = {}
    for i in range(1, n + 1):
        l = w[i]
        if l.kind == ORD:
            vlabel[i] = q.by_name[l.name].target
        elif l.kind == INV:
            vlabel[i] = q.by_name[l.name].source
        else:  # trivial end letter
            vlabel[i] = l.vertex
    edges = []
    for i in range(1, n):
        if w[i].kind == ORD:
            edges.append(HEdge(i, i + 1, i, w[i].name))
        else:
            edges.append(HEdge(i, i, i + 1, w[i].name))
    loops = []
    if x.wtype in ("pu", "pp"):
        loops.append(HLoop(0, 1, q.special_loop_at(w[0].vertex).name))
    if x.wtype in ("up", "pp"):
        loops.append(HLoop(1, n, q.special_loop_at(w[-1].vertex).name))
    shape = {0: "A", 1: "Dp", 2: "Dpt"}[len(loops)]
    return Winding(x, shape, vertices, vlabel, tuple(edges), tuple(loops))


# -- the decorated product quiver ---------------------------------------------

PLUS, CROSS, CIRC = "+", "x", "o"


@dataclass(frozen=True)
class HArrow:
    family: str                     # '+', 'x', 'o'
    src: tuple[int, int]
    tgt: tuple[int, int]
    ypart: tuple[str, int | None]   # ('edge', idx) | ('loop', key)
    xpart: tuple[str, int | None]

    @property
    def is_loop(self) -> bool:
        return self.src == self.tgt


@dataclass
class HomGraph:
    q: PolarizedQuiver
    x: AdmWord
    y: AdmWord
    hx: Winding
    hy: Winding
    vertices: tuple[tuple[int, int], ...]
    arrows: tuple[HArrow, ...]
    red: dict[tuple[int, int], int]
    blue: dict[tuple[int, int], int]
    orange: set[tuple[int, int]]
    purple: set[tuple[int, int]]
    cyan: set[tuple[int, int]]
    teal: set[tuple[int, int]]

    def val(self, v: tuple[int, int]) -> int:
        return sum(1 for a in self.arrows if v in (a.src, a.tgt) and not a.is_loop) \
            + sum(1 for a in self.arrows if a.is_loop and a.src == v)

    def is_boundary(self, v: tuple[int, int]) -> bool:
        j, i = v
        return self.hy.is_boundary(j) or self.hx.is_boundary(i)


def _first_letter(r: Ray):
    return r.first()


def build_HQ(q: PolarizedQuiver, x: AdmWord, y: AdmWord) -> HomGraph:
    """Vertices are label-matching pairs; arrows pair up equal-image edges
    and loops; colors record one-letter ray comparisons and the special
    double-connections."""
    hx, hy = build_H(q, x), build_H(q, y)
    vertices = tuple((j, i) for j in hy.vertices for i in hx.vertices
                     if hy.vlabel[j] == hx.vlabel[i])
    vset = set(vertices)
    arrows: list[HArrow] = []
    for ny in hy.edges:
        for nx in hx.edges:
            if ny.image != nx.image:
                continue
            s, t = (ny.src, nx.src), (ny.tgt, nx.tgt)
            if s in vset:
                arrows.append(HArrow(PLUS, s, t, ("edge", ny.idx), ("edge", nx.idx)))
            if q.by_name[ny.image].special:
                s2, t2 = (ny.tgt, nx.src), (ny.src, nx.tgt)
                if s2 in vset:
                    arrows.append(HArrow(CROSS, s2, t2,
                                         ("edge", ny.idx), ("edge", nx.idx)))
    for ly in hy.loops:
        for lx in hx.loops:
            if ly.image == lx.image:
                v = (ly.vertex, lx.vertex)
                if v in vset:
                    arrows.append(HArrow(PLUS, v, v, ("loop", ly.key), ("loop", lx.key)))
    for ny in hy.edges:
        for lx in hx.loops:
            if ny.image != lx.image:
                continue
            s, t = (ny.tgt, lx.vertex), (ny.src, lx.vertex)
            if s in vset:
                arrows.append(HArrow(CIRC, s, t, ("edge", ny.idx), ("loop", lx.key)))
    for ly in hy.loops:
        for nx in hx.edges:
            if ly.image != nx.image:
                continue
            s, t = (ly.vertex, nx.src), (ly.vertex, nx.tgt)
            if s in vset:
                arrows.append(HArrow(CIRC, s, t, ("loop", ly.key), ("edge", nx.idx)))

    red: dict[tuple[int, int], int] = {}
    blue: dict[tuple[int, int], int] = {}
    for (j, i) in vertices:
        r = b = 0
        for rho in (-1, 1):
            fy = _first_letter(doublebar_ray(q, y, j, rho))
            fx = _first_letter(doublebar_ray(q, x, i, rho))
            if fy == fx:
                continue
            c = compare_letters(q, fy, fx)
            if c is None:
                raise WordError(f"incomparable ray heads at {(j, i)}")
            if c > 0:
                r += 1
            elif c < 0:
                b += 1
        if r:
            red[(j, i)] = r
        if b:
            blue[(j, i)] = b
    orange = {a.tgt for a in arrows if a.family == CROSS}
    cyan = {a.src for a in arrows if a.family == CROSS}
    purple = {a.tgt for a in arrows if a.family == CIRC}
    teal = {a.src for a in arrows if a.family == CIRC}
    return HomGraph(q, x, y, hx, hy, vertices, tuple(arrows),
                    red, blue, orange, purple, cyan, teal)


# -- components and classification ---------------------------------------------

@dataclass
class Component:
    vertices: tuple[tuple[int, int], ...]
    arrows: tuple[HArrow, ...]
    ctype: str                       # 'A' | 'Dp' | 'At' | 'Dpt'
    endpoints: tuple[tuple[int, int], ...]


def _components(vertices, arrows):
    adj: dict = {v: [] for v in vertices}
    for a in arrows:
        adj[a.src].append(a)
        if a.tgt != a.src:
            adj[a.tgt].append(a)
    seen: set = set()
    comps = []
    for v in sorted(vertices):
        if v in seen:
            continue
        stack, cv, ca = [v], [], set()
        seen.add(v)
        while stack:
            u = stack.pop()
            cv.append(u)
            for a in adj[u]:
                ca.add(a)
                w = a.tgt if a.src == u else a.src
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append((tuple(sorted(cv)), tuple(sorted(ca, key=repr))))
    return comps


def _component_type(cv, ca) -> tuple[str, tuple]:
    loops = [a for a in ca if a.is_loop]
    nonloop = [a for a in ca if not a.is_loop]
    cyc = len(nonloop) - (len(cv) - 1)
    if loops:
        ctype = "Dp" if len(loops) == 1 else "Dpt"
    elif cyc > 0:
        ctype = "At"
    else:
        ctype = "A"
    ends = []
    for v in cv:
        valency = sum(1 for a in nonloop if v in (a.src, a.tgt)) + \
            sum(1 for a in loops if a.src == v)
        if valency <= 1:
            ends.append(v)
    return ctype, tuple(ends)


@dataclass
class ComponentReport:
    plus: list[dict]
    full: list[dict]
    real_to_long: dict[int, int]


def _colored(g: HomGraph, cv, colors) -> bool:
    return any(v in colors for v in cv)


def classify_components(g: HomGraph, cross_check: bool = True) -> ComponentReport:
    """Flags per component, with the ray characterizations re-derived at a
    sample vertex when cross_check is set."""
    plus_arrows = [a for a in g.arrows if a.family == PLUS]
    po_arrows = [a for a in g.arrows if a.family in (PLUS, CIRC)]
    comps_plus = _components(g.vertices, plus_arrows)
    comps_po = _components(g.vertices, po_arrows)
    comps_full = _components(g.vertices, g.arrows)
    po_of = {}
    full_of = {}
    for ci, (cv, _) in enumerate(comps_po):
        for v in cv:
            po_of[v] = ci
    for ci, (cv, _) in enumerate(comps_full):
        for v in cv:
            full_of[v] = ci

    q, x, y = g.q, g.x, g.y
    h = hat_of(q)

    def ray_real(v) -> bool:
        j, i = v
        for delta in (-1, 1):
            for rho in (-1, 1):
                ry = hat_ray(q, y, j, rho, delta)
                rx = hat_ray(q, x, i, rho, delta)
                if ray_compare(h, ry, rx)[0] not in ("<", "="):
                    return False
        return True

    def ray_hline(v) -> bool:
        j, i = v
        for rho in (-1, 1):
            ry = hat_ray(q, y, j, rho, +1)
            rx = hat_ray(q, x, i, rho, -1)
            if ray_compare(h, ry, rx)[0] not in ("<", "="):
                return False
        return True

    def ray_long(v) -> bool:
        j, i = v
        for rho in (-1, 1):
            ry = doublebar_ray(q, y, j, rho)
            rx = doublebar_ray(q, x, i, rho)
            if ray_compare(q, ry, rx)[0] not in ("<", "="):
                return False
        return True

    def gen_diag(v) -> bool:
        j, i = v
        return all(ray_compare(q, doublebar_ray(q, y, j, rho),
                               doublebar_ray(q, x, i, rho))[0] == "="
                   for rho in (-1, 1))

    plus_out = []
    for cv, ca in comps_plus:
        ctype, ends = _component_type(cv, ca)
        nored = not _colored(g, cv, g.red)
        noblue = not _colored(g, cv, g.blue)
        po_cv = comps_po[po_of[cv[0]]][0]
        is_real = nored and not _colored(g, cv, g.orange) and not _colored(g, cv, g.purple)
        is_dual_real = noblue and not _colored(g, cv, g.cyan) and not _colored(g, cv, g.teal)
        is_h = not _colored(g, po_cv, g.red) and not _colored(g, po_cv, g.orange)
        is_dual_h = not _colored(g, po_cv, g.blue) and not _colored(g, po_cv, g.cyan)
        kiss = is_real and not any(g.is_boundary(v) for v in ends)
        dual_kiss = is_dual_real and not any(g.is_boundary(v) for v in ends)
        diag = any(gen_diag(v) for v in cv)
        if cross_check:
            v0 = cv[0]
            if ray_real(v0) != is_real:
                raise TheoremViolation(f"real h-line characterization differs at {v0}")
        plus_out.append(dict(vertices=cv, arrows=ca, ctype=ctype, endpoints=ends,
                             real=is_real, dual_real=is_dual_real,
                             hline=is_h, dual_hline=is_dual_h,
                             kiss=kiss, dual_kiss=dual_kiss,
                             generalized_diagonal=diag,
                             full_component=full_of[cv[0]]))
    full_out = []
    for cv, ca in comps_full:
        ctype, ends = _component_type(cv, ca)
        is_long = not _colored(g, cv, g.red)
        is_dual_long = not _colored(g, cv, g.blue)
        if cross_check:
            v0 = cv[0]
            if ray_long(v0) != is_long:
                raise TheoremViolation(f"long h-line characterization differs at {v0}")
        full_out.append(dict(vertices=cv, arrows=ca, ctype=ctype, endpoints=ends,
                             long=is_long, dual_long=is_dual_long))

    real_to_long: dict[int, int] = {}
    for pi, comp in enumerate(plus_out):
        if comp["real"]:
            real_to_long[pi] = comp["full_component"]
    return ComponentReport(plus_out, full_out, real_to_long)


def real_long_bijection(g: HomGraph, report: ComponentReport | None = None):
    """Pair each real h-line with its enclosing long h-line; the pairing must
    be a type-preserving bijection, else the structure theorem failed."""
    report = report or classify_components(g)
    longs = [fi for fi, c in enumerate(report.full) if c["long"]]
    pairs = {}
    for pi, fi in report.real_to_long.items():
        if fi in pairs.values():
            raise TheoremViolation("two real h-lines inside one long h-line")
        if not report.full[fi]["long"]:
            raise TheoremViolation("real h-line inside a non-long component")
        if report.plus[pi]["ctype"] != report.full[fi]["ctype"]:
            raise TheoremViolation("real/long h-line types differ")
        pairs[pi] = fi
    if sorted(pairs.values()) != sorted(longs):
        raise TheoremViolation("long h-line without a real h-line")
    return pairs


# -- triples --------------------------------------------------------------------

@dataclass
class Triple:
    component: dict
    ctype: str
    is_kiss: bool
    # projections: vertex (j,i) -> j resp. i

    def pi_s(self, v):
        return v[0]

    def pi_q(self, v):
        return v[1]


def _check_property_q(g: HomGraph, comp: dict) -> bool:
    """Every ordinary arrow of H(x) ending at the image of a component
    endpoint must be hit by a component arrow ending there (top condition)."""
    for v in comp["endpoints"]:
        _, i = v
        covered = {a.xpart for a in comp["arrows"] if a.tgt == v}
        for e in g.hx.edges:
            if e.tgt == i and ("edge", e.idx) not in covered:
                return False
    return True


def _check_property_s(g: HomGraph, comp: dict) -> bool:
    """Dually on the second word: arrows starting at the image must lift
    (socle condition)."""
    for v in comp["endpoints"]:
        j, _ = v
        covered = {a.ypart for a in comp["arrows"] if a.src == v}
        for e in g.hy.edges:
            if e.src == j and ("edge", e.idx) not in covered:
                return False
    return True


def triples(q: PolarizedQuiver, x: AdmWord, y: AdmWord,
            report: ComponentReport | None = None,
            g: HomGraph | None = None) -> list[Triple]:
    """H-triples realized as real h-lines with their two projections.

    Properties (q) and (s) are checked explicitly on every endpoint; their
    failure would contradict the triple/real-h-line correspondence.
    """
    g = g or build_HQ(q, x, y)
    report = report or classify_components(g)
    out = []
    for comp in report.plus:
        if not comp["real"]:
            continue
        if not _check_property_q(g, comp):
            raise TheoremViolation("real h-line fails property (q)")
        if not _check_property_s(g, comp):
            raise TheoremViolation("real h-line fails property (s)")
        out.append(Triple(comp, comp["ctype"], comp["kiss"]))
    return out


# -- kisses and fringing -----------------------------------------------------------

def tau_f(fr: Fringing, x: AdmWord) -> AdmWord:
    """AR translate inside the fringed quiver (never projective there)."""
    return tau_adm(fr.extended, x)


@dataclass
class KissCounts:
    by_type: dict[str, int]

    def total(self) -> int:
        return sum(self.by_type.values())


def kisses_of(q: PolarizedQuiver, x: AdmWord, y: AdmWord) -> tuple[list[dict], HomGraph, ComponentReport]:
    g = build_HQ(q, x, y)
    rep = classify_components(g)
    return [c for c in rep.plus if c["kiss"]], g, rep


def kiss_transport(q: PolarizedQuiver, fr: Fringing, x: AdmWord, y: AdmWord,
                   verify_bijection: bool = True) -> KissCounts:
    """Count kisses between the fringed translates, by type.

    When y is not projective the counts must agree with the real h-lines
    towards the plain translate of y; a mismatch is a theorem violation.
    """
    tx, ty = tau_f(fr, x), tau_f(fr, y)
    kx, _, _ = kisses_of(fr.extended, tx, ty)
    counts: dict[str, int] = {}
    for c in kx:
        counts[c["ctype"]] = counts.get(c["ctype"], 0) + 1
    if is_projective_adm(q, y):
        if kx:
            raise TheoremViolation("kisses against a projective translate")
        return KissCounts(counts)
    if verify_bijection:
        ta = tau_adm(q, y)
        g2 = build_HQ(q, x, ta)
        rep2 = classify_components(g2)
        by_type2: dict[str, int] = {}
        for c in rep2.plus:
            if c["real"]:
                by_type2[c["ctype"]] = by_type2.get(c["ctype"], 0) + 1
        if by_type2 != counts:
            raise TheoremViolation(
                f"kiss transport mismatch: {counts} vs h-triples {by_type2}")
    return KissCounts(counts)


# -- DOT export -----------------------------------------------------------------

_STYLE = {PLUS: "solid", CROSS: "dashed", CIRC: "dotted"}


def to_dot(g: HomGraph) -> str:
    lines = ["digraph HQ {"]
    for v in sorted(g.vertices):
        colors = []
        colors.extend(["red"] * g.red.get(v, 0))
        colors.extend(["blue"] * g.blue.get(v, 0))
        for name, s in (("orange", g.orange), ("purple", g.purple),
                        ("cyan", g.cyan), ("teal", g.teal)):
            if v in s:
                colors.append(name)
        label = f"({v[0]},{v[1]})"
        attr = f' [label="{label}"'
        if colors:
            attr += f' color="{colors[0]}" xlabel="{("," .join(colors))}"'
        attr += "]"
        lines.append(f'  "{label}"{attr};')
    for a in sorted(g.arrows, key=repr):
        s = f"({a.src[0]},{a.src[1]})"
        t = f"({a.tgt[0]},{a.tgt[1]})"
        lines.append(f'  "{s}" -> "{t}" [style={_STYLE[a.family]}];')
    lines.append("}")
    return "\n".join(lines)


def winding_to_dot(h: Winding) -> str:
    lines = ["digraph H {"]
    for v in h.vertices:
        lines.append(f'  "{v}" [label="{v}:{h.vlabel[v]}"];')
    for e in h.edges:
        lines.append(f'  "{e.src}" -> "{e.tgt}" [label="{e.image}"];')
    for l in h.loops:
        lines.append(f'  "{l.vertex}" -> "{l.vertex}" [label="{l.image}" style=dotted];')
    lines.append("}")
    return "\n".join(lines)
