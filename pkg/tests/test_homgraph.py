import pytest

from sga.admissible import classify, enumerate_adm, tau_adm
from sga.homgraph import (build_H, build_HQ, classify_components,
                          kiss_transport, real_long_bijection, to_dot, triples)
from sga.quiver import as_fringing, auto_fringe
from sga.words import invl, ordl, tinvl, trivl


@pytest.fixture(scope="module")
def loopq_words(loop_quiver):
    q = loop_quiver
    x = classify(q, (tinvl("1", 1), ordl("e"), ordl("a"), ordl("e"), invl("a"),
                     trivl("1", -1)))
    y = classify(q, (tinvl("1", -1), ordl("a"), ordl("e"), ordl("a"), ordl("e"),
                     invl("a"), trivl("1", -1)))
    return x, y


def test_build_H_translate_chain(ex1_hand_fringing):
    qf = ex1_hand_fringing
    x = classify(qf, (tinvl("1", -1), ordl("g"), ordl("b"), ordl("e"), invl("b"),
                      trivl("3", 1)))
    tx = tau_adm(qf, x)
    h = build_H(qf, tx)
    assert h.shape == "A"
    assert [h.vlabel[i] for i in h.vertices] == ["6", "1", "3", "2", "2", "3", "1", "5"]
    # one proper source (two edges out) labeled 2, one proper sink labeled 1
    sources = [v for v in h.vertices
               if sum(1 for e in h.edges if e.src == v) == 2]
    sinks = [v for v in h.vertices
             if sum(1 for e in h.edges if e.tgt == v) == 2]
    assert [h.vlabel[v] for v in sources] == ["2"]
    assert [h.vlabel[v] for v in sinks] == ["1"]


def test_build_H_translate_with_loop(ex1_hand_fringing):
    qf = ex1_hand_fringing
    y = classify(qf, (tinvl("2", -1), ordl("a"), trivl("1", -1)))
    ty = tau_adm(qf, y)
    h = build_H(qf, ty)
    assert h.shape == "Dp"
    assert [h.vlabel[i] for i in h.vertices] == ["2", "1", "6"]
    assert len(h.loops) == 1 and h.loops[0].image == "e"
    assert h.is_boundary(3) and not h.is_boundary(1)


def test_boundary_conventions(ex1, loop_quiver):
    # ordinary simple: isolated vertex is boundary
    s1 = classify(ex1, (tinvl("1", -1), trivl("1", 1)))
    h = build_H(ex1, s1)
    assert h.is_boundary(1)
    # simple at the special vertex: single vertex with a loop is boundary
    s2 = classify(ex1, (tinvl("2", 1), trivl("2", -1)))
    h2 = build_H(ex1, s2)
    assert h2.shape == "Dp" and h2.is_boundary(1)


# golden color matrix for the loop-quiver pair; rows are H(y) vertices
# shifted down by one (0..5), columns H(x) vertices 1..5.
LOOPQ_COLORS = {
    (0, 1): {"purple", "blue"}, (0, 2): {"teal"}, (0, 3): {"purple", "blue"},
    (0, 4): {"teal", "blue"}, (0, 5): set(),
    (1, 1): {"red"}, (1, 2): {"cyan", "red"}, (1, 3): set(),
    (1, 4): {"cyan"}, (1, 5): {"teal", "red"},
    (2, 1): {"orange", "blue"}, (2, 2): set(), (2, 3): {"orange", "blue"},
    (2, 4): {"blue"}, (2, 5): {"purple"},
    (3, 1): {"red"}, (3, 2): {"cyan", "red"}, (3, 3): set(),
    (3, 4): {"cyan"}, (3, 5): {"teal", "red"},
    (4, 1): {"orange", "red"}, (4, 2): {"red"}, (4, 3): {"orange"},
    (4, 4): set(), (4, 5): {"purple", "red"},
    (5, 1): {"purple", "blue"}, (5, 2): {"teal"}, (5, 3): {"purple", "blue"},
    (5, 4): {"teal", "blue"}, (5, 5): set(),
}


def colors_of(g, v):
    out = set()
    if g.red.get(v):
        out.add("red")
    if g.blue.get(v):
        out.add("blue")
    for name in ("orange", "purple", "cyan", "teal"):
        if v in getattr(g, name):
            out.add(name)
    return out


def test_loopq_color_matrix(loop_quiver, loopq_words):
    x, y = loopq_words
    g = build_HQ(loop_quiver, x, y)
    assert len(g.vertices) == 30
    for (dj, di), expected in LOOPQ_COLORS.items():
        v = (dj + 1, di)
        assert colors_of(g, v) == expected, f"colors at display {(dj, di)}"
    # loops of the product quiver sit at the (0,5) and (5,5) display cells
    loop_vs = {a.src for a in g.arrows if a.is_loop}
    assert loop_vs == {(1, 5), (6, 5)}


def test_loopq_component_claims(loop_quiver, loopq_words):
    x, y = loopq_words
    g = build_HQ(loop_quiver, x, y)
    rep = classify_components(g)
    comp_of = {}
    for idx, c in enumerate(rep.plus):
        for v in c["vertices"]:
            comp_of[v] = idx
    a_cells = [(1, 4), (3, 4), (6, 4)]  # display (0,4),(2,4),(5,4)
    idxs = {comp_of[v] for v in a_cells}
    assert len(idxs) == 3
    for i in idxs:
        assert rep.plus[i]["real"] and rep.plus[i]["ctype"] == "A"
    d_idx = comp_of[(2, 4)]           # display (1,4)
    assert rep.plus[d_idx]["real"] and rep.plus[d_idx]["ctype"] == "Dp"


def test_loopq_val_and_red(loop_quiver, loopq_words):
    x, y = loopq_words
    g = build_HQ(loop_quiver, x, y)
    for v in g.vertices:
        assert g.val(v) <= 2
        if g.red.get(v):
            assert g.val(v) <= 1
        # orange and purple never together; at most one structural color
        assert not (v in g.orange and v in g.purple)
        assert sum(v in s for s in (g.orange, g.purple, g.cyan, g.teal)) <= 1


def test_loopq_loops_on_real_or_dual(loop_quiver, loopq_words):
    x, y = loopq_words
    g = build_HQ(loop_quiver, x, y)
    rep = classify_components(g)
    for idx, c in enumerate(rep.plus):
        if any(a.is_loop for a in c["arrows"]):
            assert c["real"] or c["dual_real"]


def test_real_long_bijection_loopq(loop_quiver, loopq_words):
    x, y = loopq_words
    for (u, v) in [(x, y), (y, x), (x, x), (y, y)]:
        g = build_HQ(loop_quiver, u, v)
        rep = classify_components(g)
        real_long_bijection(g, rep)


def test_dual_symmetry(loop_quiver, loopq_words):
    x, y = loopq_words
    g = build_HQ(loop_quiver, x, y)
    gd = build_HQ(loop_quiver, y, x)
    rep, repd = classify_components(g), classify_components(gd)

    def real_vertices(r):
        return {v for c in r.plus if c["real"] for v in c["vertices"]}

    def dual_real_vertices(r):
        return {v for c in r.plus if c["dual_real"] for v in c["vertices"]}

    assert {(i, j) for (j, i) in dual_real_vertices(rep)} == real_vertices(repd)
    assert {(i, j) for (j, i) in real_vertices(rep)} == dual_real_vertices(repd)


def test_diagonal_not_kiss_for_strings(ex1):
    s1 = classify(ex1, (tinvl("1", -1), trivl("1", 1)))
    g = build_HQ(ex1, s1, s1)
    rep = classify_components(g)
    assert len(rep.plus) == 1
    assert rep.plus[0]["real"] and not rep.plus[0]["kiss"]
    s2 = classify(ex1, (tinvl("2", 1), trivl("2", -1)))
    g2 = build_HQ(ex1, s2, s2)
    rep2 = classify_components(g2)
    reals = [c for c in rep2.plus if c["real"]]
    assert reals and all(not c["kiss"] for c in reals)


def test_band_real_hlines_are_kisses(loop_quiver, loopq_words):
    _, y = loopq_words   # (p,p) word, morally a band object
    g = build_HQ(loop_quiver, y, y)
    rep = classify_components(g)
    for c in rep.plus:
        if c["real"]:
            assert c["kiss"]


def test_triples_simple_example(ex1):
    # triples against the simple at an ordinary vertex: sources of H(x) over it
    x = classify(ex1, (tinvl("1", -1), ordl("g"), ordl("b"), ordl("e"), invl("b"),
                       trivl("3", 1)))
    s3 = classify(ex1, (tinvl("3", 1), trivl("3", -1)))
    ts = triples(ex1, x, s3)
    h = build_H(ex1, x)
    sources = [v for v in h.vertices if h.vlabel[v] == "3"
               and not any(e.tgt == v for e in h.edges)
               and not any(l.vertex == v for l in h.loops)]
    assert len(ts) == len(sources)


def test_triples_special_simple(ex1):
    # at the special vertex: at most two D'-triples, given by the special
    # vertices of H(x) not hit by an ordinary arrow (top condition)
    s2 = classify(ex1, (tinvl("2", 1), trivl("2", -1)))
    for letters in [
        (tinvl("1", -1), invl("a"), trivl("2", -1)),      # loop vertex has an
        (tinvl("1", -1), ordl("g"), ordl("b"), trivl("2", -1)),  # incoming edge / not
        (tinvl("2", 1), trivl("2", -1)),                  # lone loop vertex
    ]:
        x = classify(ex1, letters)
        ts = triples(ex1, x, s2)
        dts = [t for t in ts if t.ctype == "Dp"]
        assert len(dts) <= 2
        h = build_H(ex1, x)
        special_top = [v for v in h.vertices
                       if any(l.vertex == v for l in h.loops)
                       and not any(e.tgt == v for e in h.edges)]
        assert len(dts) == len(special_top), str(x)


def test_triples_count_nonzero(ex1):
    # this word's module has top S(2,+) + S(2,-): one A-triple towards s2
    x = classify(ex1, (tinvl("1", -1), ordl("g"), ordl("b"), ordl("e"), invl("b"),
                       trivl("3", 1)))
    s2 = classify(ex1, (tinvl("2", 1), trivl("2", -1)))
    ts = triples(ex1, x, s2)
    assert len(ts) == 1 and ts[0].ctype == "A"


def test_kiss_transport_ex1(ex1, ex1_hand_fringing):
    fr = as_fringing(ex1, ex1_hand_fringing)
    fra = auto_fringe(ex1)
    sets = enumerate_adm(ex1, 8)
    words = list(sets.strings)[:10]
    from sga.admissible import is_projective_adm
    for x in words:
        for y in words:
            c1 = kiss_transport(ex1, fr, x, y)
            c2 = kiss_transport(ex1, fra, x, y)
            assert c1.by_type == c2.by_type, (str(x), str(y))
            if is_projective_adm(ex1, y):
                assert c1.total() == 0


def test_to_dot_stable(loop_quiver, loopq_words):
    x, y = loopq_words
    g = build_HQ(loop_quiver, x, y)
    d1, d2 = to_dot(g), to_dot(g)
    assert d1 == d2 and d1.startswith("digraph")
