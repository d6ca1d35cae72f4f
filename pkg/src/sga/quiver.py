"""Polarized quivers: validation, the associated all-ordinary quiver,
the Gabriel presentation, and fringings.

A polarized quiver carries two injective end-maps into vertex x {-1,+1}.
Special arrows are polarized (-1,-1) at both ends and come with a pairing;
in the skewed-gentle case every special arrow is a self-paired loop.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import QuiverError

Slot = tuple[str, int]  # (vertex, sign) with sign in {-1, +1}


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    s_sign: int
    target: str
    t_sign: int
    special: bool = False

    @property
    def s_slot(self) -> Slot:
        return (self.source, self.s_sign)

    @property
    def t_slot(self) -> Slot:
        return (self.target, self.t_sign)


def _neg(slot: Slot) -> Slot:
    return (slot[0], -slot[1])


@dataclass(frozen=True)
class ValidationReport:
    is_polarized: bool
    is_admissible: bool
    is_skewed_gentle: bool
    is_gentle: bool
    diagnostics: tuple[str, ...] = ()


class PolarizedQuiver:
    """Immutable polarized quiver.

    Construction only requires structural sanity (known vertices, signs in
    {-1,+1}); the mathematical invariants are checked by :func:`validate`.
    """

    def __init__(self, vertices, arrows):
        self.vertices: tuple[str, ...] = tuple(sorted(set(vertices)))
        self.arrows: tuple[Arrow, ...] = tuple(arrows)
        vset = set(self.vertices)
        for a in self.arrows:
            if a.source not in vset or a.target not in vset:
                raise QuiverError(f"arrow {a.name} references unknown vertex")
            if a.s_sign not in (-1, 1) or a.t_sign not in (-1, 1):
                raise QuiverError(f"arrow {a.name} has a sign outside {{-1,+1}}")
        names = [a.name for a in self.arrows]
        self._dup_names = sorted({n for n in names if names.count(n) > 1})
        self._cache: dict = {}
        self.by_name: dict[str, Arrow] = {a.name: a for a in self.arrows}
        # slot -> arrow maps; only trustworthy when the quiver is polarized
        self.out_slot: dict[Slot, Arrow] = {}
        self.in_slot: dict[Slot, Arrow] = {}
        self._slot_collisions: list[str] = []
        for a in self.arrows:
            if a.s_slot in self.out_slot:
                self._slot_collisions.append(
                    f"arrows {self.out_slot[a.s_slot].name} and {a.name} both start at {a.s_slot}")
            else:
                self.out_slot[a.s_slot] = a
            if a.t_slot in self.in_slot:
                self._slot_collisions.append(
                    f"arrows {self.in_slot[a.t_slot].name} and {a.name} both end at {a.t_slot}")
            else:
                self.in_slot[a.t_slot] = a

    # -- basic views ------------------------------------------------------

    @property
    def special_arrows(self) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.special)

    @property
    def ordinary_arrows(self) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if not a.special)

    def special_vertices(self) -> tuple[str, ...]:
        return tuple(sorted({a.source for a in self.special_arrows if a.source == a.target}))

    def is_special_vertex(self, v: str) -> bool:
        return any(a.source == v == a.target for a in self.special_arrows)

    def special_loop_at(self, v: str) -> Arrow:
        for a in self.special_arrows:
            if a.source == v == a.target:
                return a
        raise QuiverError(f"no special loop at vertex {v}")

    def special_s_slots(self) -> set[Slot]:
        return {a.s_slot for a in self.special_arrows}

    def trivial_slot_ok(self, slot: Slot) -> bool:
        """Slots carrying a trivial letter: everything except special start slots."""
        return slot[0] in self.by_vertex() and slot not in self.special_s_slots()

    def by_vertex(self) -> set[str]:
        return set(self.vertices)

    def __eq__(self, other):
        return (isinstance(other, PolarizedQuiver)
                and self.vertices == other.vertices
                and sorted(self.arrows, key=lambda a: a.name) == sorted(other.arrows, key=lambda a: a.name))

    def __hash__(self):
        if "hash" not in self._cache:
            self._cache["hash"] = hash(
                (self.vertices, tuple(sorted(self.arrows, key=lambda a: a.name))))
        return self._cache["hash"]

    def __repr__(self):
        return f"PolarizedQuiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"


def special_pairing(q: PolarizedQuiver) -> dict[str, str] | None:
    """The involution eps -> eps' on special arrows, or None if broken."""
    pairing: dict[str, str] = {}
    for e in q.special_arrows:
        partners = [f for f in q.special_arrows
                    if f.s_slot == e.t_slot and f.t_slot == e.s_slot]
        if len(partners) != 1:
            return None
        pairing[e.name] = partners[0].name
    for e, ep in pairing.items():
        if pairing.get(ep) != e:
            return None
    return pairing


def validate(q: PolarizedQuiver) -> ValidationReport:
    """Decide the polarized / admissible / skewed-gentle / gentle flags.

    Admissibility is settled by cycle detection on the composability
    relation: arrow a may follow arrow b in an admissible path exactly when
    s(a) = -t(b) as slots; finitely many admissible paths iff no cycle.
    """
    diagnostics: list[str] = []
    for n in q._dup_names:
        diagnostics.append(f"duplicate arrow name {n}")
    diagnostics.extend(q._slot_collisions)
    polarized = not diagnostics
    for e in q.special_arrows:
        if e.s_sign != -1 or e.t_sign != -1:
            diagnostics.append(f"special arrow {e.name} not polarized (-1,-1)")
            polarized = False
    pairing = special_pairing(q)
    if pairing is None:
        diagnostics.append("broken special pairing")
        polarized = False

    # cycle detection on arrows: edge b -> a when a can follow b
    follows: dict[str, list[str]] = {a.name: [] for a in q.arrows}
    for b in q.arrows:
        for a in q.arrows:
            if a.s_slot == _neg(b.t_slot):
                follows[b.name].append(a.name)
    color: dict[str, int] = {}

    def has_cycle(n: str) -> bool:
        color[n] = 1
        for m in follows[n]:
            c = color.get(m, 0)
            if c == 1 or (c == 0 and has_cycle(m)):
                return True
        color[n] = 2
        return False

    admissible = polarized and not any(
        has_cycle(a.name) for a in q.arrows if color.get(a.name, 0) == 0)

    specials_are_loops = all(a.source == a.target for a in q.special_arrows)
    skewed_gentle = admissible and specials_are_loops
    gentle = admissible and not q.special_arrows
    return ValidationReport(polarized, admissible, skewed_gentle, gentle,
                            tuple(diagnostics))


def require_skewed_gentle(q: PolarizedQuiver) -> None:
    rep = validate(q)
    if not rep.is_skewed_gentle:
        raise QuiverError(f"quiver is not skewed-gentle: {rep.diagnostics or rep}")


def hat_quiver(q: PolarizedQuiver) -> PolarizedQuiver:
    """The associated gentle quiver: special loops re-flagged as ordinary.

    Vertices, arrow names and polarizations are unchanged, so the canonical
    morphism back to ``q`` is the identity on names.
    """
    return PolarizedQuiver(
        q.vertices,
        [Arrow(a.name, a.source, a.s_sign, a.target, a.t_sign, False) for a in q.arrows])


# -- Gabriel presentation ---------------------------------------------------

TildeVertex = tuple[str, str]  # (vertex, 'o' | '-' | '+')


@dataclass(frozen=True)
class TildeArrow:
    base: str    # underlying ordinary arrow
    tau: str     # sign at the target copy
    sigma: str   # sign at the source copy
    source: TildeVertex
    target: TildeVertex

    @property
    def name(self) -> str:
        return f"{self.tau}{self.base}{self.sigma}"


@dataclass(frozen=True)
class GabrielPresentation:
    vertices: tuple[TildeVertex, ...]
    arrows: tuple[TildeArrow, ...]
    # each relation is a sum of 2-paths (first arrow applied second)
    relations: tuple[tuple[tuple[TildeArrow, TildeArrow], ...], ...]


def vertex_signs(q: PolarizedQuiver, v: str) -> tuple[str, ...]:
    return ('-', '+') if q.is_special_vertex(v) else ('o',)


def tilde_vertices(q: PolarizedQuiver) -> tuple[TildeVertex, ...]:
    out: list[TildeVertex] = []
    for v in q.vertices:
        out.extend((v, s) for s in vertex_signs(q, v))
    return tuple(out)


def gabriel_presentation(q: PolarizedQuiver) -> GabrielPresentation:
    """Quiver-with-relations presentation of the algebra of ``q``.

    Each special vertex splits in two; every ordinary arrow gets one copy
    per admissible sign pair, and every signed-composable ordinary pair
    alpha, beta (s(alpha) = t(beta) including signs) contributes relations
    summing over the middle vertex signs.
    """
    require_skewed_gentle(q)
    arrows: list[TildeArrow] = []
    for a in q.ordinary_arrows:
        for tau in vertex_signs(q, a.target):
            for sigma in vertex_signs(q, a.source):
                arrows.append(TildeArrow(a.name, tau, sigma,
                                         (a.source, sigma), (a.target, tau)))
    index = {(t.base, t.tau, t.sigma): t for t in arrows}
    relations: list[tuple[tuple[TildeArrow, TildeArrow], ...]] = []
    for a in q.ordinary_arrows:
        for b in q.ordinary_arrows:
            if a.s_slot != b.t_slot:
                continue
            for tau in vertex_signs(q, a.target):
                for rho in vertex_signs(q, b.source):
                    rel = tuple((index[(a.name, tau, sig)], index[(b.name, sig, rho)])
                                for sig in vertex_signs(q, b.target))
                    relations.append(rel)
    return GabrielPresentation(tilde_vertices(q), tuple(arrows), tuple(relations))


# -- Fringing ---------------------------------------------------------------

@dataclass(frozen=True)
class Fringing:
    base: PolarizedQuiver
    extended: PolarizedQuiver
    fringe_vertices: tuple[str, ...]
    fringe_arrows: tuple[str, ...]


def auto_fringe(q: PolarizedQuiver) -> Fringing:
    """Fill every empty slot of ``q`` with a fresh valency-1 fringe vertex.

    Slots are visited in (vertex, in/out, sign) order and fringe vertices
    are named f1, f2, ...; the attached arrows reuse the vertex name.
    """
    require_skewed_gentle(q)
    vertices = list(q.vertices)
    arrows = list(q.arrows)
    fringe_vertices: list[str] = []
    fringe_arrows: list[str] = []
    counter = 1
    for v in q.vertices:
        for io in ("in", "out"):
            for sign in (-1, 1):
                slot = (v, sign)
                occupied = slot in (q.in_slot if io == "in" else q.out_slot)
                if occupied:
                    continue
                f = f"f{counter}"
                while f in q.by_vertex() or f in q.by_name:
                    counter += 1
                    f = f"f{counter}"
                counter += 1
                vertices.append(f)
                fringe_vertices.append(f)
                fringe_arrows.append(f)
                if io == "in":
                    arrows.append(Arrow(f, f, 1, v, sign, False))
                else:
                    arrows.append(Arrow(f, v, sign, f, 1, False))
    ext = PolarizedQuiver(vertices, arrows)
    fr = Fringing(q, ext, tuple(fringe_vertices), tuple(fringe_arrows))
    if not check_fringing(q, ext):
        raise QuiverError("auto fringing failed its own invariants")
    return fr


def trivial_fringing(q: PolarizedQuiver) -> Fringing:
    """Wrap an already-complete quiver (all slots filled) as its own fringing."""
    if not check_fringing(q, q):
        raise QuiverError("quiver has empty slots; use auto_fringe")
    return Fringing(q, q, (), ())


def check_fringing(base: PolarizedQuiver, extended: PolarizedQuiver) -> bool:
    """Validate a user-supplied fringing against the two defining conditions."""
    if not set(base.vertices) <= set(extended.vertices):
        return False
    base_names = {a.name: a for a in base.arrows}
    for a in base.arrows:
        b = extended.by_name.get(a.name)
        if b is None or (b.source, b.s_sign, b.target, b.t_sign, b.special) != (
                a.source, a.s_sign, a.target, a.t_sign, a.special):
            return False
    rep = validate(extended)
    if not (rep.is_skewed_gentle and rep.is_admissible):
        return False
    interior = set(base.vertices)
    for v in interior:
        ends = sum(1 for a in extended.arrows if a.source == v) + \
            sum(1 for a in extended.arrows if a.target == v)
        if ends != 4:
            return False
    for a in extended.arrows:
        if a.name in base_names:
            continue
        if a.source in interior:
            if a.target in interior or a.t_sign != 1:
                return False
        elif a.target in interior:
            if a.s_sign != 1:
                return False
        else:
            return False
    return True


def as_fringing(base: PolarizedQuiver, extended: PolarizedQuiver) -> Fringing:
    if not check_fringing(base, extended):
        raise QuiverError("extended quiver is not a fringing of the base")
    fv = tuple(sorted(set(extended.vertices) - set(base.vertices)))
    fa = tuple(sorted(a.name for a in extended.arrows if a.name not in base.by_name))
    return Fringing(base, extended, fv, fa)
