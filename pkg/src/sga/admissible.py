"""Admissible words over the all-ordinary companion quiver.

The orientation of letters over special loops is fixed by lexicographic
comparisons; admissible words are exactly the images (and inverses of
images) of strings and standard-form bands under that construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import AtMaximum, IsProjective, WordError
from .quiver import PolarizedQuiver, hat_quiver
from .words import (INV, ORD, SPE, TINV, TRIV, Letter, Ray, Word, band_canonical,
                    enumerate_bands, enumerate_strings, format_word, invl,
                    inverse_letter, is_band, is_primitive_band, is_string,
                    is_symmetric_band, left_successor, letter_target, lex_compare,
                    ordl, projective_strings, rotations, spel, standard_band_words,
                    standard_form_rotations, successor, tau_string, tinvl, trivl,
                    winv)

TYPES = ("uu", "up", "pu", "pp", "b")


def hat_of(q: PolarizedQuiver) -> PolarizedQuiver:
    if "hat" not in q._cache:
        q._cache["hat"] = hat_quiver(q)
    return q._cache["hat"]


def is_punctured(q: PolarizedQuiver, l: Letter) -> bool:
    return (l.kind in (TRIV, TINV) and l.sign == -1
            and q.is_special_vertex(l.vertex))


def f_letter(q: PolarizedQuiver, l: Letter) -> Letter:
    """The canonical morphism on letters, from hat-quiver words to base words."""
    if l.kind in (ORD, INV) and q.by_name[l.name].special:
        return spel(l.name)
    if is_punctured(q, l):
        return spel(q.special_loop_at(l.vertex).name)
    return l


def f_word(q: PolarizedQuiver, w: Word) -> Word:
    return tuple(f_letter(q, l) for l in w)


@dataclass(frozen=True)
class AdmWord:
    letters: Word
    wtype: str  # 'uu' | 'up' | 'pu' | 'pp' | 'b'

    def __str__(self) -> str:
        return format_word(self.letters)

    def inverse(self) -> "AdmWord":
        t = {"uu": "uu", "up": "pu", "pu": "up", "pp": "pp", "b": "b"}[self.wtype]
        return AdmWord(winv(self.letters), t)

    @property
    def punctured_count(self) -> int:
        return {"uu": 0, "up": 1, "pu": 1, "pp": 2, "b": 0}[self.wtype]


def classify(q: PolarizedQuiver, x: Word, band: bool = False) -> AdmWord:
    """Wrap a hat-quiver string or band with its type tag."""
    h = hat_of(q)
    if band:
        if not is_band(h, x):
            raise WordError("not a band over the hat quiver")
        return AdmWord(x, "b")
    if not is_string(h, x):
        raise WordError("not a string over the hat quiver")
    a = "p" if is_punctured(q, x[0]) else "u"
    b = "p" if is_punctured(q, x[-1]) else "u"
    return AdmWord(x, a + b)


# -- the orientation construction -------------------------------------------

def _orient(q: PolarizedQuiver, bigger: bool, eps: str) -> Letter:
    return ordl(eps) if bigger else invl(eps)


def _string_cmp(q: PolarizedQuiver, w: Word, k: int) -> bool:
    """True when (w_[k-1])^-1 > w^[k+1] in the base order."""
    rel, _ = lex_compare(q, winv(w[:k]), w[k + 1:])
    if rel not in ("<", ">"):
        raise WordError(f"string comparison degenerate at position {k}")
    return rel == ">"


def _band_cmp(q: PolarizedQuiver, w: Word, k: int) -> bool:
    """True when the inverted cyclic word beats the cyclic word at position k."""
    cyc = w[k + 1:] + w[:k]
    rel, _ = lex_compare(q, winv(cyc), cyc)
    if rel not in ("<", ">"):
        raise WordError(f"band comparison degenerate at position {k}")
    return rel == ">"


def a_of_w(q: PolarizedQuiver, w: Word) -> AdmWord:
    """Orient the special letters of a string or standard-form band.

    Symmetric strings fold to a punctured right end, symmetric bands in
    standard form fold to doubly punctured strings; other letters are kept.
    """
    if is_string(q, w):
        sym = w == winv(w)
        if not sym:
            out = [w[k] if w[k].kind != SPE else
                   _orient(q, _string_cmp(q, w, k), w[k].name)
                   for k in range(len(w))]
            return classify(q, tuple(out))
        m = (len(w) - 1) // 2
        b = q.by_name[w[m].name].source
        out = [w[k] if w[k].kind != SPE else
               _orient(q, _string_cmp(q, w, k), w[k].name)
               for k in range(m)]
        out.append(trivl(b, -1))
        return classify(q, tuple(out))
    if is_primitive_band(q, w):
        if not is_symmetric_band(q, w):
            out = [w[k] if w[k].kind != SPE else
                   _orient(q, _band_cmp(q, w, k), w[k].name)
                   for k in range(len(w))]
            return classify(q, tuple(out), band=True)
        if w not in standard_form_rotations(q, w):
            raise WordError("symmetric band must be in standard form")
        n = len(w) // 2
        a, b = q.by_name[w[0].name].source, q.by_name[w[n].name].source
        out = [tinvl(a, -1)]
        for k in range(1, n):
            out.append(w[k] if w[k].kind != SPE else
                       _orient(q, _band_cmp(q, w, k), w[k].name))
        out.append(trivl(b, -1))
        return classify(q, tuple(out))
    raise WordError("expected a string or a primitive band")


# -- admissibility predicate --------------------------------------------------

def is_admissible(q: PolarizedQuiver, x: Word, band: bool = False) -> tuple[bool, str]:
    """Direct orientation-consistency test, with a reason string on failure."""
    h = hat_of(q)
    if band:
        if not is_primitive_band(h, x):
            return False, "not a primitive band over the hat quiver"
        for k, l in enumerate(x):
            if l.kind not in (ORD, INV) or not q.by_name[l.name].special:
                continue
            cyc = x[k + 1:] + x[:k]
            rel, _ = lex_compare(h, winv(cyc), cyc)
            if rel not in ("<", ">"):
                return False, f"cyclic comparison degenerate at {k}"
            if (rel == ">") != (l.kind == ORD):
                return False, f"letter {k} oriented against the cyclic order"
        fx = f_word(q, x)
        if not is_primitive_band(q, fx):
            return False, "image band not primitive"
        if is_symmetric_band(q, fx):
            return False, "image band symmetric"
        return True, ""
    if not is_string(h, x):
        return False, "not a string over the hat quiver"
    for k in range(1, len(x) - 1):
        l = x[k]
        if l.kind not in (ORD, INV) or not q.by_name[l.name].special:
            continue
        rel, _ = lex_compare(h, winv(x[:k]), x[k + 1:])
        if rel == "=":
            return False, f"string folds at position {k}"
        if rel == "incomparable":
            return False, f"comparison degenerate at position {k}"
        if (rel == ">") != (l.kind == ORD):
            return False, f"letter {k} oriented against the order"
    aw = classify(q, x)
    if aw.wtype == "pp":
        bar = completion(q, aw)
        if not is_primitive_band(q, bar):
            return False, "completion of (p,p) string not a primitive band"
    return True, ""


# -- completion ---------------------------------------------------------------

def completion(q: PolarizedQuiver, x: AdmWord) -> Word:
    """The base-quiver string or band recovered from an admissible word."""
    w, t = x.letters, x.wtype
    if t == "uu" or t == "b":
        return f_word(q, w)
    if t == "up":
        body = f_word(q, w[:-1])
        eps = f_letter(q, w[-1])
        return body + (eps,) + winv(body)
    if t == "pu":
        body = f_word(q, w[1:])
        eps = f_letter(q, w[0])
        return winv(body) + (eps,) + body
    body = f_word(q, w[1:-1])
    return (f_letter(q, w[0]),) + body + (f_letter(q, w[-1]),) + winv(body)


def a_image_of_completion(q: PolarizedQuiver, x: AdmWord) -> AdmWord:
    """Reconstruct x from its own completion; inverse route for type (p,u).

    Every admissible word except type (p,u) is a direct image of the
    orientation construction applied to its completion (inversion commutes
    with the construction); (p,u) words are inverses of (u,p) images.
    """
    bar = completion(q, x)
    if x.wtype == "pu":
        return a_of_w(q, bar).inverse()
    if x.wtype == "pp":
        for r in standard_form_rotations(q, bar):
            a = a_of_w(q, r)
            if a.letters == x.letters:
                return a
        raise WordError("(p,p) word is not an A-image of its completion")
    return a_of_w(q, bar)


def is_projective_adm(q: PolarizedQuiver, x: AdmWord) -> bool:
    if x.wtype == "b":
        return False
    return completion(q, x) in projective_strings(q)


def tau_adm(q: PolarizedQuiver, x: AdmWord) -> AdmWord:
    """AR translate on admissible words via the completion.

    Fixed on bands and doubly punctured strings; otherwise transported
    through the base-quiver translate, matching the source sign.
    """
    if x.wtype in ("pp", "b"):
        return x
    if is_projective_adm(q, x):
        raise IsProjective(f"{x} is projective")
    w = completion(q, x)
    tw = tau_string(q, w)
    a = a_of_w(q, tw)
    return a.inverse() if x.wtype == "pu" else a


def tau_adm_via_successors(q: PolarizedQuiver, x: AdmWord) -> AdmWord:
    """Independent route: hat-quiver successors, per the type case split."""
    h = hat_of(q)
    if x.wtype in ("pp", "b"):
        return x
    if is_projective_adm(q, x):
        raise IsProjective(f"{x} is projective")
    if x.wtype == "pu":
        return AdmWord(successor(h, x.letters)[0], "pu")
    if x.wtype == "up":
        return AdmWord(left_successor(h, x.letters), "up")
    try:
        return AdmWord(left_successor(h, successor(h, x.letters)[0]), "uu")
    except AtMaximum:
        return AdmWord(successor(h, left_successor(h, x.letters))[0], "uu")


# -- readings -----------------------------------------------------------------

PUNCT = "punct"  # placeholder for a delta-oriented special letter in readings


def _subst(l: Letter, delta: int) -> Letter:
    if l.kind == PUNCT:
        return ordl(l.name) if delta > 0 else invl(l.name)
    return l


def _positions_doublebar(q: PolarizedQuiver, x: AdmWord) -> tuple[list[Letter], int, bool]:
    """(letters, offset, periodic): the reading word with index i at
    letters[(offset + i) % len] for periodic, letters[offset + i] otherwise."""
    w, t = x.letters, x.wtype
    l = len(w) - 1
    if t == "uu":
        return list(f_word(q, w)), 0, False
    if t == "up":
        body = list(f_word(q, w[:-1]))
        eps = f_letter(q, w[-1])
        return body + [eps] + list(winv(tuple(body))), 0, False
    if t == "pu":
        body = list(f_word(q, w[1:]))
        eps = f_letter(q, w[0])
        return list(winv(tuple(body))) + [eps] + body, l, False
    if t == "pp":
        body = list(f_word(q, w[1:-1]))
        per = [f_letter(q, w[0])] + body + [f_letter(q, w[-1])] + list(winv(tuple(body)))
        return per, 0, True
    return list(f_word(q, w)), 0, True


def _positions_hat(q: PolarizedQuiver, x: AdmWord) -> tuple[list[Letter], int, bool]:
    """Reading word over the hat quiver; punctured positions hold a
    placeholder whose orientation is chosen per ray (so that the plus
    reading is always below the minus reading)."""
    w, t = x.letters, x.wtype
    l = len(w) - 1
    if t == "uu":
        return list(w), 0, False
    if t == "up":
        mark = Letter(PUNCT, q.special_loop_at(w[-1].vertex).name)
        body = list(w[:-1])
        return body + [mark] + list(winv(tuple(body))), 0, False
    if t == "pu":
        mark = Letter(PUNCT, q.special_loop_at(w[0].vertex).name)
        body = list(w[1:])
        return list(winv(tuple(body))) + [mark] + body, l, False
    if t == "pp":
        m0 = Letter(PUNCT, q.special_loop_at(w[0].vertex).name)
        m1 = Letter(PUNCT, q.special_loop_at(w[-1].vertex).name)
        body = list(w[1:-1])
        return [m0] + body + [m1] + list(winv(tuple(body))), 0, True
    return list(w), 0, True


def _inv_keep_mark(l: Letter) -> Letter:
    return l if l.kind == PUNCT else inverse_letter(l)


def _ray_from(letters: list[Letter], offset: int, periodic: bool, i: int,
              forward: bool, delta: int = 0) -> Ray:
    n = len(letters)
    if periodic:
        if forward:
            start = (offset + i) % n
            per = letters[start:] + letters[:start]
        else:
            per = [_inv_keep_mark(letters[(offset + i - 1 - j) % n]) for j in range(n)]
        return Ray((), tuple(_subst(l, delta) for l in per))
    idx = offset + i
    if forward:
        pre = letters[idx:]
    else:
        pre = [_inv_keep_mark(letters[j]) for j in range(idx - 1, -1, -1)]
    return Ray(tuple(_subst(l, delta) for l in pre))


@dataclass(frozen=True)
class Reading:
    doublebar: dict[int, Ray]   # rho -> ray
    hat: dict[tuple[int, int], Ray]   # (delta, rho) -> ray


@lru_cache(maxsize=1 << 18)
def doublebar_ray(q: PolarizedQuiver, x: AdmWord, i: int, rho: int) -> Ray:
    letters, off, per = _positions_doublebar(q, x)
    here = letters[(off + i) % len(letters)] if per else letters[off + i]
    t1 = letter_target(q, here)[1]
    return _ray_from(letters, off, per, i, forward=(t1 == rho))


@lru_cache(maxsize=1 << 18)
def hat_ray(q: PolarizedQuiver, x: AdmWord, i: int, rho: int, delta: int) -> Ray:
    h = hat_of(q)
    letters, off, per = _positions_hat(q, x)
    here = letters[(off + i) % len(letters)] if per else letters[off + i]
    t1 = -1 if here.kind == PUNCT else letter_target(h, here)[1]
    return _ray_from(letters, off, per, i, forward=(t1 == rho), delta=delta)


def reading(q: PolarizedQuiver, x: AdmWord, i: int, rho: int) -> Reading:
    lo = 0 if x.wtype == "b" else 1
    if not lo <= i <= len(x.letters) - 1:
        raise WordError(f"reading index {i} out of range")
    return Reading(
        {r: doublebar_ray(q, x, i, r) for r in (-1, 1)},
        {(d, r): hat_ray(q, x, i, r, d) for d in (-1, 1) for r in (-1, 1)},
    )


# -- enumeration ---------------------------------------------------------------

@dataclass(frozen=True)
class AdmSets:
    strings: tuple[AdmWord, ...]        # all admissible strings, inverses included
    bands: tuple[AdmWord, ...]          # rotation-canonical admissible bands
    truncated: bool


def bar_length(x: AdmWord) -> int:
    l = len(x.letters) - 1
    return {"uu": l + 1, "up": 2 * l + 1, "pu": 2 * l + 1,
            "pp": 2 * l, "b": l + 1}[x.wtype]


def enumerate_adm(q: PolarizedQuiver, max_len: int) -> AdmSets:
    """Admissible words whose completion has length <= max_len, built from
    base strings and standard-form bands."""
    strings: set[AdmWord] = set()
    ws, truncated = enumerate_strings(q, max_len)
    for w in ws:
        a = a_of_w(q, w)
        strings.add(a)
        strings.add(a.inverse())
    bands: set[AdmWord] = set()
    for w in standard_band_words(q, max_len):
        a = a_of_w(q, w)
        if a.wtype == "pp":
            strings.add(a)
            strings.add(a.inverse())
        else:
            bands.add(AdmWord(band_canonical(a.letters), "b"))
            bands.add(AdmWord(band_canonical(winv(a.letters)), "b"))
    return AdmSets(tuple(sorted(strings, key=lambda a: (a.letters, a.wtype))),
                   tuple(sorted(bands, key=lambda a: a.letters)), truncated)


def enumerate_adm_direct(q: PolarizedQuiver, max_len: int) -> AdmSets:
    """Independent route: filter all hat-quiver strings and bands."""
    h = hat_of(q)
    strings: set[AdmWord] = set()
    ws, truncated = enumerate_strings(h, max_len)
    for w in ws:
        if is_admissible(q, w)[0]:
            a = classify(q, w)
            if bar_length(a) <= max_len:
                strings.add(a)
    bands: set[AdmWord] = set()
    for w in enumerate_bands(h, max_len):
        for r in list(rotations(w)) + list(rotations(winv(w))):
            if is_admissible(q, r, band=True)[0]:
                bands.add(AdmWord(band_canonical(r), "b"))
    return AdmSets(tuple(sorted(strings, key=lambda a: (a.letters, a.wtype))),
                   tuple(sorted(bands, key=lambda a: a.letters)), truncated)
