"""Canonical text rendering; this is the golden-test format.

* scalars: ``num/den`` with ``/1`` suppressed (see ScalarQ.render)
* torus elements: ``(c) v^r u^s`` terms joined by `` + ``, sorted by
  descending (r, s); a lone constant integer is printed bare (``1``)
* tensors: ``word·(coefficient)`` terms sorted by word, letters joined by ⊗,
  e.g. ``du⊗dv·((q) v^1 u^1)``

Every rendering reparses (see :mod:`ncgeom.parser`) to an equal value.
"""

from __future__ import annotations

from .torus import LETTER_NAMES, W, Tensor


def _monomial_factors(r: int, s: int) -> str:
    parts = []
    if r:
        parts.append(f"v^{r}")
    if s:
        parts.append(f"u^{s}")
    return " ".join(parts)


def render_algebra_terms(terms: dict) -> str:
    if not terms:
        return "0"
    keys = sorted(terms, reverse=True)
    out = []
    for r, s in keys:
        c = terms[(r, s)]
        text = c.render()
        mono = _monomial_factors(r, s)
        if not mono:
            if len(c.num) <= 1 and c.den == (1,):
                out.append(text)
            else:
                out.append(f"({text})")
        else:
            out.append(f"({text}) {mono}")
    return " + ".join(out)


def render_word(word: tuple) -> str:
    if not word:
        return ""
    names = []
    for letter in word:
        name = LETTER_NAMES[letter]
        if letter == W and len(word) > 1:
            name = f"({name})"
        names.append(name)
    return "⊗".join(names)


def render_tensor(z: Tensor) -> str:
    if not z.terms:
        return "0"
    by_word: dict = {}
    for (w, r, s), c in z.terms.items():
        by_word.setdefault(w, {})[(r, s)] = c
    if set(by_word) == {()}:
        return render_algebra_terms(by_word[()])
    out = []
    for w in sorted(by_word):
        coeff = render_algebra_terms(by_word[w])
        if not w:
            out.append(coeff if " + " not in coeff else f"({coeff})")
        else:
            out.append(f"{render_word(w)}·({coeff})")
    return " + ".join(out)
