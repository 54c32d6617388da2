"""The quantum torus T^2_q and tensor words over it.

Elements of T^2_q are finite Q(q)-combinations of normal-ordered monomials
``v^r u^s`` with the product

    (v^r u^s)(v^n u^m) = q^(s*n) v^(r+n) u^(s+m),

which is the rewriting rule ``u v = q v u`` applied s*n times.

The same class also carries tensor products over T^2_q of the bimodules
Omega^1 (letters ``du``, ``dv``), Vec (letters ``Du``, ``Dv`` for the
coordinate fields) and Omega^2 (letter ``W`` for du^dv).  Every one of those
bimodules is free as a right module on its letters and an algebra monomial
moves rightwards past a letter at the cost of a power of q:

    v^a u^b . du = du . q^(-a) v^a u^b      v^a u^b . Du = Du . q^(a)  v^a u^b
    v^a u^b . dv = dv . q^(b)  v^a u^b      v^a u^b . Dv = Dv . q^(-b) v^a u^b
    v^a u^b . W  = W  . q^(b-a) v^a u^b

so a tensor is stored as ``{(word, r, s): coefficient}`` meaning
``word . v^r u^s`` with every algebra coefficient pushed to the far right.
A torus element is a tensor whose words are all empty.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping

from .scalars import ONE, ZERO, ScalarQ

DU, DV, PU, PV, W = 0, 1, 2, 3, 4

LETTER_NAMES = {DU: "du", DV: "dv", PU: "∂_u", PV: "∂_v", W: "du∧dv"}
ASCII_NAMES = {DU: "du", DV: "dv", PU: "Du", PV: "Dv", W: "du^^dv"}

# exponent of q picked up by v^a u^b moving right past the letter: ca*a + cb*b
_TWIST = {DU: (-1, 0), DV: (0, 1), PU: (1, 0), PV: (0, -1), W: (-1, 1)}

FORM_LETTERS = frozenset((DU, DV))
FIELD_LETTERS = frozenset((PU, PV))

Word = tuple
Key = tuple  # (word, r, s)


@lru_cache(maxsize=None)
def word_twist(word: Word) -> tuple[int, int]:
    ca = cb = 0
    for letter in word:
        x, y = _TWIST[letter]
        ca += x
        cb += y
    return ca, cb


class Tensor:
    """A finite sum of ``word . v^r u^s`` with Q(q) coefficients. Immutable."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Key, ScalarQ] | None = None, *, _clean: bool = False):
        if terms is None:
            terms = {}
        elif not _clean:
            terms = {k: ScalarQ.coerce(c) for k, c in terms.items() if c}
        self.terms = terms
        self._hash = None

    # constructors -----------------------------------------------------------
    @classmethod
    def monomial(cls, r: int = 0, s: int = 0, coeff=ONE, word: Word = ()) -> "Tensor":
        coeff = ScalarQ.coerce(coeff)
        if not coeff:
            return cls()
        return cls({(tuple(word), r, s): coeff}, _clean=True)

    @classmethod
    def letter(cls, letter: int) -> "Tensor":
        return cls({((letter,), 0, 0): ONE}, _clean=True)

    @classmethod
    def scalar(cls, c) -> "Tensor":
        return cls.monomial(0, 0, c)

    @classmethod
    def from_algebra(cls, terms: Mapping[tuple[int, int], object]) -> "Tensor":
        """Build a torus element from ``{(r, s): coeff}``."""
        return cls({((), r, s): c for (r, s), c in terms.items()})

    # inspection ---------------------------------------------------------------
    def __iter__(self) -> Iterator[tuple[Word, int, int, ScalarQ]]:
        for (w, r, s), c in self.terms.items():
            yield w, r, s, c

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def words(self) -> set:
        return {k[0] for k in self.terms}

    def degree(self) -> int | None:
        """Word length when homogeneous; None for zero or mixed tensors."""
        lens = {len(k[0]) for k in self.terms}
        return lens.pop() if len(lens) == 1 else None

    def is_algebra(self) -> bool:
        return all(not k[0] for k in self.terms)

    def is_constant(self) -> bool:
        """All algebra coefficients are scalars (no u, v)."""
        return all(k[1] == 0 and k[2] == 0 for k in self.terms)

    def algebra_terms(self) -> dict[tuple[int, int], ScalarQ]:
        if not self.is_algebra():
            raise ValueError("not a torus element")
        return {(r, s): c for (_, r, s), c in self.terms.items()}

    def coefficient(self, word: Word) -> "Tensor":
        """Right coefficient (a torus element) of a basis word."""
        word = tuple(word)
        return Tensor({((), r, s): c for (w, r, s), c in self.terms.items() if w == word}, _clean=True)

    def left_coefficient(self, word: Word) -> "Tensor":
        """Coefficient m with ``m . word`` equal to the ``word`` part."""
        word = tuple(word)
        ca, cb = word_twist(word)
        return Tensor(
            {((), r, s): c.mul_qpow(-(ca * r + cb * s))
             for (w, r, s), c in self.terms.items() if w == word},
            _clean=True,
        )

    def scalar_value(self) -> ScalarQ:
        """The Q(q) value of a constant torus element."""
        if not self.terms:
            return ZERO
        if set(self.terms) != {((), 0, 0)}:
            raise ValueError("not a constant torus element")
        return self.terms[((), 0, 0)]

    # linear structure ---------------------------------------------------------
    def __add__(self, other: "Tensor") -> "Tensor":
        if not isinstance(other, Tensor):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            prev = out.get(k)
            if prev is None:
                out[k] = c
            else:
                c = prev + c
                if c:
                    out[k] = c
                else:
                    del out[k]
        return Tensor(out, _clean=True)

    __radd__ = __add__

    def __neg__(self) -> "Tensor":
        return Tensor({k: -c for k, c in self.terms.items()}, _clean=True)

    def __sub__(self, other: "Tensor") -> "Tensor":
        if not isinstance(other, Tensor):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Tensor":
        return _coerce(other) - self

    def scale(self, c) -> "Tensor":
        c = ScalarQ.coerce(c)
        if not c:
            return Tensor()
        if c.is_one():
            return self
        return Tensor({k: x * c for k, x in self.terms.items()}, _clean=True)

    def __mul__(self, other) -> "Tensor":
        if isinstance(other, Tensor):
            return tensor(self, other)
        if isinstance(other, (ScalarQ, int)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "Tensor":
        if isinstance(other, (ScalarQ, int)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __matmul__(self, other: "Tensor") -> "Tensor":
        return tensor(self, other)

    def __pow__(self, k: int) -> "Tensor":
        if not self.is_algebra():
            raise ValueError("powers are only defined for torus elements")
        if k < 0:
            return invert_monomial(self) ** (-k)
        out = ONE_T
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = self._hash = hash(frozenset(self.terms.items()))
        return h

    def map_coefficients(self, fn: Callable[[ScalarQ], ScalarQ]) -> "Tensor":
        return Tensor({k: fn(c) for k, c in self.terms.items()})

    # rendering ---------------------------------------------------------------
    def render(self) -> str:
        from .render import render_tensor

        return render_tensor(self)

    __str__ = render

    def __repr__(self) -> str:
        return f"Tensor({self.render()!r})"


def _coerce(x) -> Tensor | None:
    try:
        return Tensor.scalar(ScalarQ.coerce(x))
    except TypeError:
        return None


ZERO_T = Tensor()
ONE_T = Tensor.monomial(0, 0, ONE)


def monomial(r: int, s: int, coeff=ONE) -> Tensor:
    """The torus element ``coeff * v^r u^s``."""
    return Tensor.monomial(r, s, coeff)


U = monomial(0, 1)
V = monomial(1, 0)
U_INV = monomial(0, -1)
V_INV = monomial(-1, 0)


def invert_monomial(m: Tensor) -> Tensor:
    """Inverse of a single monomial c v^r u^s in T^2_q."""
    if len(m.terms) != 1:
        raise ValueError("only monomials are invertible here")
    ((w, r, s), c), = m.terms.items()
    if w:
        raise ValueError("not a torus element")
    # (v^r u^s)(v^-r u^-s) = q^(-s r), so the inverse carries q^(rs)
    return Tensor.monomial(-r, -s, c.inverse().mul_qpow(r * s))


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------

def tensor(a: Tensor, b: Tensor) -> Tensor:
    """Tensor product over T^2_q; for torus elements this is the algebra product.

    ``(w1 . x1) (x) (w2 . x2) = w1 w2 . twist_{w2}(x1) x2``.
    """
    if not a.terms or not b.terms:
        return ZERO_T
    out: dict = {}
    for (w2, r2, s2), c2 in b.terms.items():
        ca, cb = word_twist(w2)
        for (w1, a1, b1), c1 in a.terms.items():
            e = ca * a1 + cb * b1 + b1 * r2
            c = (c1 * c2).mul_qpow(e)
            k = (w1 + w2, a1 + r2, b1 + s2)
            prev = out.get(k)
            if prev is None:
                out[k] = c
            else:
                c = prev + c
                if c:
                    out[k] = c
                else:
                    del out[k]
    return Tensor(out, _clean=True)


def algebra_mul(a: Tensor, b: Tensor) -> Tensor:
    if not (a.is_algebra() and b.is_algebra()):
        raise ValueError("algebra_mul expects torus elements")
    return tensor(a, b)


def algebra_equal(a: Tensor, b: Tensor) -> bool:
    return (a - b).is_zero()


def left_act(m: Tensor, z: Tensor) -> Tensor:
    """m . z for a torus element m."""
    return tensor(m, z)


def right_act(z: Tensor, m: Tensor) -> Tensor:
    """z . m for a torus element m."""
    return tensor(z, m)


def apply_local(z: Tensor, pos: int, width: int, image: Callable[[Word], Tensor | None]) -> Tensor:
    """Apply a bimodule map to the slots ``pos .. pos+width-1`` of every word.

    ``image(chunk)`` returns the image of the pure basis chunk (which may
    carry algebra coefficients); those coefficients are pushed right past
    the untouched suffix.
    """
    out: dict = {}
    cache: dict = {}
    for (w, r, s), c in z.terms.items():
        chunk = w[pos:pos + width]
        if len(chunk) != width:
            raise ValueError(f"word {w} too short for a map at slot {pos}")
        img = cache.get(chunk)
        if img is None:
            img = image(chunk)
            if img is None:
                raise ValueError(f"map undefined on {chunk}")
            cache[chunk] = img
        prefix, suffix = w[:pos], w[pos + width:]
        ca, cb = word_twist(suffix)
        for (iw, ia, ib), ic in img.terms.items():
            e = ca * ia + cb * ib + ib * r
            k = (prefix + iw + suffix, ia + r, ib + s)
            val = (ic * c).mul_qpow(e)
            prev = out.get(k)
            if prev is None:
                out[k] = val
            else:
                val = prev + val
                if val:
                    out[k] = val
                else:
                    del out[k]
    return Tensor(out, _clean=True)


def from_left(m: Tensor, word: Word) -> Tensor:
    """``m . word`` for a torus element m and a basis word."""
    return tensor(m, Tensor.monomial(0, 0, ONE, word))


def split_terms(z: Tensor) -> Iterable[tuple[Word, Tensor]]:
    """(word, right coefficient) pairs."""
    for w in sorted(z.words()):
        yield w, z.coefficient(w)


def sum_tensors(items: Iterable[Tensor]) -> Tensor:
    out: dict = {}
    for t in items:
        for k, c in t.terms.items():
            prev = out.get(k)
            if prev is None:
                out[k] = c
            else:
                c = prev + c
                if c:
                    out[k] = c
                else:
                    del out[k]
    return Tensor(out, _clean=True)


def algebra_render(a: Tensor) -> str:
    return a.render()
