"""Free graded noncommutative algebra on a, da, b, db, cyclic traces and
the Chern-Simons functionals cs_{2,2K}.

A word is a tuple of letter names.  Functionals are never numbers here:
they are combinations of cyclic classes, each named by its canonical word.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as cartesian
from typing import Iterable, Mapping

from .linalg import SparseSpan
from .scalars import format_scalar

LETTER_DEGREE = {"a": 1, "da": 2, "b": 1, "db": 2}
LETTER_ORDER = {"a": 0, "da": 1, "b": 2, "db": 3}
D_OF = {"a": "da", "b": "db"}

Word = tuple


def word_degree(w: Word) -> int:
    return sum(LETTER_DEGREE[x] for x in w)


def word_key(w: Word) -> tuple:
    """Canonical class order: by length, then letter-wise."""
    return (len(w), tuple(LETTER_ORDER[x] for x in w))


class NCPoly:
    """Finite Q-linear combination of words; zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, object] | None = None):
        clean = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            for x in w:
                if x not in LETTER_DEGREE:
                    raise ValueError(f"unknown letter {x!r}")
            c = Fraction(c)
            if c:
                clean[w] = clean.get(w, 0) + c
                if not clean[w]:
                    del clean[w]
        self.terms = clean

    @classmethod
    def letter(cls, x: str) -> "NCPoly":
        return cls({(x,): 1})

    @classmethod
    def word(cls, *letters: str, coeff=1) -> "NCPoly":
        return cls({tuple(letters): coeff})

    def __add__(self, other: "NCPoly") -> "NCPoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return NCPoly(out)

    def __neg__(self):
        return NCPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            out: dict = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    out[w] = out.get(w, 0) + c1 * c2
            return NCPoly(out)
        return NCPoly({w: c * other for w, c in self.terms.items()})

    def __rmul__(self, c):
        return NCPoly({w: c * x for w, x in self.terms.items()})

    def __pow__(self, k: int):
        out = NCPoly({(): 1})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, NCPoly) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"NCPoly({format_terms(self.terms) or '0'})"


def format_word(w: Word) -> str:
    return "·".join(w)


def format_terms(terms: Mapping[Word, Fraction]) -> str:
    """``"coeff * word"`` joined by ``" + "`` in canonical class order."""
    return " + ".join(f"{format_scalar(c)} * {format_word(w)}"
                      for w, c in sorted(terms.items(), key=lambda kv: word_key(kv[0])))


def free_d(p: NCPoly) -> NCPoly:
    """Graded Leibniz extension of a -> da, b -> db, da, db -> 0."""
    out: dict = {}
    for w, c in p.terms.items():
        sign = 1
        for i, x in enumerate(w):
            if x in D_OF:
                nw = w[:i] + (D_OF[x],) + w[i + 1:]
                out[nw] = out.get(nw, 0) + sign * c
            if LETTER_DEGREE[x] % 2:
                sign = -sign
    return NCPoly(out)


def hash_map(p: NCPoly) -> NCPoly:
    return NCPoly({w: c * len(w) for w, c in p.terms.items()})


def hash_inverse(p: NCPoly) -> NCPoly:
    for w in p.terms:
        if not w:
            raise ValueError("hash inverse is undefined on the empty word")
    return NCPoly({w: c / len(w) for w, c in p.terms.items()})


def canonical_rotation(w: Word) -> tuple[Word, int]:
    """Least rotation of w and the sign s with  ∫w = s ∫rotation.

    Returns sign 0 when the cyclic class is self-annihilating.
    """
    if not w:
        return w, 1
    rotations = {}
    cur, sign = tuple(w), 1
    total = word_degree(w)
    for _ in range(len(w)):
        if cur in rotations and rotations[cur] != sign:
            return cur, 0
        rotations.setdefault(cur, sign)
        first = LETTER_DEGREE[cur[0]]
        if first * (total - first) % 2:
            sign = -sign
        cur = cur[1:] + cur[:1]
    # back at w: the full turn must return +1 or the class is zero
    if sign != 1:
        return w, 0
    best = min(rotations, key=word_key)
    return best, rotations[best]


def cyclic_reduce(p) -> dict[Word, Fraction]:
    """Normal form under the graded cyclic identification of the trace."""
    terms = p.terms if isinstance(p, NCPoly) else p
    out: dict = {}
    for w, c in terms.items():
        rep, s = canonical_rotation(w)
        if s == 0:
            continue
        out[rep] = out.get(rep, 0) + s * c
    return {w: c for w, c in out.items() if c != 0}


def words(degree: int, max_length: int, alphabet: Iterable[str] = ("a", "da")) -> list[Word]:
    """All nonempty words of the given degree and length <= max_length."""
    alphabet = sorted(alphabet, key=LETTER_ORDER.get)
    out = []

    def rec(prefix, deg):
        if deg == degree and prefix:
            out.append(tuple(prefix))
        if len(prefix) >= max_length:
            return
        for x in alphabet:
            nd = deg + LETTER_DEGREE[x]
            if nd <= degree:
                prefix.append(x)
                rec(prefix, nd)
                prefix.pop()

    rec([], 0)
    return sorted(out, key=word_key)


def _marked_count(w: Word) -> int:
    return sum(1 for x in w if x in ("b", "db"))


def d_exact_span(degree: int, letter_budget: int, alphabet: Iterable[str] = ("a", "da"),
                 marked: int | None = None) -> SparseSpan:
    """Span of cyclic_reduce(free_d(w)) over words w of degree ``degree - 1``
    with at most ``letter_budget`` letters.  ``marked`` keeps only words with
    that many letters from {b, db}."""
    span = SparseSpan(key=word_key)
    for w in words(degree - 1, letter_budget, alphabet):
        if marked is not None and _marked_count(w) != marked:
            continue
        span.add(cyclic_reduce(free_d(NCPoly({w: 1}))))
    return span


def mc_power(K: int, x: str = "a") -> NCPoly:
    """(dx + x^2)^K in the free algebra."""
    base = NCPoly.letter(D_OF[x]) + NCPoly.word(x, x)
    return base ** K


def cs_functional(K: int) -> dict[Word, Fraction]:
    """2K ∫ #^{-1}(a (da + a^2)^K), as canonical cyclic classes."""
    if K < 1:
        raise ValueError("K must be >= 1")
    poly = NCPoly.letter("a") * mc_power(K)
    return {w: 2 * K * c for w, c in cyclic_reduce(hash_inverse(poly)).items()}


def cs_polynomial(K: int) -> NCPoly:
    """2K #^{-1}(a (da + a^2)^K) before passing to cyclic classes."""
    return (2 * K) * hash_inverse(NCPoly.letter("a") * mc_power(K))


def first_variation(p: NCPoly) -> NCPoly:
    """Coefficient of eps in p(a + eps b), with da + eps db for d(a + eps b)."""
    swap = {"a": "b", "da": "db"}
    out: dict = {}
    for w, c in p.terms.items():
        for i, x in enumerate(w):
            if x in swap:
                nw = w[:i] + (swap[x],) + w[i + 1:]
                out[nw] = out.get(nw, 0) + c
    return NCPoly(out)


def substitute_b_by_a(p: NCPoly) -> NCPoly:
    back = {"b": "a", "db": "da"}
    out: dict = {}
    for w, c in p.terms.items():
        nw = tuple(back.get(x, x) for x in w)
        out[nw] = out.get(nw, 0) + c
    return NCPoly(out)


def variational_check(K: int) -> bool:
    """First variation of cs_{2,2K} equals 2K ∫ b (da + a^2)^K modulo cyclic
    and d-exact relations."""
    var = cyclic_reduce(first_variation(cs_polynomial(K)))
    target = cyclic_reduce((2 * K) * (NCPoly.letter("b") * mc_power(K)))
    diff = dict(var)
    for w, c in target.items():
        diff[w] = diff.get(w, 0) - c
    diff = {w: c for w, c in diff.items() if c != 0}
    if not diff:
        return True
    span = d_exact_span(2 * K + 1, 2 * K, ("a", "da", "b", "db"), marked=1)
    return span.contains(diff)


def parse_word(text: str) -> Word:
    """Parse ``"a·da·a"`` (``*`` and spaces also separate letters)."""
    parts = [x for x in text.replace("*", "·").replace(" ", "·").split("·") if x]
    for x in parts:
        if x not in LETTER_DEGREE:
            raise ValueError(f"unknown letter {x!r} in {text!r}")
    return tuple(parts)
