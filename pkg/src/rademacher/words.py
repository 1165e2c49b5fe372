"""Edge words and based edge paths in the Farey triangulation.

Vertices of the triangulation are reduced fractions n/d together with
1/0 = infinity; n1/d1 and n2/d2 span an edge iff n1 d2 - n2 d1 = +-1.
A word w = (a_1, ..., a_k) stands for the product

    S (T^{a_1} S) (T^{a_2} S) ... (T^{a_k} S),

whose partial products trace out a path of edges starting from the based
edge (1/0, 0/1): the j-th partial product (a, b; c, d) covers the directed
edge b/d -> a/c.  decompose inverts this up to sign, endpoints and
turns_from_endpoints convert between words and vertex sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NotAnEdgeError, ParseError, WrongBaseEdgeError
from .matrices import S, UnimodularMatrix, psl_eq, sgn

EdgeWord = tuple[int, ...]


@dataclass(frozen=True)
class Farey:
    """Reduced fraction n/d with d >= 0; d = 0 only for n = +-1 (infinity)."""

    n: int
    d: int

    def __post_init__(self):
        if self.n == 0 and self.d == 0:
            raise ParseError("0/0 is not a vertex")
        g = gcd(self.n, self.d)
        n, d = self.n // g, self.d // g
        if d < 0:
            n, d = -n, -d
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d", d)

    @property
    def is_infinity(self) -> bool:
        return self.d == 0

    def __str__(self) -> str:
        return f"{self.n}/{self.d}"

    @classmethod
    def parse(cls, text: str) -> "Farey":
        num, sep, den = text.partition("/")
        try:
            if sep:
                return cls(int(num), int(den))
            return cls(int(num), 1)
        except ValueError:
            raise ParseError(f"bad vertex {text!r}") from None


INFINITY = Farey(1, 0)
ZERO = Farey(0, 1)


def is_edge(u: Farey, v: Farey) -> bool:
    return abs(u.n * v.d - v.n * u.d) == 1


def _t_s(a: int) -> UnimodularMatrix:
    # T^a S = (a, -1; 1, 0)
    return UnimodularMatrix(a, -1, 1, 0)


def reconstruct(word) -> UnimodularMatrix:
    """S (T^{a_1} S) ... (T^{a_k} S); the empty word gives S itself."""
    m = S
    for a in word:
        m = m * _t_s(a)
    return m


def _merge_zeros(word: list[int]) -> list[int]:
    # T^a S T^0 S T^b S = T^{a+b} S up to sign; repeat until no interior zero
    changed = True
    while changed:
        changed = False
        for i in range(1, len(word) - 1):
            if word[i] == 0:
                word[i - 1 : i + 2] = [word[i - 1] + word[i + 1]]
                changed = True
                break
    return word


def decompose(g: UnimodularMatrix) -> EdgeWord:
    """A word w with reconstruct(w) = +-g.

    Peel C = S^{-1} g from the left by the Euclidean algorithm on the left
    column (floor quotients); a residual T^m is closed with
    T^m = (T^m S)(T^0 S).  Words are not unique; only PSL equality of the
    reconstruction is promised, plus freedom from interior zeros.
    """
    c_mat = S.inverse() * g
    a, b, c, d = c_mat.entries()
    word: list[int] = []
    while c != 0:
        n = a // c
        word.append(n)
        a, b, c, d = c, d, n * c - a, n * d - b
    # upper triangular now: (e, f; 0, e) with e = +-1 is T^{e f} up to sign
    m = a * b
    if m != 0:
        word += [m, 0]
    return tuple(_merge_zeros(word))


def endpoints_signed(word) -> list[tuple[int, int]]:
    """Raw endpoint representatives (n, d), sign-carrying.

    The sequence starts (1, 0), (0, 1) and appends the left column of each
    partial product; every consecutive pair satisfies
    n_j d_{j+1} - n_{j+1} d_j = +1 exactly.
    """
    pts = [(1, 0), (0, 1)]
    m = S
    for a in word:
        m = m * _t_s(a)
        pts.append((m.a, m.c))
    return pts


def endpoints(word) -> list[Farey]:
    """Vertex sequence of the based edge path, canonicalized.

    k + 2 vertices for a length-k word; denominators are emitted
    non-negative with infinity written 1/0.  The Farey constructor performs
    the normalization (columns of unimodular matrices are already reduced).
    """
    out = []
    for n, d in endpoints_signed(word):
        if d == 0:
            out.append(INFINITY)
        else:
            out.append(Farey(n, d))
    return out


def turns_from_endpoints(pts) -> EdgeWord:
    """Recover the word from a based vertex sequence.

    For each interior vertex the turn is

        a_j = (n_{j-1} d_{j+1} - n_{j+1} d_{j-1}) * sgn(D_{j-1}) * sgn(D_j),

    where D_i = n_i d_{i+1} - n_{i+1} d_i is the oriented determinant of the
    i-th edge.  The outer determinant carries the turn; the two flanking
    edge orientations correct its sign, which makes the result independent
    of the choice of representative sign at every vertex (in particular at
    interior visits to 1/0, where a fixed representative could not encode
    the turn direction on its own).
    """
    pts = [p if isinstance(p, Farey) else Farey(*p) for p in pts]
    if len(pts) < 2:
        raise WrongBaseEdgeError("need at least the two base vertices")
    if not (pts[0].is_infinity and pts[1] == ZERO):
        raise WrongBaseEdgeError(f"path must start 1/0, 0/1; got {pts[0]}, {pts[1]}")
    dets = []
    for u, v in zip(pts, pts[1:]):
        det = u.n * v.d - v.n * u.d
        if det not in (1, -1):
            raise NotAnEdgeError(f"{u} -> {v} is not an edge (determinant {det})")
        dets.append(det)
    word = []
    for j in range(1, len(pts) - 1):
        outer = pts[j - 1].n * pts[j + 1].d - pts[j + 1].n * pts[j - 1].d
        word.append(outer * sgn(dets[j - 1]) * sgn(dets[j]))
    return tuple(word)


def word_matrix_roundtrip(g: UnimodularMatrix) -> bool:
    """Convenience check: decompose then reconstruct lands on +-g."""
    return psl_eq(reconstruct(decompose(g)), g)
