"""Integer 2x2 matrices of determinant one and Fricke group elements.

UnimodularMatrix is an element of SL2(Z).  FrickeElement represents an
element of the extension of Gamma0(p) by the Fricke involution
W_p = (1/sqrt p)(0,-1;p,0): either a Gamma0(p) matrix itself, or a matrix
in the coset W_p Gamma0(p), stored exactly through the normal form

    (1/sqrt p) (p*alpha, beta; p*gamma, p*delta),   p*alpha*delta - beta*gamma = 1.

All arithmetic is exact; sqrt(p) never appears outside the eta module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import (
    DeterminantError,
    DivisibilityError,
    NotOddPrimeError,
    ParseError,
    PrimeMismatchError,
)


def sgn(x) -> int:
    """Sign of x with sgn(0) = 0."""
    return (x > 0) - (x < 0)


def is_odd_prime(p: int) -> bool:
    """Deterministic trial division; inputs here are small."""
    if p < 3 or p % 2 == 0:
        return False
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


@dataclass(frozen=True)
class UnimodularMatrix:
    """(a, b; c, d) with ad - bc = 1 over arbitrary-size integers."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if det != 1:
            raise DeterminantError(f"determinant is {det}, expected 1")

    def __mul__(self, other: "UnimodularMatrix") -> "UnimodularMatrix":
        return UnimodularMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "UnimodularMatrix":
        return UnimodularMatrix(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "UnimodularMatrix":
        return UnimodularMatrix(self.d, -self.b, -self.c, self.a)

    def trace(self) -> int:
        return self.a + self.d

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __str__(self) -> str:
        return f"{self.a},{self.b},{self.c},{self.d}"


I2 = UnimodularMatrix(1, 0, 0, 1)
S = UnimodularMatrix(0, -1, 1, 0)
T = UnimodularMatrix(1, 1, 0, 1)


def t_power(n: int) -> UnimodularMatrix:
    return UnimodularMatrix(1, n, 0, 1)


def psl_eq(g: UnimodularMatrix, h: UnimodularMatrix) -> bool:
    """Equality in PSL2(Z), i.e. up to overall sign."""
    return g == h or g == -h


def parse_matrix(text: str) -> UnimodularMatrix:
    """Parse "a,b,c,d" (signed decimal integers, no spaces)."""
    parts = text.split(",")
    if len(parts) != 4:
        raise ParseError(f"expected four comma-separated integers, got {text!r}")
    try:
        a, b, c, d = (int(p) for p in parts)
    except ValueError:
        raise ParseError(f"non-integer entry in {text!r}") from None
    return UnimodularMatrix(a, b, c, d)


GAMMA0 = "gamma0"
COSET = "fricke_coset"


@dataclass(frozen=True)
class FrickeElement:
    """Element of the group generated by Gamma0(p) and the involution W_p.

    kind is GAMMA0 or COSET.  For GAMMA0 the integer quadruple is a
    UnimodularMatrix (a,b;c,d) with p | c.  For COSET it is
    (alpha, beta, gamma, delta) with p*alpha*delta - beta*gamma = 1,
    standing for the real matrix (1/sqrt p)(p*alpha, beta; p*gamma, p*delta).
    """

    p: int
    kind: str
    q: tuple[int, int, int, int]

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise NotOddPrimeError(f"p = {self.p} is not an odd prime")
        a, b, c, d = self.q
        if self.kind == GAMMA0:
            if a * d - b * c != 1:
                raise DeterminantError("Gamma0 part must have determinant 1")
            if c % self.p != 0:
                raise DivisibilityError(f"lower-left entry {c} not divisible by {self.p}")
        elif self.kind == COSET:
            if self.p * a * d - b * c != 1:
                raise DeterminantError(
                    f"coset normal form needs p*alpha*delta - beta*gamma = 1, "
                    f"got {self.p * a * d - b * c}"
                )
        else:
            raise ValueError(f"unknown kind {self.kind!r}")

    # -- constructors -------------------------------------------------

    @classmethod
    def gamma0(cls, p: int, m: UnimodularMatrix) -> "FrickeElement":
        return cls(p, GAMMA0, m.entries())

    @classmethod
    def coset(cls, p: int, alpha: int, beta: int, gamma: int, delta: int) -> "FrickeElement":
        return cls(p, COSET, (alpha, beta, gamma, delta))

    @classmethod
    def identity(cls, p: int) -> "FrickeElement":
        return cls.gamma0(p, I2)

    # -- views ---------------------------------------------------------

    @property
    def matrix(self) -> UnimodularMatrix:
        """The Gamma0 part as a UnimodularMatrix; COSET has none."""
        if self.kind != GAMMA0:
            raise ValueError("coset element has no integer SL2 matrix")
        return UnimodularMatrix(*self.q)

    def integer_matrix(self) -> tuple[tuple[int, int, int, int], int]:
        """Integer matrix plus det scale: (entries, 1) for the Gamma0 part,
        ((p*alpha, beta; p*gamma, p*delta), p) for the coset."""
        if self.kind == GAMMA0:
            return self.q, 1
        al, be, ga, de = self.q
        return (self.p * al, be, self.p * ga, self.p * de), self.p

    def same_psl(self, other: "FrickeElement") -> bool:
        """Equality up to overall sign (PSL sense), same p and coset."""
        if self.p != other.p or self.kind != other.kind:
            return False
        a, b, c, d = self.q
        return other.q in ((a, b, c, d), (-a, -b, -c, -d))

    # -- group law ------------------------------------------------------

    def __mul__(self, other: "FrickeElement") -> "FrickeElement":
        if self.p != other.p:
            raise PrimeMismatchError(f"cannot multiply level {self.p} by level {other.p}")
        p = self.p
        m1, s1 = self.integer_matrix()
        m2, s2 = other.integer_matrix()
        prod = (
            m1[0] * m2[0] + m1[1] * m2[2],
            m1[0] * m2[1] + m1[1] * m2[3],
            m1[2] * m2[0] + m1[3] * m2[2],
            m1[2] * m2[1] + m1[3] * m2[3],
        )
        scale = s1 * s2
        if scale == p * p:
            # det p * det p = det p^2 and every entry is divisible by p;
            # dividing through lands back in Gamma0(p).
            prod = tuple(x // p for x in prod)
            scale = 1
        return classify(p, prod, scale)

    def __str__(self) -> str:
        if self.kind == GAMMA0:
            return f"{self.p}|{','.join(map(str, self.q))}"
        return f"{self.p}:{','.join(map(str, self.q))}"


def classify(p: int, m: tuple[int, int, int, int], det_scale: int) -> FrickeElement:
    """Sort an integer matrix with det scale 1 or p into the two cosets.

    det_scale 1: m must be in Gamma0(p).  det_scale p: m must have
    determinant p with p dividing the 11, 21 and 22 entries; the coset
    normal form is then (m11/p, m12, m21/p, m22/p).
    """
    if not is_odd_prime(p):
        raise NotOddPrimeError(f"p = {p} is not an odd prime")
    a, b, c, d = m
    det = a * d - b * c
    if det_scale == 1:
        if det != 1:
            raise DeterminantError(f"determinant is {det}, expected 1")
        if c % p != 0:
            raise DivisibilityError(f"lower-left entry {c} not divisible by {p}")
        return FrickeElement(p, GAMMA0, (a, b, c, d))
    if det_scale == p:
        if det != p:
            raise DeterminantError(f"determinant is {det}, expected {p}")
        if a % p or c % p or d % p:
            raise DivisibilityError(
                f"entries ({a},{c},{d}) must be divisible by {p} in the coset normal form"
            )
        return FrickeElement(p, COSET, (a // p, b, c // p, d // p))
    raise DeterminantError(f"det scale must be 1 or {p}, got {det_scale}")


def fricke_involution(p: int) -> FrickeElement:
    """W_p = (1/sqrt p)(0, -1; p, 0)."""
    return FrickeElement.coset(p, 0, -1, 1, 0)


def parse_fricke(text: str) -> FrickeElement:
    """Parse "p:alpha,beta,gamma,delta" (coset normal form)."""
    head, sep, tail = text.partition(":")
    if not sep:
        raise ParseError(f"expected 'p:alpha,beta,gamma,delta', got {text!r}")
    try:
        p = int(head)
        parts = [int(x) for x in tail.split(",")]
    except ValueError:
        raise ParseError(f"non-integer field in {text!r}") from None
    if len(parts) != 4:
        raise ParseError(f"expected four comma-separated integers after ':' in {text!r}")
    return FrickeElement.coset(p, *parts)
