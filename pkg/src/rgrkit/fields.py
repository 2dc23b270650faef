"""Finite field arithmetic GF(p^m) and the classical MOLS family.

Elements of GF(p^m) are encoded as integers 0..q-1 whose base-p digits
are the coefficients of a polynomial (constant term = least significant
digit), reduced modulo a monic irreducible of degree m.  The modulus is
chosen deterministically: the first irreducible when monic degree-m
polynomials are ordered by their coefficient string read as a base-p
integer, highest degree first.
"""

from __future__ import annotations

from .errors import NotPrimePower, TooManyRequested
from .numbertheory import prime_power

MAX_ORDER = 1024


class FiniteField:
    def __init__(self, q: int):
        pm = prime_power(q)
        if pm is None:
            raise NotPrimePower(f"{q} is not a prime power")
        if q > MAX_ORDER:
            raise NotPrimePower(f"field order {q} exceeds the supported {MAX_ORDER}")
        self.q = q
        self.p, self.m = pm
        self.modulus = _lex_least_irreducible(self.p, self.m) if self.m > 1 else (0, 1)
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"FiniteField({self.q})"

    @property
    def elements(self) -> range:
        return range(self.q)

    def coeffs(self, e: int) -> tuple[int, ...]:
        """Polynomial coefficients of an element, constant term first."""
        out = []
        for _ in range(self.m):
            out.append(e % self.p)
            e //= self.p
        return tuple(out)

    def encode(self, coeffs) -> int:
        e = 0
        for c in reversed(list(coeffs)):
            e = e * self.p + c % self.p
        return e

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        return self.encode(x + y for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        return self.encode(-x for x in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        prod = _poly_mul(self.coeffs(a), self.coeffs(b), self.p)
        return self.encode(_poly_rem(prod, self.modulus, self.p))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        # a^(q-2) = a^-1 in GF(q)
        result, base, e = self.one, a, self.q - 2
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def poly_str(self) -> str:
        """Human-readable modulus, e.g. "x^3 + x + 1" (prime fields: "x")."""
        if self.m == 1:
            return "x"
        terms = []
        for i in range(len(self.modulus) - 1, -1, -1):
            c = self.modulus[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                coef = "" if c == 1 else str(c)
                power = "x" if i == 1 else f"x^{i}"
                terms.append(coef + power)
        return " + ".join(terms)


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_rem(a, mod, p):
    """Remainder of a modulo a monic polynomial, coefficients in GF(p)."""
    a = list(a)
    deg_mod = len(mod) - 1
    for i in range(len(a) - 1, deg_mod - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(deg_mod):
                a[i - deg_mod + j] = (a[i - deg_mod + j] - c * mod[j]) % p
    return a[:deg_mod]


def _is_irreducible(poly, p):
    """Trial division by all monic polynomials of degree 1..deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for idx in range(p**d):
            div = _digits(idx, p, d) + [1]
            if not any(_poly_rem(poly, div, p)):
                return False
    return True


def _digits(n, p, width):
    out = []
    for _ in range(width):
        out.append(n % p)
        n //= p
    return out


def _lex_least_irreducible(p: int, m: int) -> tuple[int, ...]:
    for low in range(p**m):
        poly = _digits(low, p, m) + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError(f"no irreducible of degree {m} over GF({p})")


def make_field(q: int) -> FiniteField:
    return FiniteField(q)


def mols(q: int, count: int) -> list[list[list[int]]]:
    """``count`` mutually orthogonal latin squares of order q, built as
    L_c(a, b) = a + c*b over GF(q) for the first ``count`` nonzero c."""
    field = make_field(q)
    if not 1 <= count <= q - 1:
        raise TooManyRequested(f"at most {q - 1} MOLS of order {q}, asked for {count}")
    return [
        [[field.add(a, field.mul(c, b)) for b in field.elements] for a in field.elements]
        for c in range(1, count + 1)
    ]
