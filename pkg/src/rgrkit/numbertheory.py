"""Small number-theory helpers: primality, factoring, primitive roots.

Everything here is plain trial division; inputs stay far below 10**6 in
practice, so no sieve caching or probabilistic tests are needed.
"""

from .errors import NotPrime, NotPrimitiveRoot


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, m) with n = p**m, or None if n is not a prime power."""
    if n < 2:
        return None
    factors = factorize(n)
    if len(factors) != 1:
        return None
    p, m = next(iter(factors.items()))
    return p, m


def is_primitive_root(g: int, p: int) -> bool:
    """True iff g generates the multiplicative group mod the prime p."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    g %= p
    if g == 0:
        return False
    return all(pow(g, (p - 1) // q, p) != 1 for q in factorize(p - 1))


def primitive_roots(p: int) -> list[int]:
    """All primitive roots modulo the prime p, ascending."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        return [1]
    prime_divs = list(factorize(p - 1))
    return [
        g
        for g in range(2, p)
        if all(pow(g, (p - 1) // q, p) != 1 for q in prime_divs)
    ]


def require_primitive_root(g: int, p: int) -> None:
    if not is_primitive_root(g, p):
        raise NotPrimitiveRoot(f"{g} is not a primitive root mod {p}")


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    """Solve x = r1 (mod m1), x = r2 (mod m2) for coprime m1, m2."""
    inv = pow(m1, -1, m2)
    return (r1 + m1 * ((r2 - r1) * inv % m2)) % (m1 * m2)
