"""Arithmetic substrate: primality, primitive roots, Legendre symbols and
the order-4 cyclotomic classes for primes p = x^2 + 4 with (p-1)/4 odd."""

from dataclasses import dataclass, replace
from math import gcd, isqrt

# Deterministic Miller-Rabin witnesses for every n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class InadmissiblePrime(ValueError):
    """Raised when p cannot seed the period-4p construction."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def admissibility_failure(p: int) -> str | None:
    """Return a description of the first failed condition, or None if p is admissible."""
    if p < 2 or not is_prime(p):
        return f"p={p} is not prime"
    if (p - 1) % 4 != 0:
        return f"p={p} is not 1 mod 4"
    if ((p - 1) // 4) % 2 == 0:
        return f"f=(p-1)/4={(p - 1) // 4} is not odd"
    r = isqrt(p - 4)
    if r * r != p - 4:
        return f"p-4={p - 4} is not a perfect square (need p = x^2 + 4 with y = +-1)"
    return None


def is_admissible_prime(p: int) -> bool:
    return admissibility_failure(p) is None


def admissible_primes(max_p: int) -> list[int]:
    # p = x^2 + 4 with x odd; walk x instead of every integer
    out = []
    x = 1
    while x * x + 4 <= max_p:
        if is_admissible_prime(x * x + 4):
            out.append(x * x + 4)
        x += 2
    return out


def _prime_factors(n: int) -> list[int]:
    fs = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            fs.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        fs.append(n)
    return fs


def multiplicative_order(a: int, p: int) -> int:
    if gcd(a, p) != 1:
        raise ValueError(f"{a} is not a unit mod {p}")
    order = p - 1
    for q in _prime_factors(p - 1):
        while order % q == 0 and pow(a, order // q, p) == 1:
            order //= q
    return order


def is_primitive_root(g: int, p: int) -> bool:
    return g % p != 0 and multiplicative_order(g % p, p) == p - 1


def smallest_primitive_root(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    for g in range(2, p):
        if is_primitive_root(g, p):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


def legendre(i: int, p: int) -> int:
    """Quadratic character (i/p) via Euler's criterion."""
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"legendre symbol needs an odd prime, got {p}")
    r = pow(i % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def cyclotomic_classes(p: int, g: int) -> tuple[frozenset, ...]:
    """The four cosets D_j = g^j <g^4> of the quartic residues mod p."""
    if (p - 1) % 4:
        raise ValueError(f"p={p} is not 1 mod 4")
    if not is_primitive_root(g, p):
        raise ValueError(f"g={g} is not a primitive root mod {p}")
    f = (p - 1) // 4
    return tuple(frozenset(pow(g, j + 4 * i, p) for i in range(f)) for j in range(4))


def big_power_mod(base: int, exponent: int, modulus: int) -> int:
    if modulus == 0:
        raise ZeroDivisionError("modulus must be nonzero")
    if modulus < 0:
        raise ValueError("modulus must be positive")
    return pow(base, exponent, modulus)


def big_gcd(a: int, b: int) -> int:
    return gcd(a, b)


@dataclass(frozen=True)
class ConstructionParams:
    """Arithmetic context for one admissible prime.

    ``y`` is provisional (+1) until fixed with ``correlation.resolve_y_sign``.
    """

    p: int
    f: int
    x: int
    y: int
    g: int
    d: int
    classes: tuple[frozenset, frozenset, frozenset, frozenset]

    @property
    def quadratic_residues(self) -> frozenset:
        return self.classes[0] | self.classes[2]

    @property
    def nonresidues(self) -> frozenset:
        return self.classes[1] | self.classes[3]

    def with_y(self, y: int) -> "ConstructionParams":
        if y not in (1, -1):
            raise ValueError("y must be +1 or -1")
        return replace(self, y=y)


def build_params(p: int) -> ConstructionParams:
    why = admissibility_failure(p)
    if why is not None:
        raise InadmissiblePrime(why)
    g = smallest_primitive_root(p)
    return ConstructionParams(
        p=p,
        f=(p - 1) // 4,
        x=isqrt(p - 4),
        y=1,
        g=g,
        d=pow(4, -1, p),
        classes=cyclotomic_classes(p, g),
    )
