"""Elementary integer arithmetic shared across the package.

Everything here works on plain Python ints, so there is no overflow to
worry about; the only cost of large inputs is time.  Primality is a
Miller-Rabin test that is deterministic below 2**64 and has error
probability below 2**-128 above.  Factorization is trial division backed
by Brent's variant of Pollard's rho, which is plenty for the desk-scale
inputs this package deals with.
"""

from __future__ import annotations

import math
import random

__all__ = ["is_prime", "kronecker_symbol", "factorize", "euler_phi"]

# Sufficient witness set for deterministic Miller-Rabin below 2**64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_EXTRA_ROUNDS = 64  # error < 4**-64 = 2**-128 for inputs >= 2**64


def is_prime(n: int) -> bool:
    """Primality test: deterministic below 2**64, Miller-Rabin above."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    witnesses = list(_MR_WITNESSES)
    if n >= 1 << 64:
        # Bases seeded from n itself: deterministic output, random-base
        # error bound in practice.
        rng = random.Random(n)
        witnesses += [rng.randrange(2, n - 1) for _ in range(_EXTRA_ROUNDS)]
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a|n), the usual extension of the Jacobi symbol.

    Multiplicative in both arguments; for an odd prime n it agrees with
    the Legendre symbol, so (a|n) == 1 exactly when a is a nonzero square
    mod n.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    t = (n & -n).bit_length() - 1
    n >>= t
    if t:
        if a & 1 == 0:
            return 0
        if t & 1 and a % 8 in (3, 5):
            result = -result
    a %= n
    while a:
        t = (a & -a).bit_length() - 1
        a >>= t
        if t & 1 and n % 8 in (3, 5):
            result = -result
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a, n = n % a, a
    return result if n == 1 else 0


def _pollard_rho(n: int) -> int:
    """One nontrivial factor of composite n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    # wheel over 6k +- 1 up to 10**4, then rho on what is left
    f = 7
    step = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while f <= 10**4 and f * f <= n:
        while n % f == 0:
            factors[f] = factors.get(f, 0) + 1
            n //= f
        f += step[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        n = stack.pop()
        if n == 1:
            continue
        if is_prime(n):
            factors[n] = factors.get(n, 0) + 1
            continue
        if math.isqrt(n) ** 2 == n:
            stack += [math.isqrt(n)] * 2
            continue
        d = _pollard_rho(n)
        stack += [d, n // d]
    return factors


def euler_phi(n: int) -> int:
    """Euler totient, via the factorization of n."""
    out = 1
    for p, e in factorize(n).items():
        out *= (p - 1) * p ** (e - 1)
    return out
