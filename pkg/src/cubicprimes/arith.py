"""Integer arithmetic underneath everything else: sieves, the Mobius and
von Mangoldt functions, deterministic 64-bit primality, factorization,
exact integer roots, and the fixed divisor of an integer polynomial.

Values handled here are plain Python ints, which never overflow;
the 64-bit guards below are input budgets, not wraparound protection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import count

import numpy as np

from .errors import CapacityError, DomainError, ResourceError

U64_MAX = 2**64 - 1
SIEVE_LIMIT_MAX = 10**9  # memory guard for sieve_range


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial, coefficients stored lowest degree first.

    The CLI accepts highest-first input behind an explicit flag; inside the
    package the order is always lowest-first, e.g. x^3 + 2 is (2, 0, 0, 1).
    """

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs:
            coeffs = (0,)
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def cubic(cls, k: int) -> "Polynomial":
        """The family member x^3 + k."""
        return cls((k, 0, 0, 1))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return self.coefficients == (0,)

    def pure_cubic_shift(self) -> int | None:
        """Return k when this polynomial is exactly x^3 + k, else None."""
        c = self.coefficients
        if len(c) == 4 and c[1] == 0 and c[2] == 0 and c[3] == 1:
            return c[0]
        return None

    def __call__(self, n: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * n + c
        return acc

    def eval_mod(self, n: int, m: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = (acc * n + c) % m
        return acc

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coefficients):
            if c == 0 and self.degree > 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(reversed(parts)) if parts else "0"


@dataclass(frozen=True)
class ArithTables:
    """Sieve output for 2..limit: smallest prime factors, Mobius values,
    and the ascending list of primes.

    spf and mu are numpy arrays indexed directly by n (entries 0 and 1 are
    padding); primes is an int64 array.
    """

    limit: int
    spf: np.ndarray
    mu: np.ndarray
    primes: np.ndarray


@dataclass(frozen=True)
class Factorization:
    """n as a sorted tuple of (prime, exponent) pairs."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def reassemble(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    @property
    def distinct_primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def sieve_range(limit: int, *, max_limit: int = SIEVE_LIMIT_MAX) -> ArithTables:
    """Sieve smallest prime factors and Mobius values for 2..limit.

    limit outside [2, max_limit] raises CapacityError; the default cap keeps
    the two tables (int32 + int8) around 5 bytes per entry.
    """
    if limit < 2 or limit > max_limit:
        raise CapacityError(f"sieve limit {limit} outside [2, {max_limit}]")
    spf = np.zeros(limit + 1, dtype=np.int32)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            spf[p] = p
            block = spf[p * p :: p]
            block[block == 0] = p
    rest = np.flatnonzero(spf == 0)
    spf[rest] = rest
    spf[0] = spf[1] = 0

    idx = np.arange(limit + 1, dtype=np.int32)
    primes = np.flatnonzero((spf == idx) & (idx >= 2)).astype(np.int64)

    mu = np.ones(limit + 1, dtype=np.int8)
    mu[0] = 0
    for p in primes:
        p = int(p)
        mu[p::p] *= -1
        sq = p * p
        if sq <= limit:
            mu[sq::sq] = 0
    return ArithTables(limit=limit, spf=spf, mu=mu, primes=primes)


def primes_up_to(limit: int) -> np.ndarray:
    """Ascending primes <= limit via a plain boolean sieve (no spf/mu tables)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    if limit > SIEVE_LIMIT_MAX:
        raise CapacityError(f"prime sieve limit {limit} above {SIEVE_LIMIT_MAX}")
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def mobius(n: int, tables: ArithTables) -> int:
    """Mobius function looked up from sieved tables."""
    if n < 1 or n > tables.limit:
        raise DomainError(f"mobius argument {n} outside table range [1, {tables.limit}]")
    return int(tables.mu[n])


# Strong-pseudoprime bases covering every n < 2^64; any composite in that
# range fails at least one of them.
_MR_BASES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality for 0 <= n < 2^64 (true answer, no error bound)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        a %= n
        if a == 0:
            continue
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


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of composite n. Deterministic: the polynomial
    increment c steps through 1, 2, 3, ... until a factor appears."""
    if n % 2 == 0:
        return 2
    for c in count(1):
        if c > 200:
            raise ResourceError(f"factor search exhausted its parameter budget on {n}")
        y, r, q = 2, 1, 1
        g, ys, x = 1, y, y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@lru_cache(maxsize=1)
def _trial_primes() -> tuple[int, ...]:
    return tuple(int(p) for p in primes_up_to(1000))


def factorize(n: int) -> Factorization:
    """Full factorization of n >= 1: trial division by primes below 1000,
    then deterministic Pollard-Brent splitting with primality certification
    of every final factor."""
    if n < 1:
        raise DomainError(f"cannot factor {n}; argument must be >= 1")
    m = n
    found: dict[int, int] = {}
    for p in _trial_primes():
        if p * p > m:
            break
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    stack = [m] if m > 1 else []
    while stack:
        v = stack.pop()
        if is_prime(v):
            found[v] = found.get(v, 0) + 1
            continue
        d = _pollard_brent(v)
        stack.append(d)
        stack.append(v // d)
    return Factorization(n=n, factors=tuple(sorted(found.items())))


def divisors(fact: Factorization) -> list[int]:
    """All divisors of the factored integer, ascending."""
    out = [1]
    for p, e in fact.factors:
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def von_mangoldt(n: int) -> float:
    """log p when n is a prime power p^v (v >= 1), else 0. Computed from the
    factorization so it works far beyond any sieve table."""
    if n < 1:
        raise DomainError(f"von Mangoldt argument {n} must be >= 1")
    if n == 1:
        return 0.0
    fact = factorize(n)
    if len(fact.factors) == 1:
        return math.log(fact.factors[0][0])
    return 0.0


def von_mangoldt_via_mobius(n: int) -> float:
    """The same value as von_mangoldt, but through the divisor identity
    -sum_{d | n} mu(d) log d, with every divisor enumerated explicitly.

    Kept as a second, structurally different route so the two can be
    cross-checked over a range.
    """
    if n < 1:
        raise DomainError(f"argument {n} must be >= 1")
    fact = factorize(n)
    primes = fact.distinct_primes
    total = 0.0
    # mu kills every non-squarefree divisor, but they are walked anyway:
    # each divisor is assembled from its exponent vector and scored.
    exps = [0] * len(primes)
    maxes = [e for _, e in fact.factors]
    while True:
        d = 1
        squarefree = True
        odd_primes = 0
        for p, e in zip(primes, exps):
            if e:
                d *= p**e
                odd_primes += 1
                if e > 1:
                    squarefree = False
        if squarefree and d > 1:
            total += (-1 if odd_primes % 2 else 1) * math.log(d)
        i = 0
        while i < len(exps) and exps[i] == maxes[i]:
            exps[i] = 0
            i += 1
        if i == len(exps):
            break
        exps[i] += 1
    return -total


def integer_cuberoot(n: int) -> int:
    """floor(n^(1/3)) exactly, including at perfect-cube boundaries."""
    if n < 0:
        raise DomainError(f"cube root argument {n} must be >= 0")
    if n == 0:
        return 0
    x = int(round(n ** (1.0 / 3.0)))
    while x > 0 and x * x * x > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


def integer_root(n: int, k: int) -> int:
    """floor(n^(1/k)) exactly for n >= 0, k >= 1."""
    if n < 0 or k < 1:
        raise DomainError(f"integer_root({n}, {k}) outside domain")
    if k == 1 or n < 2:
        return n
    if k == 2:
        return math.isqrt(n)
    x = max(1, int(n ** (1.0 / k)))
    while x > 1 and x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def fixed_divisor(f: Polynomial) -> int:
    """gcd of f(n) over all integers n.

    It suffices to take gcd(f(0), ..., f(deg f)): the forward differences
    of f at 0 determine f via the binomial expansion
    f(n) = sum_j (Delta^j f)(0) * C(n, j), the j-th difference is an integer
    combination of f(0..j), and C(n, j) is an integer for every integer n.
    So any common divisor of f(0..deg f) divides every value, and conversely.
    """
    if f.is_zero:
        raise DomainError("fixed divisor of the zero polynomial is undefined")
    if f.degree < 1:
        raise DomainError("fixed divisor requires degree >= 1")
    g = 0
    for n in range(f.degree + 1):
        g = math.gcd(g, f(n))
    return g


def totient(n: int) -> int:
    """Euler phi for n >= 1; 0 for n <= 0 (index weights vanish there)."""
    if n <= 0:
        return 0
    out = n
    for p, _ in factorize(n).factors:
        out -= out // p
    return out


def sigma(n: int) -> int:
    """Sum of divisors for n >= 1; 0 for n <= 0."""
    if n <= 0:
        return 0
    out = 1
    for p, e in factorize(n).factors:
        out *= (p ** (e + 1) - 1) // (p - 1)
    return out


def tau(n: int) -> int:
    """Number of divisors for n >= 1; 0 for n <= 0."""
    if n <= 0:
        return 0
    out = 1
    for _, e in factorize(n).factors:
        out *= e + 1
    return out
