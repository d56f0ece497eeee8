"""The set of moduli d for which f(x) = 0 mod d is solvable.

Membership is decided by true solvability: factor d, get the roots of f
modulo each prime, lift them power by power, and combine by the Chinese
remainder principle (solvable mod d iff solvable mod every prime-power
part). Lifting from p^j to p^(j+1) uses the exact expansion
f(r + t*p^j) = f(r) + f'(r)*t*p^j (mod p^(j+1)) valid for j >= 1, which
keeps this route structurally independent of the linear-scan oracle
rho_bruteforce that the tests compare it against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import ArithTables, Polynomial, factorize, sieve_range
from .errors import DomainError, ResourceError
from .residues import roots_mod

ENUMERATION_LIMIT = 10**7
GENERAL_POLY_LIMIT = 10**5  # per-prime root scans get quadratic beyond this
_ROOT_SET_CAP = 10**6


def _derivative(f: Polynomial) -> Polynomial:
    coeffs = tuple(i * c for i, c in enumerate(f.coefficients))[1:]
    return Polynomial(coeffs if coeffs else (0,))


def _lift_once(f: Polynomial, fprime: Polynomial, roots: list[int], p: int, j: int) -> list[int]:
    """Roots of f mod p^(j+1) from the roots mod p^j, j >= 1."""
    pj = p**j
    mod_next = pj * p
    out = []
    for r in roots:
        a = (f(r) // pj) % p
        b = fprime(r) % p
        if b != 0:
            t = (-a * pow(b, -1, p)) % p
            out.append(r + t * pj)
        elif a == 0:
            out.extend(r + t * pj for t in range(p))
            if len(out) > _ROOT_SET_CAP:
                raise ResourceError(f"root set mod {mod_next} exceeded {_ROOT_SET_CAP} entries")
    return out


def _roots_mod_prime_power(f: Polynomial, p: int, e: int) -> list[int]:
    roots = roots_mod(f, p)
    fprime = _derivative(f)
    for j in range(1, e):
        if not roots:
            return []
        roots = _lift_once(f, fprime, roots, p, j)
    return sorted(roots)


def in_dset(f: Polynomial, d: int) -> bool:
    """True iff f(x) = 0 mod d has a solution."""
    if d < 1:
        raise DomainError(f"modulus {d} must be >= 1")
    if d == 1:
        return True
    for p, e in factorize(d).factors:
        if not _roots_mod_prime_power(f, p, e):
            return False
    return True


def _solvable_mod_prime(f: Polynomial, p: int) -> bool:
    k = f.pure_cubic_shift()
    if k is not None:
        # cube map is onto for p = 3 and p = 2 mod 3; otherwise Euler test on -k
        if k % p == 0 or p % 3 != 1:
            return True
        return pow((-k) % p, (p - 1) // 3, p) == 1
    return bool(roots_mod(f, p))


def enumerate_dset(f: Polynomial, limit: int) -> list[int]:
    """Sorted list of every solvable modulus d <= limit.

    Sieve-style: for each prime, find the largest exponent E with
    f solvable mod p^E inside the limit, then strike all multiples of
    p^(E+1). A modulus survives iff each of its prime-power parts is
    solvable. The pure cubic family x^3 + k gets an Euler-criterion fast
    path for large primes; other polynomials fall back to per-prime root
    scans and are held to a smaller limit.
    """
    if limit < 1:
        raise DomainError(f"limit {limit} must be >= 1")
    if limit > ENUMERATION_LIMIT:
        raise ResourceError(f"limit {limit} exceeds enumeration budget {ENUMERATION_LIMIT}")
    if f.pure_cubic_shift() is None and limit > GENERAL_POLY_LIMIT:
        raise ResourceError(
            f"limit {limit} exceeds budget {GENERAL_POLY_LIMIT} for general polynomials"
        )
    ok = np.ones(limit + 1, dtype=bool)
    ok[0] = False
    if limit == 1:
        return [1]
    fprime = _derivative(f)
    boundary = math.isqrt(limit)
    for p in _primes_iter(limit):
        if p <= boundary:
            roots = roots_mod(f, p)
            if not roots:
                ok[p::p] = False
                continue
            q, j = p * p, 1
            while q <= limit:
                roots = _lift_once(f, fprime, roots, p, j)
                if not roots:
                    ok[q::q] = False
                    break
                q, j = q * p, j + 1
        elif not _solvable_mod_prime(f, p):
            ok[p::p] = False
    return np.flatnonzero(ok).tolist()


def _primes_iter(limit: int):
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return (int(p) for p in np.flatnonzero(flags))


@dataclass(frozen=True)
class DsetStats:
    """Counts of solvable moduli at checkpoints, with an empirical decay fit.

    checkpoints holds (x, count_at_x, count_at_x / x) triples.
    decay_exponent is beta fitted from ratio ~ C / (log x)^beta; it is a
    report, not a verified quantity, and is None when too few checkpoints
    support a fit.
    """

    limit: int
    count: int
    checkpoints: list[tuple[int, int, float]]
    decay_exponent: float | None


def dset_density(f: Polynomial, limit: int, checkpoints: list[int]) -> DsetStats:
    """Membership counts and density ratios at the given checkpoints."""
    if not checkpoints or any(c < 1 or c > limit for c in checkpoints):
        raise DomainError("checkpoints must be nonempty and within [1, limit]")
    if sorted(checkpoints) != list(checkpoints):
        raise DomainError("checkpoints must be ascending")
    members = np.asarray(enumerate_dset(f, limit), dtype=np.int64)
    rows = []
    for x in checkpoints:
        cnt = int(np.searchsorted(members, x, side="right"))
        rows.append((x, cnt, cnt / x))
    beta = None
    pts = [(x, r) for x, _, r in rows if x >= 3 and r > 0]
    if len({x for x, _ in pts}) >= 2:
        lx = np.log(np.log([float(x) for x, _ in pts]))
        ly = np.log([r for _, r in pts])
        slope = np.polyfit(lx, ly, 1)[0]
        beta = float(-slope)
    return DsetStats(
        limit=limit,
        count=len(members),
        checkpoints=rows,
        decay_exponent=beta,
    )


def members_and_mobius(f: Polynomial, limit: int, tables: ArithTables | None = None):
    """Solvable moduli <= limit alongside their Mobius values; shared by the
    series partial sums."""
    if tables is None or tables.limit < limit:
        tables = sieve_range(max(limit, 2))
    members = np.asarray(enumerate_dset(f, limit), dtype=np.int64)
    return members, tables.mu[members]
